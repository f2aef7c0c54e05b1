#include "dminor/pathdecomp.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace dminor {

int PathDecomposition::min_bag() const {
  int m = std::numeric_limits<int>::max();
  for (const auto& b : bags) m = std::min(m, static_cast<int>(b.size()));
  return bags.empty() ? 0 : m;
}

int PathDecomposition::max_bag() const {
  int m = 0;
  for (const auto& b : bags) m = std::max(m, static_cast<int>(b.size()));
  return m;
}

LexMeasure lex_measure(const PathDecomposition& p, int k) {
  LexMeasure counts(k + 1, 0);
  for (const auto& b : p.bags) {
    if (static_cast<int>(b.size()) > k) throw std::invalid_argument("bag larger than k");
    ++counts[b.size()];
  }
  return counts;
}

namespace {

// Occurrence interval [first, last] per vertex; -1 when absent.
struct Occurrence {
  std::vector<int> first;
  std::vector<int> last;
};

Occurrence occurrences(int n, const PathDecomposition& p) {
  Occurrence occ{std::vector<int>(n, -1), std::vector<int>(n, -1)};
  for (int i = 0; i < p.length(); ++i)
    for (Vertex v : p.bags[i]) {
      if (occ.first[v] < 0) occ.first[v] = i;
      occ.last[v] = i;
    }
  return occ;
}

void check_bags(const Digraph& g, const PathDecomposition& p) {
  if (p.bags.empty()) throw std::invalid_argument("a path-decomposition needs at least one bag");
  for (const auto& bag : p.bags)
    for (Vertex v : bag)
      if (v < 0 || v >= g.vertex_count())
        throw std::invalid_argument("bag vertex " + std::to_string(v) + " out of range");
}

LinkedFlags check_linked_conditions(const Digraph& g, const PathDecomposition& p) {
  LinkedFlags flags;
  const int r = p.length();
  flags.increment_ok = true;
  for (int i = 0; i + 1 < r; ++i)
    if (symmetric_difference_size(p.bags[i], p.bags[i + 1]) != 1) {
      flags.increment_ok = false;
      flags.increment_witness = i;
      break;
    }
  const int m = p.min_bag();
  flags.cardinality_ok = static_cast<int>(p.first().size()) == m &&
                         static_cast<int>(p.last().size()) == m;
  flags.linked_ok = true;
  for (int h = 0; h < r && flags.linked_ok; ++h) {
    int t = static_cast<int>(p.bags[h].size());
    for (int j = h + 1; j < r; ++j) {
      t = std::min(t, static_cast<int>(p.bags[j].size()));
      if (t == 0) break;
      if (max_disjoint_path_count(g, p.bags[h], p.bags[j], t) < t) {
        flags.linked_ok = false;
        flags.witness = LinkedWitness{h, j, t, min_separation(g, p.bags[h], p.bags[j])};
        break;
      }
    }
  }
  return flags;
}

}  // namespace

DecompositionReport verify(const Digraph& g, const PathDecomposition& p, bool check_linked) {
  check_bags(g, p);
  DecompositionReport rep;
  const int n = g.vertex_count();
  const Occurrence occ = occurrences(n, p);

  rep.coverage_ok = true;
  for (Vertex v = 0; v < n; ++v)
    if (occ.first[v] < 0) {
      rep.coverage_ok = false;
      rep.uncovered = v;
      break;
    }

  rep.betweenness_ok = true;
  for (Vertex v = 0; v < n && rep.betweenness_ok; ++v) {
    if (occ.first[v] < 0) continue;
    for (int i = occ.first[v] + 1; i < occ.last[v]; ++i)
      if (!p.bags[i].contains(v)) {
        rep.betweenness_ok = false;
        rep.betweenness_witness = BetweennessWitness{v, occ.first[v], i, occ.last[v]};
        break;
      }
  }

  // uv needs i <= j with v in W_i and u in W_j.
  rep.cut_ok = true;
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    int head_first = occ.first[edge.head];
    int tail_last = occ.last[edge.tail];
    if (head_first < 0 || tail_last < 0 || head_first > tail_last) {
      rep.cut_ok = false;
      rep.cut_witness = e;
      break;
    }
  }

  rep.min_bag = p.min_bag();
  rep.max_bag = p.max_bag();
  rep.width = rep.max_bag - 1;
  if (check_linked) rep.linked = check_linked_conditions(g, p);
  return rep;
}

bool is_path_decomposition(const Digraph& g, const PathDecomposition& p) {
  return verify(g, p, false).valid();
}

PathDecomposition normalize(const Digraph& g, const PathDecomposition& p) {
  if (!is_path_decomposition(g, p))
    throw std::invalid_argument("normalize needs a valid path-decomposition");
  PathDecomposition out;
  out.bags.push_back(p.bags.front());
  for (int i = 1; i < p.length(); ++i) {
    const VertexSet& next = p.bags[i];
    VertexSet cur = out.bags.back();
    if (cur == next) continue;
    for (Vertex v : set_difference(cur, next)) {
      cur.erase(v);
      out.bags.push_back(cur);
    }
    for (Vertex v : set_difference(next, cur)) {
      cur.insert(v);
      out.bags.push_back(cur);
    }
  }
  return out;
}

PathDecomposition pad_empty_ends(const PathDecomposition& p) {
  PathDecomposition out = p;
  if (out.bags.empty() || !out.bags.front().empty()) out.bags.insert(out.bags.begin(), VertexSet{});
  if (!out.bags.back().empty()) out.bags.push_back(VertexSet{});
  return out;
}

PathDecomposition transform_delete_vertex(const PathDecomposition& p, Vertex v) {
  PathDecomposition out;
  for (const auto& bag : p.bags) {
    std::vector<Vertex> kept;
    for (Vertex w : bag)
      if (w != v) kept.push_back(w > v ? w - 1 : w);
    out.bags.emplace_back(std::move(kept));
  }
  return out;
}

PathDecomposition transform_delete_edge(const Digraph& g, const PathDecomposition& p,
                                        int edge_index) {
  if (edge_index < 0 || edge_index >= g.edge_count())
    throw std::invalid_argument("edge out of range");
  return p;
}

ContractedDecomposition transform_under_contraction(const Digraph& g, const PathDecomposition& p,
                                                    const Subdigraph& h) {
  check_bags(g, p);
  ContractedDecomposition out{contract(g, h), {}};
  std::vector<int> touching;
  for (int i = 0; i < p.length(); ++i)
    if (intersects(p.bags[i], h.vertices)) touching.push_back(i);
  if (touching.empty() ||
      touching.back() - touching.front() + 1 != static_cast<int>(touching.size()))
    throw std::logic_error("bags meeting the contracted subdigraph do not form an interval");

  const auto& map = out.contraction.vertex_map;
  for (int i = 0; i < p.length(); ++i) {
    std::vector<Vertex> bag;
    for (Vertex v : p.bags[i]) bag.push_back(map[v]);
    out.decomposition.bags.emplace_back(std::move(bag));
  }
  return out;
}

namespace {

std::optional<std::pair<int, int>> first_violation(const Digraph& g, const PathDecomposition& p,
                                                   int* t_out) {
  const int r = p.length();
  for (int h = 0; h < r; ++h) {
    int t = static_cast<int>(p.bags[h].size());
    for (int j = h + 1; j < r; ++j) {
      t = std::min(t, static_cast<int>(p.bags[j].size()));
      if (t == 0) break;
      if (max_disjoint_path_count(g, p.bags[h], p.bags[j], t) < t) {
        *t_out = t;
        return std::pair{h, j};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

PathDecomposition build_linked(const Digraph& g, const PathDecomposition& p, const VertexSet& a,
                               const VertexSet& b, BuildLinkedTrace* trace) {
  if (!is_semi_complete(g)) throw std::invalid_argument("build_linked needs a semi-complete digraph");
  if (!is_path_decomposition(g, p)) throw std::invalid_argument("input is not a path-decomposition");
  if (p.first() != a || p.last() != b)
    throw std::invalid_argument("decomposition must start with a and end with b");
  if (a.size() != b.size()) throw std::invalid_argument("|a| and |b| differ");
  const int m = static_cast<int>(a.size());
  if (max_disjoint_path_count(g, a, b, m) < m)
    throw std::invalid_argument("fewer than |a| disjoint paths from a to b");

  const int k = p.max_bag();
  PathDecomposition cur = normalize(g, p);
  LexMeasure measure = lex_measure(cur, k);
  if (trace) trace->measures.push_back(measure);

  for (;;) {
    int t = 0;
    auto violation = first_violation(g, cur, &t);
    if (!violation) break;
    auto [h, j] = *violation;
    const int r = cur.length();

    std::vector<Vertex> left, right;
    for (int i = 0; i <= h; ++i) left.insert(left.end(), cur.bags[i].begin(), cur.bags[i].end());
    for (int i = j; i < r; ++i) right.insert(right.end(), cur.bags[i].begin(), cur.bags[i].end());
    const VertexSet x(std::move(left)), y(std::move(right));

    const Separation sep = min_separation(g, x, y);
    const VertexSet cd = set_intersection(sep.c, sep.d);
    const int s = static_cast<int>(cd.size());
    if (s >= t) throw std::logic_error("minimum separation does not certify the violation");

    const PathSystem paths = minimal_union_paths(g, x, y, s);
    std::vector<Vertex> crossing;  // p_l
    std::vector<VertexSet> on_path;
    for (const Path& path : paths.paths) {
      VertexSet vs(path.begin(), path.end());
      VertexSet hit = set_intersection(vs, cd);
      if (hit.size() != 1) throw std::logic_error("path does not cross C ∩ D exactly once");
      crossing.push_back(hit.front());
      on_path.push_back(std::move(vs));
    }

    PathDecomposition next;
    for (int i = 0; i <= j; ++i) {
      VertexSet bag = set_intersection(cur.bags[i], sep.c);
      VertexSet beyond = set_intersection(cur.bags[i], sep.d);
      for (int l = 0; l < s; ++l)
        if (intersects(beyond, on_path[l])) bag.insert(crossing[l]);
      next.bags.push_back(std::move(bag));
    }
    for (int i = h; i < r; ++i) {
      VertexSet bag = set_intersection(cur.bags[i], sep.d);
      VertexSet before = set_intersection(cur.bags[i], sep.c);
      for (int l = 0; l < s; ++l)
        if (intersects(before, on_path[l])) bag.insert(crossing[l]);
      next.bags.push_back(std::move(bag));
    }
    if (!is_path_decomposition(g, next))
      throw std::logic_error("concatenated decomposition is invalid");
    next = normalize(g, next);

    LexMeasure improved = lex_measure(next, k);
    if (next.first() != a || next.last() != b)
      throw std::logic_error("improvement changed the end bags");
    if (!(improved > measure)) throw std::logic_error("lexicographic measure did not increase");
    cur = std::move(next);
    measure = std::move(improved);
    if (trace) {
      ++trace->rounds;
      trace->measures.push_back(measure);
    }
  }
  return cur;
}

}  // namespace dminor
