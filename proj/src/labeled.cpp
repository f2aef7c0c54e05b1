#include "dminor/labeled.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "dminor/pathwidth.hpp"

namespace dminor {

QuasiOrder::QuasiOrder(int size) : size_(size), table_(static_cast<std::size_t>(size) * size, 0) {
  if (size < 1) throw std::invalid_argument("a quasi-order needs at least one token");
  for (int t = 0; t < size; ++t) table_[t * size + t] = 1;
}

QuasiOrder::QuasiOrder(int size, std::vector<char> table) : size_(size), table_(std::move(table)) {
  if (size < 1) throw std::invalid_argument("a quasi-order needs at least one token");
  if (static_cast<int>(table_.size()) != size * size)
    throw std::invalid_argument("relation table has the wrong size");
  for (int a = 0; a < size; ++a) {
    if (!leq(a, a)) throw std::invalid_argument("relation is not reflexive");
    for (int b = 0; b < size; ++b)
      for (int c = 0; c < size; ++c)
        if (leq(a, b) && leq(b, c) && !leq(a, c))
          throw std::invalid_argument("relation is not transitive");
  }
}

QuasiOrder QuasiOrder::chain(int size) {
  std::vector<char> table(static_cast<std::size_t>(size) * size);
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b) table[a * size + b] = a <= b;
  return QuasiOrder(size, std::move(table));
}

Token peel_token(Token q, int x, int y) { return q * 9 + x * 3 + y; }

QuasiOrder peel_order(const QuasiOrder& q) {
  const int size = q.size() * 9;
  std::vector<char> table(static_cast<std::size_t>(size) * size, 0);
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b)
      table[a * size + b] = a % 9 == b % 9 && q.leq(a / 9, b / 9);
  return QuasiOrder(size, std::move(table));
}

QmkDigraph make_qmk(Digraph g, PathDecomposition p, std::vector<Path> r_paths,
                    std::vector<Token> labels, QuasiOrder q, int k) {
  auto fail = [](const std::string& what) { throw std::invalid_argument(what); };
  if (!is_semi_complete(g)) fail("digraph is not semi-complete");
  const DecompositionReport rep = verify(g, p, true);
  if (!rep.valid()) fail("not a path-decomposition");
  if (!rep.linked_valid()) fail("decomposition is not linked");
  const int m = p.min_bag();
  if (p.max_bag() > k) fail("a bag is larger than k");
  if (static_cast<int>(r_paths.size()) != m)
    fail("expected " + std::to_string(m) + " root paths, got " + std::to_string(r_paths.size()));

  std::vector<char> seen(g.vertex_count(), 0);
  for (const Path& path : r_paths) {
    if (path.empty()) fail("empty root path");
    for (Vertex v : path) {
      if (v < 0 || v >= g.vertex_count()) fail("root path vertex out of range");
      if (seen[v]++) fail("root paths are not vertex-disjoint");
    }
    if (!is_induced_path(g, path)) fail("root path is not an induced directed path");
    int in_first = 0, in_last = 0;
    for (Vertex v : path) in_first += p.first().contains(v), in_last += p.last().contains(v);
    if (!p.first().contains(path.front()) || in_first != 1)
      fail("root path must meet the first bag exactly at its start");
    if (!p.last().contains(path.back()) || in_last != 1)
      fail("root path must meet the last bag exactly at its end");
  }
  if (static_cast<int>(labels.size()) != g.vertex_count()) fail("one label per vertex expected");
  for (Token t : labels)
    if (t < 0 || t >= q.size()) fail("label outside the quasi-order");

  return QmkDigraph{std::move(g), std::move(p), std::move(r_paths), std::move(labels),
                    std::move(q), m, k};
}

namespace {

bool contractible(const QmkDigraph& d) {
  for (const Path& path : d.r_paths)
    if (!is_strongly_connected(d.g, induced_subdigraph(d.g, VertexSet(path)))) return false;
  return true;
}

std::vector<int> small_bags(const QmkDigraph& d) {
  std::vector<int> idx;
  for (int i = 0; i < d.p.length(); ++i)
    if (static_cast<int>(d.p.bags[i].size()) == d.m) idx.push_back(i);
  return idx;
}

// D restricted to the union of bags from..to.
QmkPart restrict_bags(const QmkDigraph& d, int from, int to) {
  std::vector<Vertex> keep;
  for (int i = from; i <= to; ++i) keep.insert(keep.end(), d.p.bags[i].begin(), d.p.bags[i].end());
  InducedDigraph ind = induce(d.g, VertexSet(std::move(keep)));
  std::vector<Vertex> local(d.g.vertex_count(), -1);
  for (std::size_t i = 0; i < ind.original.size(); ++i) local[ind.original[i]] = static_cast<Vertex>(i);

  PathDecomposition p;
  for (int i = from; i <= to; ++i) {
    std::vector<Vertex> bag;
    for (Vertex v : d.p.bags[i]) bag.push_back(local[v]);
    p.bags.emplace_back(std::move(bag));
  }
  std::vector<Path> paths;
  for (const Path& path : d.r_paths) {
    Path part;
    for (Vertex v : path)
      if (local[v] >= 0) part.push_back(local[v]);
    paths.push_back(std::move(part));
  }
  std::vector<Token> labels;
  for (Vertex v : ind.original) labels.push_back(d.labels[v]);
  return QmkPart{make_qmk(std::move(ind.graph), std::move(p), std::move(paths), std::move(labels),
                          d.q, d.k),
                 std::move(ind.original)};
}

QmkPart nest(QmkPart inner, const std::vector<Vertex>& outer) {
  for (Vertex& v : inner.original) v = outer[v];
  return inner;
}

}  // namespace

DClass classify_qmk(const QmkDigraph& d) {
  DClass c;
  const int r = d.p.length();
  c.trivial = r == 1;
  c.contractible = contractible(d);
  c.non_contractible_member = !c.contractible;
  int last_interior = -1;
  for (int i = 1; i + 1 < r; ++i)
    if (static_cast<int>(d.p.bags[i].size()) == d.m) last_interior = i;
  c.decomposable = last_interior >= 0;
  c.non_decomposable_member = r >= 3 && !c.decomposable;
  if (c.contractible) {
    if (c.non_decomposable_member) {
      c.link = true;
    } else if (c.decomposable) {
      // The right factor has no interior m-bag, so only the last split can
      // give NC ⊕ ND.
      auto [a, b] = split_at(d, last_interior);
      c.link = !contractible(a.d) && b.d.p.length() >= 3;
    }
  }
  return c;
}

std::pair<QmkPart, QmkPart> split_at(const QmkDigraph& d, int s) {
  const int r = d.p.length();
  if (s <= 0 || s >= r - 1) throw std::invalid_argument("split index must be interior");
  if (static_cast<int>(d.p.bags[s].size()) != d.m)
    throw std::invalid_argument("split bag must have size m");
  return {restrict_bags(d, 0, s), restrict_bags(d, s, r - 1)};
}

QmkPart refold(const QmkPart& a, const QmkPart& b) {
  const QmkDigraph& da = a.d;
  const QmkDigraph& db = b.d;
  if (da.m != db.m || da.k != db.k || !(da.q == db.q))
    throw std::invalid_argument("parts have different parameters");
  std::vector<Vertex> shared_a, shared_b;
  for (Vertex v : da.p.last()) shared_a.push_back(a.original[v]);
  for (Vertex v : db.p.first()) shared_b.push_back(b.original[v]);
  std::sort(shared_a.begin(), shared_a.end());
  std::sort(shared_b.begin(), shared_b.end());
  if (shared_a != shared_b) throw std::invalid_argument("parts do not share their boundary bag");

  std::vector<Vertex> all(a.original);
  all.insert(all.end(), b.original.begin(), b.original.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  if (all.size() != a.original.size() + b.original.size() - shared_a.size())
    throw std::invalid_argument("parts overlap outside the boundary bag");
  auto id = [&](Vertex orig) {
    return static_cast<Vertex>(std::lower_bound(all.begin(), all.end(), orig) - all.begin());
  };
  std::vector<Vertex> from_a, from_b;
  for (Vertex v : a.original) from_a.push_back(id(v));
  for (Vertex v : b.original) from_b.push_back(id(v));

  const int n = static_cast<int>(all.size());
  std::vector<char> in_a(n, 0), in_b(n, 0), boundary(n, 0);
  for (Vertex v : from_a) in_a[v] = 1;
  for (Vertex v : from_b) in_b[v] = 1;
  for (Vertex v : db.p.first()) boundary[from_b[v]] = 1;

  std::vector<Edge> edges;
  for (const Edge& e : da.g.edges()) edges.push_back({from_a[e.tail], from_a[e.head]});
  for (const Edge& e : db.g.edges()) {
    Edge f{from_b[e.tail], from_b[e.head]};
    if (!(boundary[f.tail] && boundary[f.head])) edges.push_back(f);
  }
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = 0; y < n; ++y)
      if (in_b[y] && !in_a[y] && in_a[x] && !in_b[x]) edges.push_back({y, x});

  PathDecomposition p;
  for (const VertexSet& bag : da.p.bags) {
    std::vector<Vertex> vs;
    for (Vertex v : bag) vs.push_back(from_a[v]);
    p.bags.emplace_back(std::move(vs));
  }
  for (int i = 1; i < db.p.length(); ++i) {
    std::vector<Vertex> vs;
    for (Vertex v : db.p.bags[i]) vs.push_back(from_b[v]);
    p.bags.emplace_back(std::move(vs));
  }

  std::vector<Path> paths;
  for (int i = 0; i < da.m; ++i) {
    Path path;
    for (Vertex v : da.r_paths[i]) path.push_back(from_a[v]);
    const Path& tail = db.r_paths[i];
    if (from_b[tail.front()] != path.back())
      throw std::invalid_argument("root paths do not meet at the boundary");
    for (std::size_t j = 1; j < tail.size(); ++j) path.push_back(from_b[tail[j]]);
    paths.push_back(std::move(path));
  }

  std::vector<Token> labels(n, -1);
  for (std::size_t v = 0; v < from_a.size(); ++v) labels[from_a[v]] = da.labels[v];
  for (std::size_t v = 0; v < from_b.size(); ++v) {
    Token& t = labels[from_b[v]];
    if (t >= 0 && t != db.labels[v]) throw std::invalid_argument("parts disagree on a label");
    t = db.labels[v];
  }
  return QmkPart{make_qmk(Digraph(n, std::move(edges)), std::move(p), std::move(paths),
                          std::move(labels), da.q, da.k),
                 std::move(all)};
}

QmkPart refold(const std::vector<QmkPart>& parts) {
  if (parts.empty()) throw std::invalid_argument("nothing to refold");
  QmkPart acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = refold(acc, parts[i]);
  return acc;
}

std::vector<QmkPart> decompose_links(const QmkDigraph& d) {
  if (d.trivial()) throw std::invalid_argument("cannot decompose a trivial (Q,m,k)-digraph");
  std::vector<QmkPart> out;
  std::vector<Vertex> identity(d.g.vertex_count());
  std::iota(identity.begin(), identity.end(), 0);
  QmkPart cur{d, identity};
  for (;;) {
    if (!contractible(cur.d)) {
      out.push_back(std::move(cur));
      return out;
    }
    const std::vector<int> idx = small_bags(cur.d);
    const int r = cur.d.p.length();
    bool split = false;
    for (std::size_t j = 1; j < idx.size() && idx[j] < r - 1; ++j) {
      QmkPart prefix = restrict_bags(cur.d, 0, idx[j]);
      if (!contractible(prefix.d)) continue;
      QmkPart rest = restrict_bags(cur.d, idx[j], r - 1);
      out.push_back(nest(std::move(prefix), cur.original));
      cur = nest(std::move(rest), cur.original);
      split = true;
      break;
    }
    if (!split) {
      out.push_back(std::move(cur));
      return out;
    }
  }
}

QmkDigraph lift_nondecomposable(const QmkDigraph& d) {
  if (!classify_qmk(d).non_decomposable_member)
    throw std::invalid_argument("lift needs a non-decomposable (Q,m,k)-digraph");
  if (d.k <= d.m) throw std::invalid_argument("lift needs k > m");
  PathDecomposition p;
  p.bags.assign(d.p.bags.begin() + 1, d.p.bags.end() - 1);
  PathSystem ps = minimal_union_paths(d.g, p.first(), p.last(), d.m + 1);
  return make_qmk(d.g, std::move(p), std::move(ps.paths), d.labels, d.q, d.k);
}

PeelResult peel_noncontractible(const QmkDigraph& d) {
  int j = -1;
  for (int i = 0; i < d.m && j < 0; ++i) {
    const Path& path = d.r_paths[i];
    if (path.size() == 2 && !d.g.has_edge(path[1], path[0])) j = i;
  }
  if (j < 0) throw std::invalid_argument("nothing to peel: every root path is strongly connected");
  const Vertex u = d.r_paths[j][0], v = d.r_paths[j][1];
  for (const VertexSet& bag : d.p.bags)
    if (!bag.contains(u) && !bag.contains(v))
      throw std::logic_error("a bag misses both ends of the peeled path");

  std::vector<Vertex> rest;
  for (Vertex w = 0; w < d.g.vertex_count(); ++w)
    if (w != u && w != v) rest.push_back(w);
  InducedDigraph ind = induce(d.g, VertexSet(rest));
  std::vector<Vertex> local(d.g.vertex_count(), -1);
  for (std::size_t i = 0; i < ind.original.size(); ++i) local[ind.original[i]] = static_cast<Vertex>(i);

  auto side = [&](Vertex w, Vertex root) {
    const bool to = d.g.has_edge(w, root), from = d.g.has_edge(root, w);
    return to && from ? 2 : (from ? 1 : 0);
  };
  std::vector<Token> labels;
  for (Vertex w : ind.original) labels.push_back(peel_token(d.labels[w], side(w, u), side(w, v)));

  PathDecomposition hat;
  for (const VertexSet& bag : d.p.bags) {
    std::vector<Vertex> vs;
    for (Vertex w : bag)
      if (w != u && w != v) vs.push_back(local[w]);
    hat.bags.emplace_back(std::move(vs));
  }
  const VertexSet first = hat.first(), last = hat.last();
  PathDecomposition linked = build_linked(ind.graph, hat, first, last);

  std::vector<Path> paths;
  for (int i = 0; i < d.m; ++i) {
    if (i == j) continue;
    Path path;
    for (Vertex w : d.r_paths[i]) path.push_back(local[w]);
    paths.push_back(std::move(path));
  }
  PeelResult res;
  res.d = make_qmk(std::move(ind.graph), std::move(linked), std::move(paths), std::move(labels),
                   peel_order(d.q), d.k - 1);
  res.u = u;
  res.v = v;
  res.path_index = j;
  res.original = std::move(ind.original);
  return res;
}

std::vector<Edge> peeled_edges(const PeelResult& r) {
  std::vector<Edge> out;
  auto add = [&](Vertex w, Vertex root, int code) {
    if (code != 1) out.push_back({w, root});
    if (code != 0) out.push_back({root, w});
  };
  for (std::size_t i = 0; i < r.original.size(); ++i) {
    const Token t = r.d.labels[i];
    add(r.original[i], r.u, (t / 3) % 3);
    add(r.original[i], r.v, t % 3);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void check_same_parameters(const QmkDigraph& d1, const QmkDigraph& d2) {
  if (d1.m != d2.m || d1.k != d2.k || !(d1.q == d2.q))
    throw std::invalid_argument("labeled minors need equal m, k and quasi-order");
}

}  // namespace

MappingReport verify_labeled_minor(const QmkDigraph& d1, const QmkDigraph& d2,
                                   const MinorMapping& m) {
  check_same_parameters(d1, d2);
  MappingReport rep = verify_mapping(d1.g, d2.g, m);
  if (static_cast<int>(m.branch.size()) != d1.g.vertex_count()) return rep;
  for (int i = 0; i < d1.m; ++i) {
    if (!m.branch[d1.source_root(i)].vertices.contains(d2.source_root(i)))
      rep.issues.push_back({"root", "source root " + std::to_string(i) + " not covered"});
    if (!m.branch[d1.terminal_root(i)].vertices.contains(d2.terminal_root(i)))
      rep.issues.push_back({"root", "terminal root " + std::to_string(i) + " not covered"});
  }
  for (Vertex x = 0; x < d1.g.vertex_count(); ++x) {
    const auto& vs = m.branch[x].vertices;
    bool ok = false;
    for (Vertex u : vs)
      if (u >= 0 && u < d2.g.vertex_count() && d1.q.leq(d1.labels[x], d2.labels[u])) ok = true;
    if (!ok) rep.issues.push_back({"label", "vertex " + std::to_string(x) + " has no dominating label"});
  }
  return rep;
}

MinorSearchResult find_labeled_minor(const QmkDigraph& d1, const QmkDigraph& d2,
                                     std::int64_t budget) {
  check_same_parameters(d1, d2);
  const int n1 = d1.g.vertex_count(), n2 = d2.g.vertex_count();
  if (n2 > 64) throw std::invalid_argument("labeled search supports hosts with at most 64 vertices");
  BranchConstraints c;
  c.required.assign(n1, 0);
  c.allowed_some.assign(n1, 0);
  for (int i = 0; i < d1.m; ++i) {
    c.required[d1.source_root(i)] |= Mask{1} << d2.source_root(i);
    c.required[d1.terminal_root(i)] |= Mask{1} << d2.terminal_root(i);
  }
  for (Vertex x = 0; x < n1; ++x)
    for (Vertex u = 0; u < n2; ++u)
      if (d1.q.leq(d1.labels[x], d2.labels[u])) c.allowed_some[x] |= Mask{1} << u;
  return find_minor(d1.g, d2.g, budget, &c);
}

namespace {

int edge_between(const Digraph& g, Vertex tail, Vertex head) {
  for (int e : g.out_edges(tail))
    if (g.edge(e).head == head) return e;
  return -1;
}

std::vector<Vertex> positions(const QmkPart& part, int n) {
  std::vector<Vertex> pos(n, -1);
  for (std::size_t i = 0; i < part.original.size(); ++i) pos[part.original[i]] = static_cast<Vertex>(i);
  return pos;
}

}  // namespace

MinorMapping glue_mappings(const QmkDigraph& pattern, const QmkPart& pattern_a,
                           const QmkPart& pattern_b, const QmkDigraph& host, const QmkPart& host_a,
                           const QmkPart& host_b, const MinorMapping& m_a,
                           const MinorMapping& m_b) {
  if (!verify_labeled_minor(pattern_a.d, host_a.d, m_a).valid())
    throw std::invalid_argument("first mapping is not a labeled minor mapping");
  if (!verify_labeled_minor(pattern_b.d, host_b.d, m_b).valid())
    throw std::invalid_argument("second mapping is not a labeled minor mapping");
  for (int i = 0; i < pattern_a.d.m; ++i) {
    if (pattern_a.original[pattern_a.d.terminal_root(i)] !=
            pattern_b.original[pattern_b.d.source_root(i)] ||
        host_a.original[host_a.d.terminal_root(i)] != host_b.original[host_b.d.source_root(i)])
      throw std::invalid_argument("halves do not meet in matching roots");
  }

  const int n = pattern.g.vertex_count();
  std::vector<std::vector<Vertex>> verts(n);
  std::vector<std::vector<int>> edges(n);
  auto collect = [&](const QmkPart& pp, const QmkPart& hp, const MinorMapping& mm) {
    for (std::size_t x = 0; x < pp.original.size(); ++x) {
      const Vertex target = pp.original[x];
      for (Vertex v : mm.branch[x].vertices) verts[target].push_back(hp.original[v]);
      for (int e : mm.branch[x].edges) {
        const Edge& he = hp.d.g.edge(e);
        edges[target].push_back(edge_between(host.g, hp.original[he.tail], hp.original[he.head]));
      }
    }
  };
  collect(pattern_a, host_a, m_a);
  collect(pattern_b, host_b, m_b);

  MinorMapping out;
  for (int x = 0; x < n; ++x) {
    std::sort(edges[x].begin(), edges[x].end());
    edges[x].erase(std::unique(edges[x].begin(), edges[x].end()), edges[x].end());
    out.branch.push_back({VertexSet(std::move(verts[x])), std::move(edges[x])});
    if (!is_strongly_connected(host.g, out.branch.back()))
      throw std::logic_error("glued branch set is not strongly connected");
  }

  const std::vector<Vertex> pos_a = positions(pattern_a, n), pos_b = positions(pattern_b, n);
  auto lift = [&](const QmkPart& hp, int local_edge) {
    const Edge& he = hp.d.g.edge(local_edge);
    return edge_between(host.g, hp.original[he.tail], hp.original[he.head]);
  };
  for (const Edge& e : pattern.g.edges()) {
    int w = -1;
    if (pos_a[e.tail] >= 0 && pos_a[e.head] >= 0) {
      w = lift(host_a, m_a.witness[edge_between(pattern_a.d.g, pos_a[e.tail], pos_a[e.head])]);
    } else if (pos_b[e.tail] >= 0 && pos_b[e.head] >= 0) {
      w = lift(host_b, m_b.witness[edge_between(pattern_b.d.g, pos_b[e.tail], pos_b[e.head])]);
    } else {
      for (Vertex y : out.branch[e.tail].vertices) {
        for (Vertex x : out.branch[e.head].vertices)
          if ((w = edge_between(host.g, y, x)) >= 0) break;
        if (w >= 0) break;
      }
    }
    if (w < 0) throw std::logic_error("no host edge for a glued pattern edge");
    out.witness.push_back(w);
  }
  return out;
}

bool higman_leq(const std::vector<Token>& p, const std::vector<Token>& q, const QuasiOrder& base,
                bool pinned) {
  auto greedy = [&](std::size_t pb, std::size_t pe, std::size_t qb, std::size_t qe) {
    std::size_t j = qb;
    for (std::size_t i = pb; i < pe; ++i) {
      while (j < qe && !base.leq(p[i], q[j])) ++j;
      if (j == qe) return false;
      ++j;
    }
    return true;
  };
  if (!pinned) return greedy(0, p.size(), 0, q.size());
  if (p.size() < 2 || q.size() < 2) throw std::invalid_argument("pinned comparison needs length >= 2");
  return base.leq(p.front(), q.front()) && base.leq(p.back(), q.back()) &&
         greedy(1, p.size() - 1, 1, q.size() - 1);
}

std::optional<QmkDigraph> random_qmk(const RandomQmkOptions& opt, std::uint64_t seed) {
  if (opt.m < 0 || opt.k < opt.m || opt.label_count < 1 || opt.n < 1)
    throw std::invalid_argument("invalid random (Q,m,k) parameters");
  std::mt19937_64 rng(seed);
  const Digraph g = random_tournament(opt.n, rng());
  const PathDecomposition full = normalize(g, pad_empty_ends(exact_pathwidth(g).decomposition));
  const int r = full.length();

  std::vector<std::pair<int, int>> windows;
  for (int i0 = 0; i0 < r; ++i0) {
    if (static_cast<int>(full.bags[i0].size()) != opt.m) continue;
    for (int i1 = i0 + 1; i1 < r; ++i1) {
      const int size = static_cast<int>(full.bags[i1].size());
      if (size < opt.m || size > opt.k) break;
      if (size == opt.m) windows.emplace_back(i0, i1);
    }
  }
  std::shuffle(windows.begin(), windows.end(), rng);

  for (auto [i0, i1] : windows) {
    std::vector<Vertex> keep;
    for (int i = i0; i <= i1; ++i) keep.insert(keep.end(), full.bags[i].begin(), full.bags[i].end());
    InducedDigraph ind = induce(g, VertexSet(std::move(keep)));
    std::vector<Vertex> local(g.vertex_count(), -1);
    for (std::size_t i = 0; i < ind.original.size(); ++i) local[ind.original[i]] = static_cast<Vertex>(i);
    PathDecomposition p;
    for (int i = i0; i <= i1; ++i) {
      std::vector<Vertex> bag;
      for (Vertex v : full.bags[i]) bag.push_back(local[v]);
      p.bags.emplace_back(std::move(bag));
    }
    const VertexSet first = p.first(), last = p.last();
    if (max_disjoint_path_count(ind.graph, first, last, opt.m) < opt.m) continue;
    PathDecomposition linked = build_linked(ind.graph, p, first, last);
    PathSystem ps = minimal_union_paths(ind.graph, first, last, opt.m);
    std::vector<Token> labels;
    for (int v = 0; v < ind.graph.vertex_count(); ++v)
      labels.push_back(static_cast<Token>(rng() % static_cast<std::uint64_t>(opt.label_count)));
    return make_qmk(std::move(ind.graph), std::move(linked), std::move(ps.paths), std::move(labels),
                    QuasiOrder::chain(opt.label_count), opt.k);
  }
  return std::nullopt;
}

}  // namespace dminor
