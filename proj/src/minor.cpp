#include "dminor/minor.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "dminor/canonical.hpp"

namespace dminor {

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::absent: return "absent";
    case SearchStatus::budget_exceeded: return "budget";
  }
  return "unknown";
}

MappingReport verify_mapping(const Digraph& h, const Digraph& g, const MinorMapping& m) {
  MappingReport rep;
  auto issue = [&](std::string clause, std::string detail) {
    rep.issues.push_back({std::move(clause), std::move(detail)});
  };
  if (static_cast<int>(m.branch.size()) != h.vertex_count() ||
      static_cast<int>(m.witness.size()) != h.edge_count()) {
    issue("shape", "mapping size does not match the pattern");
    return rep;
  }

  std::vector<int> owner(g.vertex_count(), -1);
  std::vector<int> edge_owner(g.edge_count(), -1);
  for (int x = 0; x < h.vertex_count(); ++x) {
    const Subdigraph& b = m.branch[x];
    try {
      check_subdigraph(g, b);
    } catch (const std::invalid_argument& e) {
      issue("subdigraph", "branch " + std::to_string(x) + ": " + e.what());
      continue;
    }
    if (b.vertices.empty()) {
      issue("non_null", "branch " + std::to_string(x) + " is empty");
      continue;
    }
    if (!is_strongly_connected(g, b))
      issue("strongly_connected", "branch " + std::to_string(x) + " is not strongly connected");
    for (Vertex v : b.vertices) {
      if (owner[v] >= 0)
        issue("disjoint", "host vertex " + std::to_string(v) + " is in branches " +
                              std::to_string(owner[v]) + " and " + std::to_string(x));
      else
        owner[v] = x;
    }
    for (int e : b.edges) edge_owner[e] = x;
  }

  std::vector<char> used(g.edge_count(), 0);
  for (int e = 0; e < h.edge_count(); ++e) {
    const int w = m.witness[e];
    const std::string name = "pattern edge " + std::to_string(e);
    if (w < 0 || w >= g.edge_count()) {
      issue("witness", name + ": host edge out of range");
      continue;
    }
    if (used[w]++) issue("witness", name + ": host edge " + std::to_string(w) + " reused");
    if (edge_owner[w] >= 0)
      issue("witness", name + ": host edge " + std::to_string(w) + " lies in branch " +
                           std::to_string(edge_owner[w]));
    const Edge& pe = h.edge(e);
    const Edge& he = g.edge(w);
    if (!m.branch[pe.tail].vertices.contains(he.tail))
      issue("witness", name + ": tail outside the tail's branch set");
    if (!m.branch[pe.head].vertices.contains(he.head))
      issue("witness", name + ": head outside the head's branch set");
  }
  return rep;
}

MinorMapping identity_mapping(const Digraph& g) {
  MinorMapping m;
  for (Vertex v = 0; v < g.vertex_count(); ++v) m.branch.push_back({VertexSet{v}, {}});
  m.witness.resize(g.edge_count());
  std::iota(m.witness.begin(), m.witness.end(), 0);
  return m;
}

namespace {

// Host edges with both endpoints in `s`, loops first.
std::vector<int> internal_edges(const Digraph& g, Mask s) {
  std::vector<int> loops, rest;
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    if (!((s >> edge.tail) & 1) || !((s >> edge.head) & 1)) continue;
    (edge.tail == edge.head ? loops : rest).push_back(e);
  }
  loops.insert(loops.end(), rest.begin(), rest.end());
  return loops;
}

// `count` internal edges whose removal leaves G[s] strongly connected.
std::optional<std::vector<int>> loop_witnesses(const Digraph& g, Mask s, int count) {
  if (count == 0) return std::vector<int>{};
  const std::vector<int> internal = internal_edges(g, s);
  if (static_cast<int>(internal.size()) < count) return std::nullopt;
  const VertexSet vs = VertexSet::from_mask(s);
  std::vector<int> pick(count);
  std::iota(pick.begin(), pick.end(), 0);
  const int total = static_cast<int>(internal.size());
  for (;;) {
    std::vector<char> removed(total, 0);
    for (int i : pick) removed[i] = 1;
    Subdigraph kept{vs, {}};
    for (int i = 0; i < total; ++i)
      if (!removed[i]) kept.edges.push_back(internal[i]);
    std::sort(kept.edges.begin(), kept.edges.end());
    if (is_strongly_connected(g, kept)) {
      std::vector<int> out;
      for (int i : pick) out.push_back(internal[i]);
      return out;
    }
    int i = count - 1;
    while (i >= 0 && pick[i] == total - count + i) --i;
    if (i < 0) return std::nullopt;
    ++pick[i];
    for (int j = i + 1; j < count; ++j) pick[j] = pick[j - 1] + 1;
  }
}

int edges_between(const Digraph& g, Mask from, Mask to) {
  int total = 0;
  for (Mask f = from; f; f &= f - 1) {
    const int u = std::countr_zero(f);
    for (Mask t = to; t; t &= t - 1) total += g.multiplicity(u, std::countr_zero(t));
  }
  return total;
}

// Assigns witnesses and branch edge sets once the vertex sets are fixed.
MinorMapping assemble(const Digraph& h, const Digraph& g, const std::vector<Mask>& sets,
                      const std::vector<std::vector<int>>& loops) {
  const int nh = h.vertex_count();
  MinorMapping m;
  m.branch.resize(nh);
  for (int x = 0; x < nh; ++x) {
    m.branch[x].vertices = VertexSet::from_mask(sets[x]);
    std::vector<int> edges = internal_edges(g, sets[x]);
    std::erase_if(edges, [&](int e) {
      return std::find(loops[x].begin(), loops[x].end(), e) != loops[x].end();
    });
    std::sort(edges.begin(), edges.end());
    m.branch[x].edges = std::move(edges);
  }
  std::vector<int> owner(g.vertex_count(), -1);
  for (int x = 0; x < nh; ++x)
    for (Vertex v : m.branch[x].vertices) owner[v] = x;
  std::vector<char> used(g.edge_count(), 0);
  std::vector<std::size_t> loop_next(nh, 0);
  m.witness.assign(h.edge_count(), -1);
  for (int e = 0; e < h.edge_count(); ++e) {
    const Edge& pe = h.edge(e);
    if (pe.tail == pe.head) {
      m.witness[e] = loops[pe.tail][loop_next[pe.tail]++];
      used[m.witness[e]] = 1;
      continue;
    }
    for (int w = 0; w < g.edge_count(); ++w) {
      const Edge& he = g.edge(w);
      if (!used[w] && owner[he.tail] == pe.tail && owner[he.head] == pe.head) {
        used[w] = 1;
        m.witness[e] = w;
        break;
      }
    }
  }
  return m;
}

class BranchSearch {
 public:
  BranchSearch(const Digraph& h, const Digraph& g, std::int64_t budget,
               const BranchConstraints* constraints)
      : h_(h), g_(g), nh_(h.vertex_count()), ng_(g.vertex_count()), budget_(budget) {
    if (ng_ > 64) throw std::invalid_argument("minor search supports hosts with at most 64 vertices");
    out_ = g.out_masks();
    in_ = g.in_masks();
    if (constraints) {
      if (!constraints->required.empty()) required_ = constraints->required;
      if (!constraints->allowed_some.empty()) allowed_some_ = constraints->allowed_some;
      if ((!required_.empty() && static_cast<int>(required_.size()) != nh_) ||
          (!allowed_some_.empty() && static_cast<int>(allowed_some_.size()) != nh_))
        throw std::invalid_argument("constraint vectors must match the pattern size");
    }
    order_.resize(nh_);
    std::iota(order_.begin(), order_.end(), 0);
    std::vector<int> degree(nh_, 0);
    for (const Edge& e : h.edges()) ++degree[e.tail], ++degree[e.head];
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return degree[a] > degree[b]; });
    sets_.assign(nh_, 0);
    placed_.assign(nh_, 0);
    loops_.assign(nh_, {});
  }

  MinorSearchResult run() {
    MinorSearchResult res;
    const bool size_ok = nh_ <= ng_ && h_.edge_count() <= g_.edge_count();
    if (size_ok && place(0)) {
      res.status = SearchStatus::found;
      res.mapping = assemble(h_, g_, sets_, loops_);
    } else {
      res.status = exhausted_budget_ ? SearchStatus::budget_exceeded : SearchStatus::absent;
    }
    res.nodes = nodes_;
    return res;
  }

 private:
  int demand(int x, int y) const { return h_.multiplicity(x, y); }

  // Every placed branch set keeps enough edges towards the free vertices for
  // the demands of the pattern vertices still to be placed.
  bool capacity_ok(Mask free) const {
    for (int z = 0; z < nh_; ++z) {
      if (!placed_[z]) continue;
      int need_out = 0, need_in = 0;
      for (int y = 0; y < nh_; ++y) {
        if (placed_[y]) continue;
        need_out += demand(z, y);
        need_in += demand(y, z);
      }
      if (need_out && edges_between(g_, sets_[z], free) < need_out) return false;
      if (need_in && edges_between(g_, free, sets_[z]) < need_in) return false;
    }
    return true;
  }

  bool place(int idx) {
    if (idx == nh_) return true;
    const int x = order_[idx];
    Mask used = 0;
    for (int z = 0; z < nh_; ++z) used |= sets_[z];
    const Mask all = ng_ == 64 ? ~Mask{0} : (Mask{1} << ng_) - 1;
    const Mask free = all & ~used;
    const Mask req = required_.empty() ? 0 : required_[x];
    if (req & used) return false;
    const int still_needed = nh_ - idx - 1;

    for (Mask sub = 0;;) {
      sub = (sub - free) & free;
      if (sub == 0) break;
      if ((sub & req) != req) continue;
      if (!allowed_some_.empty() && !(sub & allowed_some_[x])) continue;
      if (budget_ >= 0 && nodes_ >= budget_) {
        exhausted_budget_ = true;
        return false;
      }
      ++nodes_;
      if (std::popcount(free & ~sub) < still_needed) continue;
      if (!mask_strongly_connected(out_, in_, sub)) continue;

      bool ok = true;
      for (int y = 0; y < nh_ && ok; ++y) {
        if (!placed_[y]) continue;
        if (demand(x, y) && edges_between(g_, sub, sets_[y]) < demand(x, y)) ok = false;
        if (demand(y, x) && edges_between(g_, sets_[y], sub) < demand(y, x)) ok = false;
      }
      if (!ok) continue;

      std::optional<std::vector<int>> loops;
      if (demand(x, x)) {
        loops = loop_witnesses(g_, sub, demand(x, x));
        if (!loops) continue;
      }

      sets_[x] = sub;
      placed_[x] = 1;
      if (capacity_ok(free & ~sub)) {
        loops_[x] = loops ? *loops : std::vector<int>{};
        if (place(idx + 1)) return true;
      }
      sets_[x] = 0;
      placed_[x] = 0;
      if (exhausted_budget_) return false;
    }
    return false;
  }

  const Digraph& h_;
  const Digraph& g_;
  int nh_, ng_;
  std::int64_t budget_;
  std::int64_t nodes_ = 0;
  bool exhausted_budget_ = false;
  std::vector<Mask> out_, in_;
  std::vector<Mask> required_, allowed_some_;
  std::vector<int> order_;
  std::vector<Mask> sets_;
  std::vector<char> placed_;
  std::vector<std::vector<int>> loops_;
};

}  // namespace

MinorSearchResult find_minor(const Digraph& h, const Digraph& g, std::int64_t budget,
                             const BranchConstraints* constraints) {
  return BranchSearch(h, g, budget, constraints).run();
}

MinorSearchResult find_subdigraph(const Digraph& h, const Digraph& g, std::int64_t budget) {
  const int nh = h.vertex_count(), ng = g.vertex_count();
  MinorSearchResult res;
  if (nh > ng || h.edge_count() > g.edge_count()) return res;

  auto out_deg = [](const Digraph& d, Vertex v) { return static_cast<int>(d.out_edges(v).size()); };
  auto in_deg = [](const Digraph& d, Vertex v) { return static_cast<int>(d.in_edges(v).size()); };

  // Most-constrained-first order: next is the vertex with most edges to the
  // already ordered ones, then highest degree.
  std::vector<int> order;
  std::vector<char> ordered(nh, 0);
  for (int step = 0; step < nh; ++step) {
    int best = -1, best_link = -1, best_deg = -1;
    for (int x = 0; x < nh; ++x) {
      if (ordered[x]) continue;
      int link = 0;
      for (int y : order) link += h.multiplicity(x, y) + h.multiplicity(y, x);
      int deg = out_deg(h, x) + in_deg(h, x);
      if (link > best_link || (link == best_link && deg > best_deg)) {
        best = x, best_link = link, best_deg = deg;
      }
    }
    order.push_back(best);
    ordered[best] = 1;
  }

  std::vector<Vertex> image(nh, -1);
  std::vector<char> taken(ng, 0);
  bool out_of_budget = false;
  auto rec = [&](auto&& self, int idx) -> bool {
    if (idx == nh) return true;
    const int x = order[idx];
    for (Vertex v = 0; v < ng; ++v) {
      if (taken[v]) continue;
      if (budget >= 0 && res.nodes >= budget) {
        out_of_budget = true;
        return false;
      }
      ++res.nodes;
      if (out_deg(g, v) < out_deg(h, x) || in_deg(g, v) < in_deg(h, x) ||
          g.multiplicity(v, v) < h.multiplicity(x, x))
        continue;
      bool ok = true;
      for (int i = 0; i < idx && ok; ++i) {
        const int y = order[i];
        ok = g.multiplicity(v, image[y]) >= h.multiplicity(x, y) &&
             g.multiplicity(image[y], v) >= h.multiplicity(y, x);
      }
      if (!ok) continue;
      image[x] = v;
      taken[v] = 1;
      if (self(self, idx + 1)) return true;
      taken[v] = 0;
      image[x] = -1;
      if (out_of_budget) return false;
    }
    return false;
  };

  if (rec(rec, 0)) {
    res.status = SearchStatus::found;
    MinorMapping m;
    for (int x = 0; x < nh; ++x) m.branch.push_back({VertexSet{image[x]}, {}});
    std::vector<char> used(g.edge_count(), 0);
    m.witness.assign(h.edge_count(), -1);
    for (int e = 0; e < h.edge_count(); ++e) {
      const Edge& pe = h.edge(e);
      for (int w : g.out_edges(image[pe.tail]))
        if (!used[w] && g.edge(w).head == image[pe.head]) {
          used[w] = 1;
          m.witness[e] = w;
          break;
        }
    }
    res.mapping = std::move(m);
  } else {
    res.status = out_of_budget ? SearchStatus::budget_exceeded : SearchStatus::absent;
  }
  return res;
}

namespace {

int first_edge(const Digraph& g, Vertex tail, Vertex head) {
  for (int e : g.out_edges(tail))
    if (g.edge(e).head == head) return e;
  throw std::invalid_argument("missing edge " + std::to_string(tail) + "->" + std::to_string(head));
}

}  // namespace

MinorMapping minor_of_triple(const Digraph& h, const Digraph& g, const KTriple& t) {
  if (!is_semi_complete(h)) throw std::invalid_argument("pattern must be semi-complete");
  if (h.vertex_count() != t.k()) throw std::invalid_argument("pattern size differs from k");
  if (!is_k_triple(g, t)) throw std::invalid_argument("not a k-triple of the host");
  MinorMapping m;
  for (int i = 0; i < t.k(); ++i) {
    std::vector<int> edges{first_edge(g, t.a[i], t.b[i]), first_edge(g, t.b[i], t.c[i]),
                           first_edge(g, t.c[i], t.a[i])};
    std::sort(edges.begin(), edges.end());
    m.branch.push_back({VertexSet{t.a[i], t.b[i], t.c[i]}, std::move(edges)});
  }
  for (const Edge& e : h.edges()) m.witness.push_back(first_edge(g, t.a[e.tail], t.b[e.head]));
  return m;
}

MinorMapping compose(const Digraph& h, const Digraph& g, const Digraph& f, const MinorMapping& m1,
                     const MinorMapping& m2) {
  if (!verify_mapping(h, g, m1).valid()) throw std::invalid_argument("first mapping is invalid");
  if (!verify_mapping(g, f, m2).valid()) throw std::invalid_argument("second mapping is invalid");
  MinorMapping out;
  for (const Subdigraph& b : m1.branch) {
    std::vector<Vertex> vs;
    std::vector<int> es;
    for (Vertex u : b.vertices) {
      const Subdigraph& inner = m2.branch[u];
      vs.insert(vs.end(), inner.vertices.begin(), inner.vertices.end());
      es.insert(es.end(), inner.edges.begin(), inner.edges.end());
    }
    for (int e : b.edges) es.push_back(m2.witness[e]);
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    out.branch.push_back({VertexSet(std::move(vs)), std::move(es)});
  }
  for (int w : m1.witness) out.witness.push_back(m2.witness[w]);
  return out;
}

std::vector<Digraph> closure_oracle(const Digraph& g, int max_steps) {
  if (g.vertex_count() > kMaxClosureVertices)
    throw std::invalid_argument("closure oracle supports at most " +
                                std::to_string(kMaxClosureVertices) + " vertices");
  std::unordered_set<std::string> seen;
  std::vector<std::pair<std::string, Digraph>> found;
  std::vector<Digraph> frontier;

  auto visit = [&](const Digraph& d) {
    Digraph c = canonical_form(d);
    std::string key = canonical_key(c);
    if (!seen.insert(key).second) return;
    found.emplace_back(std::move(key), c);
    frontier.push_back(std::move(c));
  };
  visit(g);

  for (int step = 0; (max_steps < 0 || step < max_steps) && !frontier.empty(); ++step) {
    std::vector<Digraph> current;
    current.swap(frontier);
    for (const Digraph& d : current) {
      for (int e = 0; e < d.edge_count(); ++e) visit(delete_edge(d, e));
      for (Vertex v = 0; v < d.vertex_count(); ++v) visit(delete_vertex(d, v));
      const auto out = d.out_masks();
      const auto in = d.in_masks();
      const Mask all = (Mask{1} << d.vertex_count()) - 1;
      for (Mask s = 1; s <= all; ++s) {
        if (std::popcount(s) < 2 || !mask_strongly_connected(out, in, s)) continue;
        visit(contract_vertices(d, VertexSet::from_mask(s)).graph);
      }
    }
  }
  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Digraph> result;
  for (auto& [key, d] : found) result.push_back(std::move(d));
  return result;
}

}  // namespace dminor
