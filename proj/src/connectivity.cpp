#include "dminor/connectivity.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

namespace dminor {

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;

// Unit vertex capacities via in/out splitting: vertex v becomes 2v -> 2v+1.
class SplitNetwork {
 public:
  struct Arc {
    int to;
    int cap;
    int original;
    int rev;
  };

  SplitNetwork(const Digraph& g, const std::vector<char>& allowed, int edge_cap)
      : n_(g.vertex_count()), source_(2 * n_), sink_(2 * n_ + 1), arcs_(2 * n_ + 2) {
    for (Vertex v = 0; v < n_; ++v)
      if (allowed[v]) add_arc(in(v), out(v), 1);
    for (Vertex u = 0; u < n_; ++u) {
      if (!allowed[u]) continue;
      for (Vertex w : g.successors(u))
        if (allowed[w]) add_arc(out(u), in(w), edge_cap);
    }
  }

  int in(Vertex v) const { return 2 * v; }
  int out(Vertex v) const { return 2 * v + 1; }
  int source() const { return source_; }
  int sink() const { return sink_; }

  void add_arc(int from, int to, int cap) {
    arcs_[from].push_back({to, cap, cap, static_cast<int>(arcs_[to].size())});
    arcs_[to].push_back({from, 0, 0, static_cast<int>(arcs_[from].size()) - 1});
  }

  // Shortest augmenting paths from `from` to `to`, stopping at `limit`.
  int max_flow(int from, int to, int limit) {
    int flow = 0;
    std::vector<std::pair<int, int>> parent(arcs_.size());
    while (limit < 0 || flow < limit) {
      std::fill(parent.begin(), parent.end(), std::pair{-1, -1});
      parent[from] = {from, -1};
      std::deque<int> queue{from};
      while (!queue.empty() && parent[to].first < 0) {
        int x = queue.front();
        queue.pop_front();
        for (int i = 0; i < static_cast<int>(arcs_[x].size()); ++i) {
          const Arc& arc = arcs_[x][i];
          if (arc.cap > 0 && parent[arc.to].first < 0) {
            parent[arc.to] = {x, i};
            queue.push_back(arc.to);
          }
        }
      }
      if (parent[to].first < 0) break;
      for (int x = to; x != from;) {
        auto [p, i] = parent[x];
        Arc& arc = arcs_[p][i];
        arc.cap -= 1;
        arcs_[x][arc.rev].cap += 1;
        x = p;
      }
      ++flow;
    }
    return flow;
  }

  std::vector<char> residual_reachable(int from) const {
    std::vector<char> seen(arcs_.size(), 0);
    std::vector<int> todo{from};
    seen[from] = 1;
    while (!todo.empty()) {
      int x = todo.back();
      todo.pop_back();
      for (const Arc& arc : arcs_[x])
        if (arc.cap > 0 && !seen[arc.to]) seen[arc.to] = 1, todo.push_back(arc.to);
    }
    return seen;
  }

  // Follows one unit of flow leaving out(v) and returns the next node.
  int flow_successor(int node) const {
    for (const Arc& arc : arcs_[node])
      if (arc.original > 0 && arc.cap < arc.original) return arc.to;
    return -1;
  }

  std::vector<Path> extract_paths() const {
    std::vector<Path> paths;
    for (const Arc& start : arcs_[source_]) {
      if (start.original == 0 || start.cap == start.original) continue;
      Vertex v = start.to / 2;
      Path path{v};
      for (;;) {
        int next = flow_successor(out(v));
        if (next == sink_ || next < 0) break;
        v = next / 2;
        path.push_back(v);
      }
      paths.push_back(std::move(path));
    }
    return paths;
  }

 private:
  int n_;
  int source_;
  int sink_;
  std::vector<std::vector<Arc>> arcs_;
};

SplitNetwork terminal_network(const Digraph& g, const std::vector<char>& allowed,
                              const VertexSet& a, const VertexSet& b) {
  SplitNetwork net(g, allowed, kInf);
  for (Vertex v : a)
    if (allowed[v]) net.add_arc(net.source(), net.in(v), kInf);
  for (Vertex v : b)
    if (allowed[v]) net.add_arc(net.out(v), net.sink(), kInf);
  return net;
}

void check_vertices(const Digraph& g, const VertexSet& s) {
  for (Vertex v : s)
    if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("vertex out of range");
}

PathSystem paths_within(const Digraph& g, const std::vector<char>& allowed, const VertexSet& a,
                        const VertexSet& b, int limit) {
  SplitNetwork net = terminal_network(g, allowed, a, b);
  net.max_flow(net.source(), net.sink(), limit);
  PathSystem ps{net.extract_paths()};
  std::sort(ps.paths.begin(), ps.paths.end());
  return ps;
}

}  // namespace

VertexSet PathSystem::vertices() const {
  std::vector<Vertex> all;
  for (const Path& p : paths) all.insert(all.end(), p.begin(), p.end());
  return VertexSet(std::move(all));
}

bool is_separation(const Digraph& g, const Separation& s) {
  if (set_union(s.c, s.d) != g.vertices()) return false;
  for (const Edge& e : g.edges()) {
    bool tail_c_only = s.c.contains(e.tail) && !s.d.contains(e.tail);
    bool head_d_only = s.d.contains(e.head) && !s.c.contains(e.head);
    if (tail_c_only && head_d_only) return false;
  }
  return true;
}

bool separates(const Separation& s, const VertexSet& a, const VertexSet& b) {
  return is_subset(a, s.c) && is_subset(b, s.d);
}

bool is_k_triple(const Digraph& g, const KTriple& t) {
  const std::size_t k = t.a.size();
  if (t.b.size() != k || t.c.size() != k) return false;
  std::vector<char> used(g.vertex_count(), 0);
  for (const auto* part : {&t.a, &t.b, &t.c})
    for (Vertex v : *part) {
      if (v < 0 || v >= g.vertex_count() || used[v]) return false;
      used[v] = 1;
    }
  for (Vertex a : t.a)
    for (Vertex b : t.b)
      if (!g.has_edge(a, b)) return false;
  for (Vertex b : t.b)
    for (Vertex c : t.c)
      if (!g.has_edge(b, c)) return false;
  for (std::size_t i = 0; i < k; ++i)
    if (!g.has_edge(t.c[i], t.a[i])) return false;
  return true;
}

bool is_disjoint_path_system(const Digraph& g, const PathSystem& ps, const VertexSet& a,
                             const VertexSet& b) {
  std::vector<char> used(g.vertex_count(), 0);
  for (const Path& p : ps.paths) {
    if (p.empty() || !a.contains(p.front()) || !b.contains(p.back())) return false;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] < 0 || p[i] >= g.vertex_count() || used[p[i]]) return false;
      used[p[i]] = 1;
      if (i + 1 < p.size() && !g.has_edge(p[i], p[i + 1])) return false;
    }
  }
  return true;
}

int max_disjoint_path_count(const Digraph& g, const VertexSet& a, const VertexSet& b, int limit) {
  check_vertices(g, a);
  check_vertices(g, b);
  std::vector<char> allowed(g.vertex_count(), 1);
  SplitNetwork net = terminal_network(g, allowed, a, b);
  return net.max_flow(net.source(), net.sink(), limit);
}

PathSystem max_disjoint_paths(const Digraph& g, const VertexSet& a, const VertexSet& b) {
  check_vertices(g, a);
  check_vertices(g, b);
  return paths_within(g, std::vector<char>(g.vertex_count(), 1), a, b, -1);
}

Separation min_separation(const Digraph& g, const VertexSet& a, const VertexSet& b) {
  check_vertices(g, a);
  check_vertices(g, b);
  std::vector<char> allowed(g.vertex_count(), 1);
  SplitNetwork net = terminal_network(g, allowed, a, b);
  net.max_flow(net.source(), net.sink(), -1);
  auto reach = net.residual_reachable(net.source());
  std::vector<Vertex> c, d;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    bool in_reached = reach[net.in(v)];
    bool out_reached = reach[net.out(v)];
    if (in_reached) c.push_back(v);
    if (!in_reached || !out_reached) d.push_back(v);
  }
  return {VertexSet(std::move(c)), VertexSet(std::move(d))};
}

PathSystem minimal_union_paths(const Digraph& g, const VertexSet& a, const VertexSet& b, int s) {
  check_vertices(g, a);
  check_vertices(g, b);
  if (s < 0) throw std::invalid_argument("path count must be non-negative");
  if (s == 0) return {};
  const int n = g.vertex_count();
  PathSystem current = paths_within(g, std::vector<char>(n, 1), a, b, s);
  if (static_cast<int>(current.size()) < s)
    throw std::invalid_argument("fewer than " + std::to_string(s) + " disjoint paths exist");

  // Shrink the union one vertex at a time; a union from which no single
  // vertex can be dropped is inclusion-minimal.
  for (bool shrunk = true; shrunk;) {
    shrunk = false;
    VertexSet uni = current.vertices();
    std::vector<char> allowed(n, 0);
    for (Vertex v : uni) allowed[v] = 1;
    for (Vertex x : uni) {
      allowed[x] = 0;
      PathSystem trial = paths_within(g, allowed, a, b, s);
      allowed[x] = 1;
      if (static_cast<int>(trial.size()) == s) {
        current = std::move(trial);
        shrunk = true;
        break;
      }
    }
  }
  return current;
}

int internally_disjoint_paths(const Digraph& g, Vertex u, Vertex v, int limit) {
  if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count())
    throw std::invalid_argument("vertex out of range");
  if (u == v) throw std::invalid_argument("endpoints must differ");
  SplitNetwork net(g, std::vector<char>(g.vertex_count(), 1), 1);
  return net.max_flow(net.out(u), net.in(v), limit);
}

std::optional<KTriple> find_k_triple(const Digraph& g, int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  const int n = g.vertex_count();
  if (3 * k > n) return std::nullopt;

  std::vector<Vertex> b_set;
  std::optional<KTriple> found;

  // Picks k disjoint back-edges c -> a with c in cand_c, a in cand_a.
  auto match_back_edges = [&](const std::vector<char>& cand_a, const std::vector<char>& cand_c)
      -> std::optional<std::vector<std::pair<Vertex, Vertex>>> {
    std::vector<std::pair<Vertex, Vertex>> options;
    for (Vertex c = 0; c < n; ++c) {
      if (!cand_c[c]) continue;
      for (Vertex a : g.successors(c))
        if (cand_a[a]) options.push_back({c, a});
    }
    std::vector<char> used(n, 0);
    std::vector<std::pair<Vertex, Vertex>> chosen;
    auto rec = [&](auto&& self, std::size_t from) -> bool {
      if (static_cast<int>(chosen.size()) == k) return true;
      for (std::size_t i = from; i < options.size(); ++i) {
        if (options.size() - i < static_cast<std::size_t>(k) - chosen.size()) return false;
        auto [c, a] = options[i];
        if (used[c] || used[a]) continue;
        used[c] = used[a] = 1;
        chosen.push_back(options[i]);
        if (self(self, i + 1)) return true;
        chosen.pop_back();
        used[c] = used[a] = 0;
      }
      return false;
    };
    if (rec(rec, 0)) return chosen;
    return std::nullopt;
  };

  auto search_b = [&](auto&& self, Vertex from) -> bool {
    if (static_cast<int>(b_set.size()) == k) {
      std::vector<char> cand_a(n, 1), cand_c(n, 1);
      int count_a = 0, count_c = 0;
      for (Vertex x = 0; x < n; ++x) {
        for (Vertex b : b_set) {
          if (x == b) cand_a[x] = cand_c[x] = 0;
          if (!g.has_edge(x, b)) cand_a[x] = 0;
          if (!g.has_edge(b, x)) cand_c[x] = 0;
        }
        count_a += cand_a[x];
        count_c += cand_c[x];
      }
      if (count_a < k || count_c < k) return false;
      auto pairs = match_back_edges(cand_a, cand_c);
      if (!pairs) return false;
      KTriple t;
      t.b = b_set;
      for (auto [c, a] : *pairs) {
        t.a.push_back(a);
        t.c.push_back(c);
      }
      found = std::move(t);
      return true;
    }
    for (Vertex v = from; v < n; ++v) {
      // Every member of B needs k in-neighbours and k out-neighbours.
      if (static_cast<int>(g.predecessors(v).size()) < k ||
          static_cast<int>(g.successors(v).size()) < k)
        continue;
      b_set.push_back(v);
      if (self(self, v + 1)) return true;
      b_set.pop_back();
    }
    return false;
  };
  search_b(search_b, 0);
  return found;
}

std::optional<VertexSet> pairwise_k_connected_set(const Digraph& g, int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  const int n = g.vertex_count();
  if (n < k) return std::nullopt;
  if (k == 1) return VertexSet{0};

  std::vector<char> linked(static_cast<std::size_t>(n) * n, 0);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v) linked[u * n + v] = internally_disjoint_paths(g, u, v, k) >= k;

  std::vector<Vertex> chosen;
  auto rec = [&](auto&& self, Vertex from) -> bool {
    if (static_cast<int>(chosen.size()) == k) return true;
    for (Vertex v = from; v < n; ++v) {
      bool ok = std::all_of(chosen.begin(), chosen.end(), [&](Vertex u) {
        return linked[u * n + v] && linked[v * n + u];
      });
      if (!ok) continue;
      chosen.push_back(v);
      if (self(self, v + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (rec(rec, 0)) return VertexSet(chosen);
  return std::nullopt;
}

}  // namespace dminor
