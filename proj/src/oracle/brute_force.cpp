#include "dminor/oracle/brute_force.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace dminor::oracle {

namespace {

// Plain DFS reachability avoiding `blocked`.
bool reaches(const Digraph& g, const std::vector<char>& sources, const std::vector<char>& targets,
             const std::vector<char>& blocked) {
  const int n = g.vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack;
  for (Vertex v = 0; v < n; ++v)
    if (sources[v] && !blocked[v]) seen[v] = 1, stack.push_back(v);
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    if (targets[v]) return true;
    for (const Edge& e : g.edges())
      if (e.tail == v && !blocked[e.head] && !seen[e.head]) seen[e.head] = 1, stack.push_back(e.head);
  }
  return false;
}

bool has_cycle_in(const Digraph& g, unsigned mask) {
  // Repeatedly strip vertices without an in-neighbour inside the set.
  unsigned live = mask;
  for (bool changed = true; changed;) {
    changed = false;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (!((live >> v) & 1)) continue;
      bool has_in = false;
      for (const Edge& e : g.edges())
        if (e.head == v && ((live >> e.tail) & 1)) has_in = true;
      if (!has_in) live &= ~(1u << v), changed = true;
    }
  }
  return live != 0;
}

}  // namespace

int pathwidth(const Digraph& g) {
  const int n = g.vertex_count();
  if (n > 12) throw std::invalid_argument("oracle path-width is limited to 12 vertices");
  if (n == 0) return -1;
  // state digit per vertex: 0 not yet introduced, 1 in the bag, 2 removed
  int states = 1;
  for (int i = 0; i < n; ++i) states *= 3;
  std::vector<int> memo(states, -2);
  std::vector<int> pow3(n, 1);
  for (int i = 1; i < n; ++i) pow3[i] = pow3[i - 1] * 3;
  auto digit = [&](int s, int v) { return (s / pow3[v]) % 3; };

  std::function<int(int)> best = [&](int s) -> int {
    if (memo[s] != -2) return memo[s];
    bool done = true;
    int bag = 0;
    for (int v = 0; v < n; ++v) {
      done = done && digit(s, v) == 2;
      bag += digit(s, v) == 1;
    }
    if (done) return memo[s] = 0;
    int result = std::numeric_limits<int>::max();
    for (int v = 0; v < n; ++v) {
      if (digit(s, v) == 0) {
        result = std::min(result, std::max(bag + 1, best(s + pow3[v])));
      } else if (digit(s, v) == 1) {
        bool ready = true;
        for (const Edge& e : g.edges())
          if (e.tail == v && digit(s, e.head) == 0) ready = false;
        if (ready) result = std::min(result, best(s + pow3[v]));
      }
    }
    return memo[s] = result;
  };
  return best(0) - 1;
}

int min_vertex_cut(const Digraph& g, const VertexSet& a, const VertexSet& b) {
  const int n = g.vertex_count();
  if (n > 16) throw std::invalid_argument("oracle cut is limited to 16 vertices");
  std::vector<char> src(n, 0), dst(n, 0);
  for (Vertex v : a) src[v] = 1;
  for (Vertex v : b) dst[v] = 1;
  int best = n;
  for (unsigned s = 0; s < (1u << n); ++s) {
    const int size = std::popcount(s);
    if (size >= best) continue;
    std::vector<char> blocked(n);
    for (Vertex v = 0; v < n; ++v) blocked[v] = (s >> v) & 1;
    if (!reaches(g, src, dst, blocked)) best = size;
  }
  return best;
}

int min_internal_cut(const Digraph& g, Vertex u, Vertex v) {
  const int n = g.vertex_count();
  if (n > 16) throw std::invalid_argument("oracle cut is limited to 16 vertices");
  std::vector<Edge> rest;
  for (const Edge& e : g.edges())
    if (!(e.tail == u && e.head == v)) rest.push_back(e);
  const Digraph h(n, rest);
  std::vector<char> src(n, 0), dst(n, 0);
  src[u] = 1;
  dst[v] = 1;
  int best = n;
  for (unsigned s = 0; s < (1u << n); ++s) {
    if ((s >> u) & 1 || (s >> v) & 1) continue;
    const int size = std::popcount(s);
    if (size >= best) continue;
    std::vector<char> blocked(n);
    for (Vertex w = 0; w < n; ++w) blocked[w] = (s >> w) & 1;
    if (!reaches(h, src, dst, blocked)) best = size;
  }
  return best + (g.has_edge(u, v) ? 1 : 0);
}

bool has_k_triple(const Digraph& g, int k) {
  const int n = g.vertex_count();
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (3 * k > n) return false;
  // Assign each vertex a role 0 (unused), 1 (A), 2 (B), 3 (C).
  std::vector<int> role(n, 0);
  std::function<bool(int, int, int, int)> assign = [&](int v, int na, int nb, int nc) -> bool {
    if (na > k || nb > k || nc > k) return false;
    if (v == n) {
      if (na != k || nb != k || nc != k) return false;
      std::vector<Vertex> as, bs, cs;
      for (Vertex w = 0; w < n; ++w) {
        if (role[w] == 1) as.push_back(w);
        if (role[w] == 2) bs.push_back(w);
        if (role[w] == 3) cs.push_back(w);
      }
      for (Vertex x : as)
        for (Vertex y : bs)
          if (!g.has_edge(x, y)) return false;
      for (Vertex y : bs)
        for (Vertex z : cs)
          if (!g.has_edge(y, z)) return false;
      std::vector<int> perm(k);
      std::iota(perm.begin(), perm.end(), 0);
      do {
        bool ok = true;
        for (int i = 0; i < k && ok; ++i) ok = g.has_edge(cs[i], as[perm[i]]);
        if (ok) return true;
      } while (std::next_permutation(perm.begin(), perm.end()));
      return false;
    }
    for (int r = 0; r < 4; ++r) {
      role[v] = r;
      if (assign(v + 1, na + (r == 1), nb + (r == 2), nc + (r == 3))) return true;
    }
    role[v] = 0;
    return false;
  };
  return assign(0, 0, 0, 0);
}

bool higman_leq(const std::vector<Token>& p, const std::vector<Token>& q, const QuasiOrder& base,
                bool pinned) {
  const int a = static_cast<int>(p.size()), b = static_cast<int>(q.size());
  if (pinned && (a < 2 || b < 2)) throw std::invalid_argument("pinned comparison needs length >= 2");
  if (a > b) return false;
  if (b > 30) throw std::invalid_argument("oracle injection search is limited to length 30");
  // Every a-subset of positions of q as a bitmask, in Gosper order.
  const std::uint32_t end = std::uint32_t{1} << b;
  std::uint32_t pick = (std::uint32_t{1} << a) - 1;
  while (pick < end) {
    bool ok = !pinned || ((pick & 1) && (pick >> (b - 1)) & 1);
    for (int i = 0, j = 0; i < a && ok; ++i, ++j) {
      while (!((pick >> j) & 1)) ++j;
      ok = base.leq(p[i], q[j]);
    }
    if (ok) return true;
    if (pick == 0) break;
    const std::uint32_t low = pick & -pick, ripple = pick + low;
    pick = ripple | (((pick ^ ripple) >> 2) / low);
  }
  return false;
}

bool has_two_disjoint_cycles(const Digraph& g) {
  const int n = g.vertex_count();
  if (n > 20) throw std::invalid_argument("oracle cycle search is limited to 20 vertices");
  const unsigned all = (1u << n) - 1;
  for (unsigned s = 1; s < all; ++s)
    if (has_cycle_in(g, s) && has_cycle_in(g, all & ~s)) return true;
  return false;
}

std::vector<Digraph> all_simple_digraphs(int n) {
  if (n > 4) throw std::invalid_argument("too many digraphs");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v) pairs.emplace_back(u, v);
  std::vector<Digraph> out;
  for (unsigned s = 0; s < (1u << pairs.size()); ++s) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if ((s >> i) & 1) edges.push_back({pairs[i].first, pairs[i].second});
    out.emplace_back(n, std::move(edges));
  }
  return out;
}

namespace {

std::vector<Digraph> orientations(int n, int choices) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  long total = 1;
  for (std::size_t i = 0; i < pairs.size(); ++i) total *= choices;
  std::vector<Digraph> out;
  for (long code = 0; code < total; ++code) {
    std::vector<Edge> edges;
    long c = code;
    for (auto [u, v] : pairs) {
      const int d = static_cast<int>(c % choices);
      c /= choices;
      if (d != 1) edges.push_back({u, v});
      if (d != 0) edges.push_back({v, u});
    }
    out.emplace_back(n, std::move(edges));
  }
  return out;
}

}  // namespace

std::vector<Digraph> all_tournaments(int n) {
  if (n > 6) throw std::invalid_argument("too many tournaments");
  return orientations(n, 2);
}

std::vector<Digraph> all_semi_complete(int n) {
  if (n > 5) throw std::invalid_argument("too many semi-complete digraphs");
  return orientations(n, 3);
}

}  // namespace dminor::oracle
