#include "dminor/digraph.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "dminor/error.hpp"

namespace dminor {

Digraph::Digraph(int vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
  if (n_ < 0) throw std::invalid_argument("negative vertex count");
  out_.resize(n_);
  in_.resize(n_);
  succ_.resize(n_);
  pred_.resize(n_);
  mult_.assign(static_cast<std::size_t>(n_) * n_, 0);
  for (int i = 0; i < edge_count(); ++i) {
    const Edge& e = edges_[i];
    if (e.tail < 0 || e.tail >= n_ || e.head < 0 || e.head >= n_)
      throw std::invalid_argument("edge " + std::to_string(i) + " has an endpoint out of range");
    out_[e.tail].push_back(i);
    in_[e.head].push_back(i);
    if (mult_[e.tail * n_ + e.head]++ == 0 && e.tail != e.head) {
      succ_[e.tail].push_back(e.head);
      pred_[e.head].push_back(e.tail);
    }
  }
  for (auto& s : succ_) std::sort(s.begin(), s.end());
  for (auto& p : pred_) std::sort(p.begin(), p.end());
}

bool Digraph::has_loops() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.tail == e.head; });
}

std::vector<Mask> Digraph::out_masks() const {
  if (n_ > 64) throw std::invalid_argument("mask kernels need at most 64 vertices");
  std::vector<Mask> out(n_, 0);
  for (Vertex v = 0; v < n_; ++v)
    for (Vertex w : succ_[v]) out[v] |= Mask{1} << w;
  return out;
}

std::vector<Mask> Digraph::in_masks() const {
  if (n_ > 64) throw std::invalid_argument("mask kernels need at most 64 vertices");
  std::vector<Mask> in(n_, 0);
  for (Vertex v = 0; v < n_; ++v)
    for (Vertex w : pred_[v]) in[v] |= Mask{1} << w;
  return in;
}

bool operator==(const Digraph& a, const Digraph& b) {
  if (a.n_ != b.n_ || a.edges_.size() != b.edges_.size()) return false;
  return a.mult_ == b.mult_;
}

Subdigraph induced_subdigraph(const Digraph& g, const VertexSet& vs) {
  Subdigraph s{vs, {}};
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    if (vs.contains(e.tail) && vs.contains(e.head)) s.edges.push_back(i);
  }
  return s;
}

InducedDigraph induce(const Digraph& g, const VertexSet& vs) {
  std::vector<Vertex> local(g.vertex_count(), -1);
  InducedDigraph out;
  out.original = vs.items();
  for (std::size_t i = 0; i < out.original.size(); ++i) {
    if (out.original[i] < 0 || out.original[i] >= g.vertex_count())
      throw std::invalid_argument("vertex out of range");
    local[out.original[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    if (local[e.tail] >= 0 && local[e.head] >= 0) {
      edges.push_back({local[e.tail], local[e.head]});
      out.original_edge.push_back(i);
    }
  }
  out.graph = Digraph(static_cast<int>(vs.size()), std::move(edges));
  return out;
}

void check_subdigraph(const Digraph& g, const Subdigraph& s) {
  for (Vertex v : s.vertices)
    if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("subdigraph vertex out of range");
  for (int e : s.edges) {
    if (e < 0 || e >= g.edge_count()) throw std::invalid_argument("subdigraph edge out of range");
    const Edge& edge = g.edge(e);
    if (!s.vertices.contains(edge.tail) || !s.vertices.contains(edge.head))
      throw std::invalid_argument("subdigraph edge " + std::to_string(e) +
                                  " leaves its vertex set");
  }
}

std::vector<VertexSet> scc_decompose(const Digraph& g) {
  const int n = g.vertex_count();
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<Vertex> stack;
  std::vector<VertexSet> comps;
  int counter = 0;

  // Iterative Tarjan; frames hold (vertex, next successor position).
  std::vector<std::pair<Vertex, std::size_t>> frames;
  for (Vertex root = 0; root < n; ++root) {
    if (index[root] >= 0) continue;
    frames.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      const auto& succ = g.successors(v);
      if (pos < succ.size()) {
        Vertex w = succ[pos++];
        if (index[w] < 0) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::vector<Vertex> comp;
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp.push_back(w);
        } while (w != v);
        comps.emplace_back(std::move(comp));
      }
      Vertex done = v;
      frames.pop_back();
      if (!frames.empty()) {
        Vertex parent = frames.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
    }
  }
  // Tarjan emits sinks first.
  std::reverse(comps.begin(), comps.end());
  return comps;
}

namespace {

// Vertices of `s` reachable from `start` along edges of `s`, forward or
// backward.
std::vector<char> reach_within(const Digraph& g, const Subdigraph& s, Vertex start,
                               bool forward) {
  std::vector<char> in_edges(g.edge_count(), 0);
  for (int e : s.edges) in_edges[e] = 1;
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<Vertex> todo{start};
  seen[start] = 1;
  while (!todo.empty()) {
    Vertex v = todo.back();
    todo.pop_back();
    auto incident = forward ? g.out_edges(v) : g.in_edges(v);
    for (int e : incident) {
      if (!in_edges[e]) continue;
      Vertex w = forward ? g.edge(e).head : g.edge(e).tail;
      if (!seen[w]) {
        seen[w] = 1;
        todo.push_back(w);
      }
    }
  }
  return seen;
}

}  // namespace

bool is_strongly_connected(const Digraph& g, const Subdigraph& s) {
  check_subdigraph(g, s);
  if (s.vertices.empty()) return false;
  for (bool forward : {true, false}) {
    auto seen = reach_within(g, s, s.vertices.front(), forward);
    for (Vertex v : s.vertices)
      if (!seen[v]) return false;
  }
  return true;
}

bool is_strongly_connected(const Digraph& g) {
  return g.vertex_count() > 0 && scc_decompose(g).size() == 1;
}

bool mask_strongly_connected(std::span<const Mask> out, std::span<const Mask> in, Mask vs) {
  if (vs == 0) return false;
  const Mask start = vs & (~vs + 1);
  for (auto adj : {out, in}) {
    Mask seen = start, frontier = start;
    while (frontier) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
      next &= vs & ~seen;
      seen |= next;
      frontier = next;
    }
    if (seen != vs) return false;
  }
  return true;
}

bool is_acyclic(const Digraph& g) {
  if (g.has_loops()) return false;
  return static_cast<int>(scc_decompose(g).size()) == g.vertex_count();
}

Contraction contract(const Digraph& g, const Subdigraph& h) {
  if (!is_strongly_connected(g, h))
    throw std::invalid_argument("contracted subdigraph is not strongly connected");
  return contract_vertices(g, h.vertices);
}

Contraction contract_vertices(const Digraph& g, const VertexSet& vs) {
  if (vs.empty()) throw std::invalid_argument("cannot contract an empty vertex set");
  Contraction out;
  out.vertex_map.assign(g.vertex_count(), -1);
  int next = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!vs.contains(v)) {
      out.vertex_map[v] = next++;
    } else if (v == vs.front()) {
      out.merged = next++;
    }
  }
  for (Vertex v : vs) out.vertex_map[v] = out.merged;
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    if (vs.contains(e.tail) && vs.contains(e.head)) continue;
    edges.push_back({out.vertex_map[e.tail], out.vertex_map[e.head]});
  }
  out.graph = Digraph(next, std::move(edges));
  return out;
}

Digraph delete_vertex(const Digraph& g, Vertex v) {
  if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("vertex out of range");
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (e.tail == v || e.head == v) continue;
    edges.push_back({e.tail - (e.tail > v), e.head - (e.head > v)});
  }
  return Digraph(g.vertex_count() - 1, std::move(edges));
}

Digraph delete_edge(const Digraph& g, int edge_index) {
  if (edge_index < 0 || edge_index >= g.edge_count())
    throw std::invalid_argument("edge out of range");
  std::vector<Edge> edges = g.edges();
  edges.erase(edges.begin() + edge_index);
  return Digraph(g.vertex_count(), std::move(edges));
}

bool is_simple(const Digraph& g) {
  const int n = g.vertex_count();
  for (Vertex u = 0; u < n; ++u) {
    if (g.multiplicity(u, u) > 0) return false;
    for (Vertex v = 0; v < n; ++v)
      if (g.multiplicity(u, v) > 1) return false;
  }
  return true;
}

bool is_semi_complete(const Digraph& g) {
  if (!is_simple(g)) return false;
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    for (Vertex v = u + 1; v < g.vertex_count(); ++v)
      if (!g.has_edge(u, v) && !g.has_edge(v, u)) return false;
  return true;
}

bool is_tournament(const Digraph& g) {
  if (!is_semi_complete(g)) return false;
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    for (Vertex v = u + 1; v < g.vertex_count(); ++v)
      if (g.has_edge(u, v) && g.has_edge(v, u)) return false;
  return true;
}

namespace {

int max_independent(const std::vector<std::vector<char>>& adj, std::vector<char> alive, int count) {
  const int n = static_cast<int>(adj.size());
  int taken = 0;
  // Vertices of degree <= 1 belong to some maximum independent set.
  for (bool changed = true; changed;) {
    changed = false;
    for (int v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      int deg = 0, other = -1;
      for (int w = 0; w < n && deg < 2; ++w)
        if (alive[w] && adj[v][w]) ++deg, other = w;
      if (deg <= 1) {
        alive[v] = 0;
        --count;
        ++taken;
        if (other >= 0) alive[other] = 0, --count;
        changed = true;
      }
    }
  }
  if (count == 0) return taken;
  int best_v = -1, best_deg = -1;
  for (int v = 0; v < n; ++v) {
    if (!alive[v]) continue;
    int deg = 0;
    for (int w = 0; w < n; ++w) deg += alive[w] && adj[v][w];
    if (deg > best_deg) best_deg = deg, best_v = v;
  }
  auto without = alive;
  without[best_v] = 0;
  int a = max_independent(adj, without, count - 1);
  auto with = alive;
  int removed = 0;
  for (int w = 0; w < n; ++w)
    if (with[w] && (w == best_v || adj[best_v][w])) with[w] = 0, ++removed;
  if (a >= 1 + (count - removed)) return taken + a;
  int b = 1 + max_independent(adj, with, count - removed);
  return taken + std::max(a, b);
}

}  // namespace

int stability_number(const Digraph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (const Edge& e : g.edges())
    if (e.tail != e.head) adj[e.tail][e.head] = adj[e.head][e.tail] = 1;
  return max_independent(adj, std::vector<char>(n, 1), n);
}

DigraphClass classify(const Digraph& g) {
  DigraphClass c;
  c.simple = is_simple(g);
  c.semi_complete = c.simple && is_semi_complete(g);
  c.tournament = c.semi_complete && is_tournament(g);
  c.acyclic = is_acyclic(g);
  c.stability_number = c.semi_complete ? (g.vertex_count() > 0 ? 1 : 0) : stability_number(g);
  return c;
}

bool is_induced_path(const Digraph& g, std::span<const Vertex> vs) {
  if (!is_semi_complete(g))
    throw std::invalid_argument("induced paths are defined in semi-complete digraphs");
  std::vector<char> seen(g.vertex_count(), 0);
  for (Vertex v : vs) {
    if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("vertex out of range");
    if (seen[v]++) throw std::invalid_argument("path repeats a vertex");
  }
  const std::size_t len = vs.size();
  for (std::size_t i = 0; i + 1 < len; ++i)
    if (!g.has_edge(vs[i], vs[i + 1])) return false;
  for (std::size_t i = 0; i < len; ++i)
    for (std::size_t j = i + 2; j < len; ++j)
      if (g.has_edge(vs[i], vs[j])) return false;
  return true;
}

// ------------------------------------------------------------- text format

Digraph parse_digraph(std::istream& in) {
  std::string line;
  int line_no = 0;
  auto next_line = [&](std::string& out) {
    while (std::getline(in, line)) {
      ++line_no;
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      out = line;
      return true;
    }
    return false;
  };

  std::string header;
  if (!next_line(header)) throw ParseError("missing header `n m`", line_no + 1);
  std::istringstream hs(header);
  long long n = -1, m = -1;
  std::string extra;
  if (!(hs >> n >> m) || (hs >> extra) || n < 0 || m < 0)
    throw ParseError("expected header `n m` with non-negative integers", line_no);

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    std::string body;
    if (!next_line(body))
      throw ParseError("expected " + std::to_string(m) + " edges, found " + std::to_string(i),
                       line_no);
    std::istringstream es(body);
    long long t = -1, h = -1;
    if (!(es >> t >> h) || (es >> extra)) throw ParseError("expected `tail head`", line_no);
    if (t < 0 || t >= n || h < 0 || h >= n)
      throw ParseError("edge endpoint out of range", line_no);
    edges.push_back({static_cast<Vertex>(t), static_cast<Vertex>(h)});
  }
  std::string rest;
  if (next_line(rest)) throw ParseError("unexpected content after the edge list", line_no);
  return Digraph(static_cast<int>(n), std::move(edges));
}

Digraph parse_digraph(const std::string& text) {
  std::istringstream in(text);
  return parse_digraph(in);
}

std::string to_text(const Digraph& g) {
  std::vector<Edge> edges = g.edges();
  std::sort(edges.begin(), edges.end());
  std::ostringstream out;
  out << g.vertex_count() << ' ' << edges.size() << '\n';
  for (const Edge& e : edges) out << e.tail << ' ' << e.head << '\n';
  return out.str();
}

}  // namespace dminor
