#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dminor/vertex_set.hpp"

namespace dminor {

struct Edge {
  Vertex tail = 0;
  Vertex head = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite multi-digraph on the dense vertex ids 0..vertex_count-1.
///
/// Parallel edges and loops are kept as separate entries of the edge list;
/// an edge is identified by its index in that list. Immutable once built.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int vertex_count, std::vector<Edge> edges = {});

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  bool null() const { return n_ == 0; }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int index) const { return edges_.at(index); }

  // Edge indices leaving / entering v, in ascending index order.
  std::span<const int> out_edges(Vertex v) const { return out_[v]; }
  std::span<const int> in_edges(Vertex v) const { return in_[v]; }

  // Distinct out-/in-neighbours, ascending; loops excluded.
  const std::vector<Vertex>& successors(Vertex v) const { return succ_[v]; }
  const std::vector<Vertex>& predecessors(Vertex v) const { return pred_[v]; }

  int multiplicity(Vertex tail, Vertex head) const { return mult_[tail * n_ + head]; }
  bool has_edge(Vertex tail, Vertex head) const { return multiplicity(tail, head) > 0; }
  bool has_loops() const;

  // Out-neighbour masks (loops excluded). Requires vertex_count() <= 64.
  std::vector<Mask> out_masks() const;
  std::vector<Mask> in_masks() const;

  VertexSet vertices() const { return VertexSet::range(n_); }

  /// Same vertex count and the same multiset of edges.
  friend bool operator==(const Digraph& a, const Digraph& b);

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
  std::vector<std::vector<Vertex>> succ_;
  std::vector<std::vector<Vertex>> pred_;
  std::vector<int> mult_;
};

/// A subdigraph of some host: a vertex set plus a set of host edge indices.
struct Subdigraph {
  VertexSet vertices;
  std::vector<int> edges;  // sorted host edge indices

  friend bool operator==(const Subdigraph&, const Subdigraph&) = default;
};

// Induced subdigraph of `g` on `vs`, as a Subdigraph of g.
Subdigraph induced_subdigraph(const Digraph& g, const VertexSet& vs);

/// Induced subdigraph relabelled to dense ids. `original[i]` is the host id
/// of local vertex i (ascending), `original_edge[e]` the host index of local
/// edge e.
struct InducedDigraph {
  Digraph graph;
  std::vector<Vertex> original;
  std::vector<int> original_edge;
};
InducedDigraph induce(const Digraph& g, const VertexSet& vs);

// Throws std::invalid_argument when an edge of `s` has an endpoint outside
// its vertex set or a vertex/edge id is out of range.
void check_subdigraph(const Digraph& g, const Subdigraph& s);

/// Strongly connected components in topological order of the condensation:
/// every edge between distinct components goes from an earlier one to a
/// later one.
std::vector<VertexSet> scc_decompose(const Digraph& g);

/// True iff `s` is non-null and mutually reachable using only its edges.
bool is_strongly_connected(const Digraph& g, const Subdigraph& s);
bool is_strongly_connected(const Digraph& g);

// Strong connectivity of the subdigraph induced on a mask. n <= 64.
bool mask_strongly_connected(std::span<const Mask> out, std::span<const Mask> in, Mask vs);

bool is_acyclic(const Digraph& g);

struct Contraction {
  Digraph graph;
  Vertex merged = 0;               // id of the contracted vertex w
  std::vector<Vertex> vertex_map;  // host id -> id in `graph`
};

/// G/H: the vertices of `h` become one vertex w. Edges with both endpoints in
/// V(h) are dropped (no loop is created at w); every other edge is kept with
/// its endpoints remapped. Surviving vertices keep their relative order and w
/// takes the position of the smallest vertex of h, so contracting a single
/// loopless vertex is the identity.
Contraction contract(const Digraph& g, const Subdigraph& h);
// Contracting by vertex set only; G[vs] must be strongly connected.
Contraction contract_vertices(const Digraph& g, const VertexSet& vs);

Digraph delete_vertex(const Digraph& g, Vertex v);
Digraph delete_edge(const Digraph& g, int edge_index);

struct DigraphClass {
  bool simple = false;
  bool semi_complete = false;
  bool tournament = false;
  bool acyclic = false;
  int stability_number = 0;
};

DigraphClass classify(const Digraph& g);
bool is_simple(const Digraph& g);
bool is_semi_complete(const Digraph& g);
bool is_tournament(const Digraph& g);

/// Largest independent set of the underlying undirected graph (loops
/// ignored), by exact branch and bound.
int stability_number(const Digraph& g);

/// Directed path v_1..v_n with every v_i v_{i+1} an edge and no forward chord
/// v_i v_j for j - i >= 2. Throws if `g` is not semi-complete or `vs` repeats
/// a vertex.
bool is_induced_path(const Digraph& g, std::span<const Vertex> vs);

// ---------------------------------------------------------------- families

enum class Family {
  transitive,         // v_a -> v_b iff a < b
  cycle,              // 0 -> 1 -> ... -> n-1 -> 0
  super_tournament,   // transitive T_i with the i "ring" edges doubled, i >= 3
  stability_two,      // simple digraph of stability number two, i >= 2
  random_tournament,  // each pair u<v oriented by one generator bit
  random_digraph,     // each ordered pair u!=v present with probability 1/2
};

std::optional<Family> parse_family(const std::string& name);
std::string family_name(Family f);

/// Seeded families draw from std::mt19937_64(seed), taking the top bit of
/// one 64-bit draw per decision, pairs in lexicographic order.
Digraph generate(Family family, int size, std::uint64_t seed = 0);

Digraph transitive_tournament(int n);
Digraph directed_cycle(int n);
Digraph super_tournament(int i);
Digraph stability_two(int i);
Digraph random_tournament(int n, std::uint64_t seed);
Digraph random_digraph(int n, std::uint64_t seed);

// Vertex ids of the stability-two family.
struct StabilityTwoLayout {
  int i;
  Vertex a(int k) const { return k; }           // k in 0..2
  Vertex b(int k) const { return 3 + k; }       // k in 0..2
  Vertex c(int k) const { return 6 + k; }       // k in 0..i-1
  Vertex d(int k) const { return 6 + i + k; }   // k in 0..i-1
};

// ------------------------------------------------------------- text format

/// `n m`, then m lines `tail head`. Blank lines and lines starting with `#`
/// are skipped. Throws ParseError with the offending line number.
Digraph parse_digraph(std::istream& in);
Digraph parse_digraph(const std::string& text);

/// Canonical text: edges sorted lexicographically, one per line.
std::string to_text(const Digraph& g);

}  // namespace dminor
