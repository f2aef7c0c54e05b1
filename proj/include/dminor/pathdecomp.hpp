#pragma once

#include <optional>
#include <vector>

#include "dminor/connectivity.hpp"
#include "dminor/digraph.hpp"

namespace dminor {

/// Bag sequence W_1..W_r (stored 0-based). Empty bags are legal.
struct PathDecomposition {
  std::vector<VertexSet> bags;

  int length() const { return static_cast<int>(bags.size()); }
  const VertexSet& first() const { return bags.front(); }
  const VertexSet& last() const { return bags.back(); }
  int min_bag() const;  // m(P)
  int max_bag() const;  // M(P)
  int width() const { return max_bag() - 1; }

  friend bool operator==(const PathDecomposition&, const PathDecomposition&) = default;
};

// (n_0, ..., n_k) with n_j the number of bags of size j. Compared
// lexicographically; a larger measure has more small bags.
using LexMeasure = std::vector<int>;
LexMeasure lex_measure(const PathDecomposition& p, int k);

struct BetweennessWitness {
  Vertex vertex;
  int h, i, j;  // vertex in W_h and W_j but not W_i, h < i < j
};

struct LinkedWitness {
  int h, j, t;
  Separation separation;  // separates W_h from W_j with order < t
};

struct LinkedFlags {
  bool increment_ok = false;
  bool cardinality_ok = false;
  bool linked_ok = false;
  std::optional<int> increment_witness;  // i with |W_i Δ W_{i+1}| != 1
  std::optional<LinkedWitness> witness;

  bool all() const { return increment_ok && cardinality_ok && linked_ok; }
};

struct DecompositionReport {
  bool coverage_ok = false;
  bool betweenness_ok = false;
  bool cut_ok = false;
  std::optional<Vertex> uncovered;
  std::optional<BetweennessWitness> betweenness_witness;
  std::optional<int> cut_witness;  // edge index
  std::optional<LinkedFlags> linked;
  int min_bag = 0;
  int max_bag = 0;
  int width = -1;

  bool valid() const { return coverage_ok && betweenness_ok && cut_ok; }
  bool linked_valid() const { return valid() && linked && linked->all(); }
};

/// Checks every condition independently. The linked conditions are checked
/// for all pairs h <= j when `check_linked` is set. Throws
/// std::invalid_argument for an empty bag list or an out-of-range vertex.
DecompositionReport verify(const Digraph& g, const PathDecomposition& p, bool check_linked);
bool is_path_decomposition(const Digraph& g, const PathDecomposition& p);

/// Refines a valid decomposition to satisfy |W_i Δ W_{i+1}| = 1: equal
/// neighbours collapse; between differing neighbours the departing vertices
/// leave one at a time in ascending id order, then the arriving vertices
/// join in ascending id order. F, L and validity are preserved and M does
/// not increase.
PathDecomposition normalize(const Digraph& g, const PathDecomposition& p);

// Prepends / appends an empty bag when the first / last bag is non-empty.
PathDecomposition pad_empty_ends(const PathDecomposition& p);

/// Decomposition of G∖v: bags W_i∖{v} with ids above v shifted down. Empty
/// bags are kept.
PathDecomposition transform_delete_vertex(const PathDecomposition& p, Vertex v);
// Edge deletion leaves the decomposition unchanged.
PathDecomposition transform_delete_edge(const Digraph& g, const PathDecomposition& p,
                                        int edge_index);

struct ContractedDecomposition {
  Contraction contraction;
  PathDecomposition decomposition;
};

/// Decomposition of G/H: every bag meeting V(H) has V(H) replaced by the
/// merged vertex. Throws std::logic_error if the bags meeting V(H) do not
/// form an interval, which cannot happen for a valid input.
ContractedDecomposition transform_under_contraction(const Digraph& g, const PathDecomposition& p,
                                                    const Subdigraph& h);

struct BuildLinkedTrace {
  int rounds = 0;
  std::vector<LexMeasure> measures;  // one per round, starting with the input
};

/// Linked decomposition with F = a, L = b and M no larger than M(p).
///
/// Repeatedly takes the first (h, j) pair violating the linked condition,
/// cuts at a minimum separation (C, D) between the bags up to h and the bags
/// from j on, rebuilds the two sides around the crossing vertices of a
/// minimal-union path system and renormalizes. Each round strictly
/// increases the lexicographic bag-size measure; a round that does not is
/// reported as std::logic_error.
///
/// Requires a semi-complete `g`, a valid `p` with F(p) = a and L(p) = b,
/// |a| = |b| = m and m disjoint a->b paths.
PathDecomposition build_linked(const Digraph& g, const PathDecomposition& p, const VertexSet& a,
                               const VertexSet& b, BuildLinkedTrace* trace = nullptr);

}  // namespace dminor
