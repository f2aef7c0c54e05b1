#pragma once

#include <string>
#include <vector>

#include "dminor/digraph.hpp"

namespace dminor {

/// Canonical labelling of a multi-digraph: colour refinement on
/// (loops, neighbour colours, multiplicities) orders the vertex classes, then
/// a pruned backtracking search over orders within each class picks the
/// lexicographically smallest multiplicity matrix. Exact; isomorphic inputs
/// get identical keys.
std::vector<Vertex> canonical_labeling(const Digraph& g);  // old id -> new id
Digraph canonical_form(const Digraph& g);
std::string canonical_key(const Digraph& g);

bool isomorphic(const Digraph& a, const Digraph& b);

// Relabels vertex v to perm[v]; edge order is preserved.
Digraph relabel(const Digraph& g, const std::vector<Vertex>& perm);

}  // namespace dminor
