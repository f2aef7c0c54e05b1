#pragma once

#include <cstdint>
#include <vector>

#include "dminor/digraph.hpp"
#include "dminor/pathdecomp.hpp"

namespace dminor {

// The subset tables hold 2^n entries.
inline constexpr int kMaxPathwidthVertices = 25;

struct PathwidthResult {
  int width = -1;
  PathDecomposition decomposition;
  std::vector<Vertex> order;  // introduction order realizing the width
};

/// Exact directed path-width by dynamic programming over introduction
/// orders. For an introduced set T let B(T) be the members of T with an
/// out-neighbour outside T; the width of an order is the largest |B(T)| seen
/// when a vertex is introduced, and
///   best(∅) = 0,  best(T) = min over v in T of max(best(T∖v), |B(T∖v)|).
/// A vertex is dropped from the bags as soon as all of its out-neighbours
/// have been introduced.
///
/// The null digraph has width -1 and a single empty bag. Throws
/// std::invalid_argument for loops or more than kMaxPathwidthVertices
/// vertices. Runs the OpenMP kernel; results are identical to the serial one.
PathwidthResult exact_pathwidth(const Digraph& g);
PathwidthResult exact_pathwidth_serial(const Digraph& g);

// Raw kernels, exposed for the benchmark: best(T) for every subset T.
std::vector<std::uint8_t> pathwidth_table_serial(const Digraph& g);
std::vector<std::uint8_t> pathwidth_table_parallel(const Digraph& g);

}  // namespace dminor
