#pragma once

#include <optional>
#include <vector>

#include "dminor/digraph.hpp"

namespace dminor {

using Path = std::vector<Vertex>;

/// Vertex-disjoint directed paths; a single vertex is a zero-length path.
struct PathSystem {
  std::vector<Path> paths;

  std::size_t size() const { return paths.size(); }
  VertexSet vertices() const;
};

/// Ordered pair (C, D) with C ∪ D = V and no edge from C∖D to D∖C.
struct Separation {
  VertexSet c;
  VertexSet d;

  int order() const { return static_cast<int>(set_intersection(c, d).size()); }
};

bool is_separation(const Digraph& g, const Separation& s);
bool separates(const Separation& s, const VertexSet& a, const VertexSet& b);

/// (A, B, C) with |A| = |B| = |C| = k, pairwise disjoint, A complete to B,
/// B complete to C, and c[i] -> a[i] an edge for every i.
struct KTriple {
  std::vector<Vertex> a;
  std::vector<Vertex> b;
  std::vector<Vertex> c;

  int k() const { return static_cast<int>(a.size()); }
};

bool is_k_triple(const Digraph& g, const KTriple& t);

// True iff every path is a directed path of `g`, the paths are pairwise
// vertex-disjoint, each starts in `a` and ends in `b`.
bool is_disjoint_path_system(const Digraph& g, const PathSystem& ps, const VertexSet& a,
                             const VertexSet& b);

/// Maximum number of paths from `a` to `b`, disjoint including endpoints.
/// Stops counting at `limit` when it is non-negative.
int max_disjoint_path_count(const Digraph& g, const VertexSet& a, const VertexSet& b,
                            int limit = -1);

/// A maximum system of a->b paths, disjoint including endpoints. Paths are
/// listed by ascending first vertex.
PathSystem max_disjoint_paths(const Digraph& g, const VertexSet& a, const VertexSet& b);

/// Minimum-order separation (C, D) with a ⊆ C and b ⊆ D. C is the source
/// side of the canonical minimum cut: everything reachable from `a` in the
/// residual network of a maximum flow.
Separation min_separation(const Digraph& g, const VertexSet& a, const VertexSet& b);

/// `s` disjoint a->b paths whose union is inclusion-minimal among all such
/// systems. Each path is then induced, meets `a` only at its first vertex and
/// `b` only at its last. Throws std::invalid_argument when fewer than `s`
/// disjoint paths exist.
PathSystem minimal_union_paths(const Digraph& g, const VertexSet& a, const VertexSet& b, int s);

/// Number of u->v paths that are pairwise disjoint apart from u and v, capped
/// at `limit` when non-negative. Parallel u->v edges count once.
int internally_disjoint_paths(const Digraph& g, Vertex u, Vertex v, int limit = -1);

/// Exhaustive search for a k-triple; std::nullopt certifies that none exists.
std::optional<KTriple> find_k_triple(const Digraph& g, int k);

/// k vertices, each ordered pair joined by k internally disjoint paths, or
/// std::nullopt after exhaustive search.
std::optional<VertexSet> pairwise_k_connected_set(const Digraph& g, int k);

}  // namespace dminor
