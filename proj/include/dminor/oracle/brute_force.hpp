#pragma once

// Slow reference implementations that share no code with the library's
// algorithms. Meant for tests and cross-checks on small inputs.

#include <vector>

#include "dminor/connectivity.hpp"
#include "dminor/digraph.hpp"
#include "dminor/labeled.hpp"

namespace dminor::oracle {

/// Path-width by searching over every sequence of single-vertex
/// introductions and removals. A vertex may leave the bag only once all of
/// its out-neighbours have been introduced. n <= 12; the null digraph gives -1.
int pathwidth(const Digraph& g);

/// Smallest vertex set meeting every a->b path, by enumerating subsets.
/// Equals the maximum number of disjoint a->b paths. n <= 16.
int min_vertex_cut(const Digraph& g, const VertexSet& a, const VertexSet& b);

/// Internally disjoint u->v paths: 1 for a direct edge plus the smallest set
/// of other vertices meeting every longer u->v path. n <= 16.
int min_internal_cut(const Digraph& g, Vertex u, Vertex v);

/// Tries every choice of A, B, C and every pairing of C with A. Small n only.
bool has_k_triple(const Digraph& g, int k);

/// Tries every increasing index injection.
bool higman_leq(const std::vector<Token>& p, const std::vector<Token>& q, const QuasiOrder& base,
                bool pinned);

/// Two vertex-disjoint directed cycles, by splitting the vertex set in every
/// way. Loops count as cycles. n <= 20.
bool has_two_disjoint_cycles(const Digraph& g);

/// Every digraph on n vertices without loops or parallel edges, as labeled
/// graphs (2^(n(n-1)) of them). n <= 4.
std::vector<Digraph> all_simple_digraphs(int n);

/// Every tournament on n labeled vertices. n <= 6.
std::vector<Digraph> all_tournaments(int n);

/// Every semi-complete digraph on n labeled vertices (3^(n(n-1)/2)). n <= 5.
std::vector<Digraph> all_semi_complete(int n);

}  // namespace dminor::oracle
