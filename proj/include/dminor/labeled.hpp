#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dminor/connectivity.hpp"
#include "dminor/digraph.hpp"
#include "dminor/minor.hpp"
#include "dminor/pathdecomp.hpp"

namespace dminor {

using Token = int;

/// Finite quasi-order on the tokens 0..size-1 given by its relation table.
class QuasiOrder {
 public:
  QuasiOrder() : QuasiOrder(1) {}
  // Discrete order on `size` tokens (only t <= t).
  explicit QuasiOrder(int size);
  // `table[a * size + b]` is a <= b. Throws unless reflexive and transitive.
  QuasiOrder(int size, std::vector<char> table);

  static QuasiOrder trivial() { return QuasiOrder(1); }
  static QuasiOrder chain(int size);

  int size() const { return size_; }
  bool leq(Token a, Token b) const { return table_[a * size_ + b]; }
  const std::vector<char>& table() const { return table_; }

  friend bool operator==(const QuasiOrder&, const QuasiOrder&) = default;

 private:
  int size_;
  std::vector<char> table_;
};

/// Labels after peeling: (q, x, y) is the token q * 9 + x * 3 + y, and
/// (q, x, y) <= (q', x', y') iff q <= q', x = x' and y = y'.
QuasiOrder peel_order(const QuasiOrder& q);
Token peel_token(Token q, int x, int y);

/// A labeled semi-complete digraph with a linked decomposition of minimum
/// bag size m and maximum bag size at most k, m disjoint induced root paths
/// from the first bag to the last one, and one token per vertex.
struct QmkDigraph {
  Digraph g;
  PathDecomposition p;
  std::vector<Path> r_paths;
  std::vector<Token> labels;
  QuasiOrder q;
  int m = 0;
  int k = 0;

  Vertex source_root(int i) const { return r_paths[i].front(); }
  Vertex terminal_root(int i) const { return r_paths[i].back(); }
  bool trivial() const { return p.length() == 1; }
};

/// Validates every invariant and throws std::invalid_argument naming the
/// first one that fails. m is taken from the decomposition.
QmkDigraph make_qmk(Digraph g, PathDecomposition p, std::vector<Path> r_paths,
                    std::vector<Token> labels, QuasiOrder q, int k);

struct DClass {
  bool trivial = false;
  bool contractible = false;
  bool decomposable = false;             // some interior bag has size m
  bool non_decomposable_member = false;  // r >= 3 and every interior bag exceeds m
  bool non_contractible_member = false;
  bool link = false;
};

DClass classify_qmk(const QmkDigraph& d);

// A piece of a larger (Q,m,k)-digraph; `original[v]` is the parent id of v.
struct QmkPart {
  QmkDigraph d;
  std::vector<Vertex> original;
};

/// D|A and D|B for A the union of bags 0..s and B the union of bags s..r-1
/// (0-based). Requires 0 < s < r-1 and |W_s| = m.
std::pair<QmkPart, QmkPart> split_at(const QmkDigraph& d, int s);

/// Inverse of split_at. The parts share exactly the vertices of the common
/// bag (matched through `original`); every pair split by that bag gets the
/// single edge from the later side to the earlier one. The result is again
/// a part whose vertices are the union of the originals in ascending order.
QmkPart refold(const QmkPart& a, const QmkPart& b);
QmkPart refold(const std::vector<QmkPart>& parts);

/// D = D_1 ⊕ ... ⊕ D_t with D_1..D_{t-1} links and D_t a link or
/// non-contractible. Throws std::invalid_argument for a trivial input.
std::vector<QmkPart> decompose_links(const QmkDigraph& d);

/// Drops the end bags of a non-decomposable D and reroots it on a minimal
/// system of m+1 paths between the new end bags. Requires k > m.
QmkDigraph lift_nondecomposable(const QmkDigraph& d);

struct PeelResult {
  QmkDigraph d;                // over peel_order(q), parameters (m-1, k-1)
  Vertex u = 0, v = 0;         // removed source and terminal root
  int path_index = 0;          // index of the removed root path
  std::vector<Vertex> original;  // id in the result -> id in the input
};

/// Removes the ends u -> v of the first root path that is a single edge,
/// encodes the adjacency of every other vertex to u and v in its label and
/// rebuilds a linked decomposition from the bags minus {u, v}.
PeelResult peel_noncontractible(const QmkDigraph& d);

/// Edges between the removed pair and the rest, recovered from the labels
/// of a peel, in the input's vertex ids and sorted.
std::vector<Edge> peeled_edges(const PeelResult& r);

/// Labeled minor check: the minor-mapping clauses plus "root": the i-th
/// source (terminal) root of d2 lies in the branch set of the i-th source
/// (terminal) root of d1, and "label": every branch set contains a vertex
/// whose label dominates the pattern vertex's label. Throws
/// std::invalid_argument unless m, k and the order agree.
MappingReport verify_labeled_minor(const QmkDigraph& d1, const QmkDigraph& d2,
                                   const MinorMapping& m);

/// Minor search with the labeled clauses as branch set constraints.
MinorSearchResult find_labeled_minor(const QmkDigraph& d1, const QmkDigraph& d2,
                                     std::int64_t budget = -1);

/// Glues labeled mappings of the two halves of a split pattern into the two
/// halves of a split host. The halves meet in the roots, whose branch sets
/// are the unions of both sides. Throws std::invalid_argument if either
/// input mapping is not a valid labeled mapping.
MinorMapping glue_mappings(const QmkDigraph& pattern, const QmkPart& pattern_a,
                           const QmkPart& pattern_b, const QmkDigraph& host, const QmkPart& host_a,
                           const QmkPart& host_b, const MinorMapping& m_a,
                           const MinorMapping& m_b);

/// Subsequence embedding: p_i <= q_{α_i} for some increasing α. Pinned
/// additionally fixes α_1 = 1 and α_a = b; it needs both sequences of length
/// at least 2.
bool higman_leq(const std::vector<Token>& p, const std::vector<Token>& q, const QuasiOrder& base,
                bool pinned = false);

struct RandomQmkOptions {
  int n = 7;        // tournament size before cropping
  int m = 1;
  int k = 4;
  int label_count = 1;  // labels drawn uniformly from a chain of this size
};

/// A (Q,m,k)-digraph cut from a seeded random tournament: a window of its
/// optimal normalized decomposition between two bags of size m, made linked
/// and rooted on a minimal path system. std::nullopt when the tournament has
/// no suitable window.
std::optional<QmkDigraph> random_qmk(const RandomQmkOptions& opt, std::uint64_t seed);

}  // namespace dminor
