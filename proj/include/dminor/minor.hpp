#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dminor/connectivity.hpp"
#include "dminor/digraph.hpp"

namespace dminor {

/// Minor mapping from a pattern H into a host G.
///
/// `branch[x]` is the branch subdigraph φ(x) (host vertices plus host edge
/// indices); `witness[e]` is the host edge realizing pattern edge e. A
/// pattern edge x -> y is realized by a distinct host edge with tail in
/// V(φ(x)) and head in V(φ(y)) that lies in no branch edge set, so k
/// parallel pattern edges need k distinct host edges.
struct MinorMapping {
  std::vector<Subdigraph> branch;
  std::vector<int> witness;

  friend bool operator==(const MinorMapping&, const MinorMapping&) = default;
};

struct MappingIssue {
  std::string clause;  // "shape", "non_null", "strongly_connected", "disjoint", "witness"
  std::string detail;
};

struct MappingReport {
  std::vector<MappingIssue> issues;

  bool valid() const { return issues.empty(); }
};

MappingReport verify_mapping(const Digraph& h, const Digraph& g, const MinorMapping& m);

// φ(v) = ({v}, ∅) and every edge witnessed by itself.
MinorMapping identity_mapping(const Digraph& g);

enum class SearchStatus { found, absent, budget_exceeded };

std::string to_string(SearchStatus s);

struct MinorSearchResult {
  SearchStatus status = SearchStatus::absent;
  std::optional<MinorMapping> mapping;
  std::int64_t nodes = 0;
};

/// Optional per-pattern-vertex restrictions on branch sets, as host masks:
/// φ(x) must contain `required[x]` and meet `allowed_some[x]`. Empty vectors
/// mean no restriction.
struct BranchConstraints {
  std::vector<Mask> required;
  std::vector<Mask> allowed_some;
};

/// Exhaustive minor search. Pattern vertices are placed by descending degree;
/// each receives a strongly connected vertex set among the unused host
/// vertices, tried in ascending mask order. Cross-edge demands between
/// placed branch sets are checked immediately and capacity towards the free
/// vertices is used as a bound. `absent` is a certificate unless the search
/// ran out of `budget` nodes (budget < 0 means unlimited). Hosts are limited
/// to 64 vertices.
MinorSearchResult find_minor(const Digraph& h, const Digraph& g, std::int64_t budget = -1,
                             const BranchConstraints* constraints = nullptr);

/// Subdigraph containment: an injective vertex map preserving edge
/// multiplicities, returned as a minor mapping with singleton branch sets.
MinorSearchResult find_subdigraph(const Digraph& h, const Digraph& g, std::int64_t budget = -1);

/// Every semi-complete digraph on k vertices is a minor of any digraph with a
/// k-triple: φ(v_i) is the triangle a_i -> b_i -> c_i -> a_i and an edge
/// v_i -> v_j is witnessed by a_i -> b_j.
MinorMapping minor_of_triple(const Digraph& h, const Digraph& g, const KTriple& t);

/// m1: H into G, m2: G into F, gives H into F. φ(v) collects the m2 branch
/// sets of the vertices of m1's φ(v) and the m2 witnesses of its edges.
MinorMapping compose(const Digraph& h, const Digraph& g, const Digraph& f, const MinorMapping& m1,
                     const MinorMapping& m2);

inline constexpr int kMaxClosureVertices = 7;

/// All minors reachable from `g` in at most `max_steps` single operations
/// (delete an edge, delete a vertex, contract a strongly connected vertex
/// set), as canonical forms sorted by canonical key. Negative `max_steps`
/// means until closure. Throws std::invalid_argument above
/// kMaxClosureVertices vertices.
std::vector<Digraph> closure_oracle(const Digraph& g, int max_steps = -1);

}  // namespace dminor
