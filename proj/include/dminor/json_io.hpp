#pragma once

#include <json.hpp>

#include "dminor/connectivity.hpp"
#include "dminor/digraph.hpp"
#include "dminor/labeled.hpp"
#include "dminor/minor.hpp"
#include "dminor/pathdecomp.hpp"

namespace dminor {

using Json = nlohmann::json;

// Every document carries a top-level "schema". Readers accept documents
// without one; a present but different schema is rejected.
namespace schema {
inline constexpr const char* decomposition = "dminor.decomposition/1";
inline constexpr const char* report = "dminor.decomposition-report/1";
inline constexpr const char* mapping = "dminor.mapping/1";
inline constexpr const char* triple = "dminor.triple/1";
inline constexpr const char* digraph_class = "dminor.class/1";
inline constexpr const char* qmk = "dminor.qmk/1";
inline constexpr const char* qmk_class = "dminor.qmk-class/1";
inline constexpr const char* experiment = "dminor.experiment/1";
}  // namespace schema

// Errors in the readers are reported as ParseError.

Json digraph_to_json(const Digraph& g);  // {"n": .., "edges": [[tail, head], ..]}
Digraph digraph_from_json(const Json& j);

Json to_json(const PathDecomposition& p);  // {"bags": [[..], ..]}
PathDecomposition decomposition_from_json(const Json& j);

Json to_json(const DecompositionReport& r);

/// {"branch_sets": {"x": {"vertices": [..], "edges": [..]}},
///  "witnesses": {"e": host edge}}
Json to_json(const MinorMapping& m);
MinorMapping mapping_from_json(const Json& j);

Json to_json(const KTriple& t);  // {"a": [..], "b": [..], "c": [..]}
KTriple triple_from_json(const Json& j);

Json to_json(const DigraphClass& c);

/// {"graph": digraph, "bags": [[..]], "paths": [[..]], "labels": [..],
///  "order": {"size": s, "leq": [[a, b], ..]}, "k": k}
Json to_json(const QmkDigraph& d);
QmkDigraph qmk_from_json(const Json& j);

Json to_json(const DClass& c);

}  // namespace dminor
