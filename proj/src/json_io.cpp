#include "dminor/json_io.hpp"

#include <algorithm>
#include <string>

#include "dminor/error.hpp"

namespace dminor {

namespace {

void expect_schema(const Json& j, const char* name) {
  if (!j.is_object()) throw ParseError(std::string("expected a JSON object for ") + name);
  auto it = j.find("schema");
  if (it != j.end() && (!it->is_string() || it->get<std::string>() != name))
    throw ParseError(std::string("expected schema ") + name);
}

const Json& field(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

template <class T>
T read(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError(std::string("malformed ") + what);
  }
}

Json vertex_list(const VertexSet& s) { return Json(s.items()); }

}  // namespace

Json digraph_to_json(const Digraph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.tail, e.head});
  return {{"n", g.vertex_count()}, {"edges", edges}};
}

Digraph digraph_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("digraph must be an object");
  const int n = read<int>(field(j, "n"), "vertex count");
  std::vector<Edge> edges;
  for (const auto& pair : read<std::vector<std::vector<int>>>(field(j, "edges"), "edge list")) {
    if (pair.size() != 2) throw ParseError("an edge needs two endpoints");
    edges.push_back({pair[0], pair[1]});
  }
  try {
    return Digraph(n, std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Json to_json(const PathDecomposition& p) {
  Json bags = Json::array();
  for (const auto& bag : p.bags) bags.push_back(vertex_list(bag));
  return {{"schema", schema::decomposition}, {"bags", bags}};
}

PathDecomposition decomposition_from_json(const Json& j) {
  expect_schema(j, schema::decomposition);
  PathDecomposition p;
  for (auto& bag : read<std::vector<std::vector<int>>>(field(j, "bags"), "bag list")) {
    if (std::any_of(bag.begin(), bag.end(), [](int v) { return v < 0; }))
      throw ParseError("negative vertex id in a bag");
    p.bags.emplace_back(std::move(bag));
  }
  return p;
}

Json to_json(const DecompositionReport& r) {
  Json j{{"schema", schema::report},
         {"valid", r.valid()},
         {"coverage", r.coverage_ok},
         {"betweenness", r.betweenness_ok},
         {"cut", r.cut_ok},
         {"min_bag", r.min_bag},
         {"max_bag", r.max_bag},
         {"width", r.width}};
  if (r.uncovered) j["uncovered_vertex"] = *r.uncovered;
  if (r.betweenness_witness) {
    const auto& w = *r.betweenness_witness;
    j["betweenness_witness"] = {{"vertex", w.vertex}, {"bags", {w.h, w.i, w.j}}};
  }
  if (r.cut_witness) j["cut_witness_edge"] = *r.cut_witness;
  if (r.linked) {
    const LinkedFlags& f = *r.linked;
    Json l{{"increment", f.increment_ok}, {"cardinality", f.cardinality_ok}, {"linked", f.linked_ok}};
    if (f.increment_witness) l["increment_witness"] = *f.increment_witness;
    if (f.witness)
      l["linked_witness"] = {{"h", f.witness->h},
                             {"j", f.witness->j},
                             {"t", f.witness->t},
                             {"c", vertex_list(f.witness->separation.c)},
                             {"d", vertex_list(f.witness->separation.d)}};
    j["linked"] = l;
    j["linked_valid"] = r.linked_valid();
  }
  return j;
}

Json to_json(const MinorMapping& m) {
  Json branches = Json::object();
  for (std::size_t x = 0; x < m.branch.size(); ++x)
    branches[std::to_string(x)] = {{"vertices", vertex_list(m.branch[x].vertices)},
                                   {"edges", m.branch[x].edges}};
  Json witnesses = Json::object();
  for (std::size_t e = 0; e < m.witness.size(); ++e) witnesses[std::to_string(e)] = m.witness[e];
  return {{"schema", schema::mapping}, {"branch_sets", branches}, {"witnesses", witnesses}};
}

namespace {

// Objects keyed by the decimal indices 0..size-1.
template <class F>
void read_indexed(const Json& obj, const char* what, F&& each) {
  if (!obj.is_object()) throw ParseError(std::string(what) + " must be an object");
  const int size = static_cast<int>(obj.size());
  for (int i = 0; i < size; ++i) {
    auto it = obj.find(std::to_string(i));
    if (it == obj.end()) throw ParseError(std::string(what) + " lacks key " + std::to_string(i));
    each(i, *it);
  }
}

}  // namespace

MinorMapping mapping_from_json(const Json& j) {
  expect_schema(j, schema::mapping);
  MinorMapping m;
  read_indexed(field(j, "branch_sets"), "branch_sets", [&](int, const Json& b) {
    m.branch.push_back({VertexSet(read<std::vector<int>>(field(b, "vertices"), "branch vertices")),
                        read<std::vector<int>>(field(b, "edges"), "branch edges")});
    std::sort(m.branch.back().edges.begin(), m.branch.back().edges.end());
  });
  read_indexed(field(j, "witnesses"), "witnesses",
               [&](int, const Json& w) { m.witness.push_back(read<int>(w, "witness")); });
  return m;
}

Json to_json(const KTriple& t) {
  return {{"schema", schema::triple}, {"k", t.k()}, {"a", t.a}, {"b", t.b}, {"c", t.c}};
}

KTriple triple_from_json(const Json& j) {
  expect_schema(j, schema::triple);
  return {read<std::vector<int>>(field(j, "a"), "a"), read<std::vector<int>>(field(j, "b"), "b"),
          read<std::vector<int>>(field(j, "c"), "c")};
}

Json to_json(const DigraphClass& c) {
  return {{"schema", schema::digraph_class},
          {"simple", c.simple},
          {"semi_complete", c.semi_complete},
          {"tournament", c.tournament},
          {"acyclic", c.acyclic},
          {"stability_number", c.stability_number}};
}

Json to_json(const QmkDigraph& d) {
  Json bags = Json::array();
  for (const auto& bag : d.p.bags) bags.push_back(vertex_list(bag));
  Json leq = Json::array();
  for (int a = 0; a < d.q.size(); ++a)
    for (int b = 0; b < d.q.size(); ++b)
      if (a != b && d.q.leq(a, b)) leq.push_back({a, b});
  return {{"schema", schema::qmk},       {"graph", digraph_to_json(d.g)},
          {"bags", bags},                {"paths", d.r_paths},
          {"labels", d.labels},          {"order", {{"size", d.q.size()}, {"leq", leq}}},
          {"m", d.m},                    {"k", d.k}};
}

QmkDigraph qmk_from_json(const Json& j) {
  expect_schema(j, schema::qmk);
  Digraph g = digraph_from_json(field(j, "graph"));
  PathDecomposition p;
  for (auto& bag : read<std::vector<std::vector<int>>>(field(j, "bags"), "bag list")) {
    if (std::any_of(bag.begin(), bag.end(), [](int v) { return v < 0; }))
      throw ParseError("negative vertex id in a bag");
    p.bags.emplace_back(std::move(bag));
  }
  auto paths = read<std::vector<Path>>(field(j, "paths"), "path list");
  auto labels = read<std::vector<Token>>(field(j, "labels"), "labels");
  const Json& order = field(j, "order");
  const int size = read<int>(field(order, "size"), "order size");
  if (size < 1) throw ParseError("order size must be positive");
  std::vector<char> table(static_cast<std::size_t>(size) * size, 0);
  for (int t = 0; t < size; ++t) table[t * size + t] = 1;
  for (const auto& pair : read<std::vector<std::vector<int>>>(field(order, "leq"), "order pairs")) {
    if (pair.size() != 2 || pair[0] < 0 || pair[1] < 0 || pair[0] >= size || pair[1] >= size)
      throw ParseError("malformed order pair");
    table[pair[0] * size + pair[1]] = 1;
  }
  const int k = read<int>(field(j, "k"), "k");
  try {
    return make_qmk(std::move(g), std::move(p), std::move(paths), std::move(labels),
                    QuasiOrder(size, std::move(table)), k);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid (Q,m,k)-digraph: ") + e.what());
  }
}

Json to_json(const DClass& c) {
  return {{"schema", schema::qmk_class},
          {"trivial", c.trivial},
          {"contractible", c.contractible},
          {"decomposable", c.decomposable},
          {"non_decomposable", c.non_decomposable_member},
          {"non_contractible", c.non_contractible_member},
          {"link", c.link}};
}

}  // namespace dminor
