#include <doctest.h>

#include "dminor/error.hpp"
#include "dminor/json_io.hpp"
#include "dminor/pathwidth.hpp"

using namespace dminor;

TEST_SUITE("json") {
  TEST_CASE("digraph and decomposition round trip") {
    const Digraph g = super_tournament(4);
    CHECK(digraph_from_json(digraph_to_json(g)) == g);

    const PathDecomposition p = exact_pathwidth(random_tournament(7, 5)).decomposition;
    const Json j = to_json(p);
    CHECK(j["schema"] == schema::decomposition);
    CHECK(decomposition_from_json(j) == p);
    CHECK(decomposition_from_json(Json::parse(R"({"bags": [[1, 0], []]})")).bags[0] == VertexSet{0, 1});
  }

  TEST_CASE("schema checks") {
    Json j = to_json(PathDecomposition{{{0}}});
    j["schema"] = schema::mapping;
    CHECK_THROWS_AS(decomposition_from_json(j), ParseError);
    j.erase("schema");
    CHECK_NOTHROW(decomposition_from_json(j));
    CHECK_THROWS_AS(decomposition_from_json(Json::parse(R"({"bags": 3})")), ParseError);
    CHECK_THROWS_AS(decomposition_from_json(Json::parse(R"({"bags": [[-1]]})")), ParseError);
    CHECK_THROWS_AS(digraph_from_json(Json::parse(R"({"n": 2, "edges": [[0, 2]]})")), ParseError);
  }

  TEST_CASE("mapping and triple round trip") {
    const Digraph c3 = directed_cycle(3);
    const MinorMapping m{{induced_subdigraph(c3, {0, 1}), Subdigraph{{2}, {}}}, {1, 2}};
    const Json j = to_json(m);
    CHECK(j["branch_sets"].contains("0"));
    CHECK(mapping_from_json(j) == m);

    const KTriple t{{0, 1}, {2, 3}, {4, 5}};
    const KTriple u = triple_from_json(to_json(t));
    CHECK(u.a == t.a);
    CHECK(u.b == t.b);
    CHECK(u.c == t.c);
  }

  TEST_CASE("reports") {
    const auto r = verify(directed_cycle(3), PathDecomposition{{{0, 1}, {1, 2}, {2, 0}}}, true);
    const Json j = to_json(r);
    CHECK(j["schema"] == schema::report);
    CHECK(j["valid"] == false);
    CHECK(j["betweenness"] == false);
    CHECK(j["betweenness_witness"]["vertex"] == 0);

    const Json c = to_json(classify(stability_two(2)));
    CHECK(c["stability_number"] == 2);
  }

  TEST_CASE("qmk round trip") {
    const QmkDigraph d = make_qmk(Digraph(3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 0}}),
                                  PathDecomposition{{{0}, {0, 1}, {1}, {1, 2}, {2}}}, {{0, 1, 2}},
                                  {0, 2, 1}, QuasiOrder::chain(3), 2);
    const QmkDigraph e = qmk_from_json(to_json(d));
    CHECK(e.g == d.g);
    CHECK(e.p == d.p);
    CHECK(e.r_paths == d.r_paths);
    CHECK(e.labels == d.labels);
    CHECK(e.q == d.q);
    CHECK(e.m == d.m);
    CHECK(e.k == d.k);
    CHECK(to_json(classify_qmk(d))["decomposable"] == true);
  }
}
