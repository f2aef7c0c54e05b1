#include <doctest.h>

#include <random>

#include "dminor/oracle/brute_force.hpp"
#include "dminor/pathwidth.hpp"

using namespace dminor;

TEST_SUITE("pathwidth") {
  TEST_CASE("small families") {
    for (int n = 1; n <= 10; ++n) CHECK(exact_pathwidth(transitive_tournament(n)).width == 0);
    for (int n = 2; n <= 10; ++n) CHECK(exact_pathwidth(directed_cycle(n)).width == 1);
    CHECK(exact_pathwidth(Digraph(0)).width == -1);
    CHECK(exact_pathwidth(Digraph(0)).decomposition.length() == 1);
    CHECK(exact_pathwidth(Digraph(5)).width == 0);
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(exact_pathwidth(Digraph(2, {{0, 0}})), std::invalid_argument);
    CHECK_THROWS_AS(exact_pathwidth(Digraph(kMaxPathwidthVertices + 1)), std::invalid_argument);
  }

  TEST_CASE("width zero exactly on acyclic digraphs") {
    for (int n = 1; n <= 4; ++n)
      for (const Digraph& g : oracle::all_simple_digraphs(n))
        CHECK((exact_pathwidth(g).width == 0) == is_acyclic(g));
  }

  TEST_CASE("serial, parallel and oracle agree") {
    std::mt19937_64 rng(42);
    for (int iter = 0; iter < 120; ++iter) {
      const int n = 1 + static_cast<int>(rng() % 9);
      const Digraph g = iter % 2 ? random_tournament(n, rng()) : random_digraph(n, rng());
      const PathwidthResult par = exact_pathwidth(g);
      const PathwidthResult ser = exact_pathwidth_serial(g);
      CHECK(par.width == ser.width);
      CHECK(par.decomposition == ser.decomposition);
      CHECK(par.width == oracle::pathwidth(g));
      const auto rep = verify(g, par.decomposition, false);
      CHECK(rep.valid());
      CHECK(rep.width == par.width);
      CHECK(static_cast<int>(par.order.size()) == n);
    }
  }

  TEST_CASE("tables") {
    const Digraph g = random_tournament(12, 3);
    CHECK(pathwidth_table_serial(g) == pathwidth_table_parallel(g));
    CHECK(pathwidth_table_serial(g).size() == (std::size_t{1} << 12));
  }

  TEST_CASE("minor monotone") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 80; ++iter) {
      const int n = 2 + static_cast<int>(rng() % 8);
      const Digraph g = random_tournament(n, rng());
      const int w = exact_pathwidth(g).width;
      CHECK(exact_pathwidth(delete_vertex(g, static_cast<Vertex>(rng() % n))).width <= w);
      CHECK(exact_pathwidth(delete_edge(g, static_cast<int>(rng() % g.edge_count()))).width <= w);
      for (const VertexSet& c : scc_decompose(g))
        if (c.size() >= 2) CHECK(exact_pathwidth(contract_vertices(g, c).graph).width <= w);
    }
  }
}
