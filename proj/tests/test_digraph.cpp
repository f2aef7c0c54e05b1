#include <doctest.h>

#include <algorithm>
#include <functional>

#include "dminor/digraph.hpp"
#include "dminor/error.hpp"
#include "dminor/oracle/brute_force.hpp"

using namespace dminor;

namespace {

// Reachability by repeated squaring of the edge relation; independent of
// the library's SCC code.
std::vector<std::vector<char>> reach(const Digraph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<char>> r(n, std::vector<char>(n, 0));
  for (int v = 0; v < n; ++v) r[v][v] = 1;
  for (const Edge& e : g.edges()) r[e.tail][e.head] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (r[i][k] && r[k][j]) r[i][j] = 1;
  return r;
}

Digraph four_tournament_with_cycle() {
  // 0 -> 1 -> 2 -> 0 and 3 beats everyone.
  return Digraph(4, {{0, 1}, {1, 2}, {2, 0}, {3, 0}, {3, 1}, {3, 2}});
}

}  // namespace

TEST_SUITE("digraph") {
  TEST_CASE("construction and accessors") {
    Digraph g(3, {{0, 1}, {0, 1}, {1, 1}, {2, 0}});
    CHECK(g.edge_count() == 4);
    CHECK(g.multiplicity(0, 1) == 2);
    CHECK(g.has_loops());
    CHECK(g.successors(0) == std::vector<Vertex>{1});
    CHECK(g.successors(1).empty());
    CHECK(g.predecessors(0) == std::vector<Vertex>{2});
    CHECK_THROWS_AS(Digraph(2, {{0, 2}}), std::invalid_argument);
    CHECK(Digraph(2, {{0, 1}, {1, 0}}) == Digraph(2, {{1, 0}, {0, 1}}));
    CHECK_FALSE(Digraph(2, {{0, 1}}) == Digraph(2, {{0, 1}, {0, 1}}));
  }

  TEST_CASE("text format round trip keeps multiplicities") {
    Digraph g(3, {{2, 0}, {0, 1}, {0, 1}, {1, 1}});
    const std::string text = to_text(g);
    CHECK(text == "3 4\n0 1\n0 1\n1 1\n2 0\n");
    CHECK(parse_digraph(text) == g);
    CHECK(parse_digraph("# comment\n\n2 1\n# more\n1 0\n") == Digraph(2, {{1, 0}}));
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const Digraph r = random_digraph(7, seed);
      CHECK(to_text(parse_digraph(to_text(r))) == to_text(r));
    }
  }

  TEST_CASE("parse errors carry line numbers") {
    auto line_of = [](const std::string& text) {
      try {
        parse_digraph(text);
      } catch (const ParseError& e) {
        return e.line();
      }
      return -1;
    };
    CHECK(line_of("") == 1);
    CHECK(line_of("2 1\n0 2\n") == 2);
    CHECK(line_of("# c\n2 2\n0 1\nx y\n") == 4);
    CHECK(line_of("2 1\n0 1\n1 0\n") == 3);
    CHECK(line_of("2 2\n0 1\n") > 0);
  }

  TEST_CASE("scc_decompose") {
    auto sets = scc_decompose(directed_cycle(3));
    REQUIRE(sets.size() == 1);
    CHECK(sets[0] == VertexSet{0, 1, 2});

    sets = scc_decompose(transitive_tournament(3));
    CHECK(sets == std::vector<VertexSet>{{0}, {1}, {2}});

    sets = scc_decompose(stability_two(2));
    REQUIRE(sets.size() == 1);
    CHECK(sets[0].size() == 10);

    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const Digraph g = random_digraph(8, seed);
      const auto comps = scc_decompose(g);
      const auto r = reach(g);
      std::vector<int> comp(g.vertex_count(), -1);
      int total = 0;
      for (int c = 0; c < static_cast<int>(comps.size()); ++c) {
        for (Vertex v : comps[c]) comp[v] = c;
        total += static_cast<int>(comps[c].size());
        CHECK(is_strongly_connected(g, induced_subdigraph(g, comps[c])));
      }
      CHECK(total == g.vertex_count());
      for (Vertex u = 0; u < g.vertex_count(); ++u)
        for (Vertex v = 0; v < g.vertex_count(); ++v)
          CHECK((comp[u] == comp[v]) == (r[u][v] && r[v][u]));
      for (const Edge& e : g.edges()) CHECK(comp[e.tail] <= comp[e.head]);
    }
  }

  TEST_CASE("is_strongly_connected") {
    const Digraph g(2, {{0, 1}});
    CHECK(is_strongly_connected(g, Subdigraph{{0}, {}}));
    CHECK_FALSE(is_strongly_connected(g, Subdigraph{{0, 1}, {0}}));
    CHECK_FALSE(is_strongly_connected(g, Subdigraph{}));
    const Digraph c = directed_cycle(3);
    CHECK(is_strongly_connected(c, Subdigraph{{0, 1, 2}, {0, 1, 2}}));
    CHECK_FALSE(is_strongly_connected(c, Subdigraph{{0, 1, 2}, {0, 1}}));
    CHECK_THROWS_AS(is_strongly_connected(c, Subdigraph{{0}, {0}}), std::invalid_argument);
  }

  TEST_CASE("contract") {
    const Digraph g = four_tournament_with_cycle();
    const Contraction c = contract(g, Subdigraph{{0, 1, 2}, {0, 1, 2}});
    CHECK(c.graph.vertex_count() == 2);
    CHECK(c.merged == 0);
    CHECK(c.graph.multiplicity(1, 0) == 3);
    CHECK(c.graph.edge_count() == 3);

    const Contraction one = contract(g, Subdigraph{{3}, {}});
    CHECK(one.graph == g);

    const Contraction whole = contract_vertices(directed_cycle(4), VertexSet{0, 1, 2, 3});
    CHECK(whole.graph.vertex_count() == 1);
    CHECK(whole.graph.edge_count() == 0);

    CHECK_THROWS_AS(contract(g, Subdigraph{{0, 3}, {3}}), std::invalid_argument);

    // Edge count drops by exactly the internal edges.
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const Digraph t = random_tournament(7, seed);
      for (const VertexSet& s : scc_decompose(t)) {
        const Subdigraph h = induced_subdigraph(t, s);
        const Contraction k = contract(t, h);
        CHECK(k.graph.edge_count() == t.edge_count() - static_cast<int>(h.edges.size()));
        CHECK(k.graph.vertex_count() == t.vertex_count() - static_cast<int>(s.size()) + 1);
        CHECK_FALSE(k.graph.has_loops());
      }
    }
  }

  TEST_CASE("delete vertex and edge") {
    const Digraph g(3, {{0, 1}, {1, 2}, {2, 0}});
    const Digraph a = delete_vertex(g, 1);
    CHECK(a == Digraph(2, {{1, 0}}));
    const Digraph b = delete_edge(g, 0);
    CHECK(b == Digraph(3, {{1, 2}, {2, 0}}));
  }

  TEST_CASE("classify") {
    DigraphClass c = classify(transitive_tournament(5));
    CHECK(c.tournament);
    CHECK(c.semi_complete);
    CHECK(c.simple);
    CHECK(c.acyclic);
    CHECK(c.stability_number == 1);

    c = classify(super_tournament(3));
    CHECK_FALSE(c.simple);
    CHECK_FALSE(c.semi_complete);
    CHECK(c.stability_number == 1);

    c = classify(stability_two(2));
    CHECK(c.simple);
    CHECK(c.stability_number == 2);
    CHECK(classify(stability_two(3)).stability_number == 2);

    CHECK(classify(Digraph()).stability_number == 0);
    CHECK(stability_number(Digraph(4)) == 4);
    CHECK(stability_number(directed_cycle(5)) == 2);

    const Digraph both(2, {{0, 1}, {1, 0}});
    CHECK(is_semi_complete(both));
    CHECK_FALSE(is_tournament(both));
  }

  TEST_CASE("class flags are consistent") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const Digraph g = seed % 2 ? random_tournament(6, seed) : random_digraph(6, seed);
      const DigraphClass c = classify(g);
      if (c.tournament) CHECK(c.semi_complete);
      if (c.semi_complete) CHECK(c.simple);
      if (c.semi_complete) CHECK(c.stability_number == 1);
    }
  }

  TEST_CASE("generators") {
    const Digraph t = transitive_tournament(4);
    CHECK(t.vertex_count() == 4);
    CHECK(t.edge_count() == 6);
    CHECK(is_acyclic(t));

    const Digraph s = super_tournament(3);
    CHECK(s.vertex_count() == 3);
    CHECK(s.edge_count() == 6);
    CHECK(s.multiplicity(0, 1) == 2);
    CHECK(s.multiplicity(1, 2) == 2);
    CHECK(s.multiplicity(0, 2) == 2);
    CHECK(super_tournament(5).edge_count() == 15);

    const Digraph g2 = stability_two(2);
    const StabilityTwoLayout at{2};
    CHECK(g2.vertex_count() == 10);
    int ab = 0;
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y) ab += g2.multiplicity(at.a(x), at.b(y)) + g2.multiplicity(at.b(y), at.a(x));
    CHECK(ab == 1);
    CHECK(g2.has_edge(at.b(0), at.a(0)));

    // C -> D edges form one cycle of length 2i in the underlying graph.
    for (int i = 2; i <= 5; ++i) {
      const Digraph g = stability_two(i);
      const StabilityTwoLayout l{i};
      std::vector<int> degree(g.vertex_count(), 0);
      int cd = 0;
      for (const Edge& e : g.edges())
        if (e.tail >= l.c(0) && e.tail < l.c(0) + i && e.head >= l.d(0)) ++degree[e.tail], ++degree[e.head], ++cd;
      CHECK(cd == 2 * i);
      for (int x = 0; x < i; ++x) {
        CHECK(degree[l.c(x)] == 2);
        CHECK(degree[l.d(x)] == 2);
      }
      std::vector<Edge> cd_edges;
      for (const Edge& e : g.edges())
        if (e.tail >= l.c(0) && e.tail < l.c(0) + i && e.head >= l.d(0)) cd_edges.push_back(e);
      // connected bipartite 2-regular graph on 2i vertices is a single cycle
      std::vector<int> parent(g.vertex_count());
      for (int v = 0; v < g.vertex_count(); ++v) parent[v] = v;
      std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
      for (const Edge& e : cd_edges) parent[find(e.tail)] = find(e.head);
      for (int x = 0; x < i; ++x) CHECK(find(l.c(x)) == find(l.c(0)));
    }

    CHECK(to_text(random_tournament(9, 42)) == to_text(random_tournament(9, 42)));
    CHECK_FALSE(to_text(random_tournament(9, 42)) == to_text(random_tournament(9, 43)));
    CHECK(is_tournament(random_tournament(9, 1)));
    CHECK_FALSE(random_digraph(9, 1).has_loops());
    CHECK_THROWS_AS(super_tournament(2), std::invalid_argument);
    CHECK_THROWS_AS(stability_two(1), std::invalid_argument);
    CHECK(parse_family("super_tournament") == Family::super_tournament);
    CHECK_FALSE(parse_family("bogus").has_value());
  }

  TEST_CASE("is_induced_path") {
    const Digraph c = directed_cycle(3);
    const Digraph t = transitive_tournament(3);
    const std::vector<Vertex> one{1}, three{0, 1, 2};
    CHECK(is_induced_path(c, one));
    CHECK(is_induced_path(c, three));
    CHECK_FALSE(is_induced_path(t, three));
    CHECK_THROWS_AS(is_induced_path(Digraph(3, {{0, 1}}), one), std::invalid_argument);
    const std::vector<Vertex> repeat{0, 1, 0};
    CHECK_THROWS_AS(is_induced_path(c, repeat), std::invalid_argument);
  }

  TEST_CASE("induced paths of tournaments are strongly connected unless one edge") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const Digraph g = random_tournament(7, seed);
      // Every simple path up to 4 vertices, by DFS.
      std::vector<Vertex> path;
      std::function<void()> extend = [&]() {
        if (is_induced_path(g, path)) {
          const bool sc = is_strongly_connected(g, induced_subdigraph(g, VertexSet(path)));
          CHECK(sc == (path.size() != 2));
        }
        if (path.size() == 4) return;
        for (Vertex w : g.successors(path.back())) {
          if (std::find(path.begin(), path.end(), w) != path.end()) continue;
          path.push_back(w);
          extend();
          path.pop_back();
        }
      };
      for (Vertex v = 0; v < 7; ++v) {
        path = {v};
        extend();
      }
    }
  }
}
