#include <doctest.h>

#include <random>

#include "dminor/pathdecomp.hpp"
#include "dminor/pathwidth.hpp"

using namespace dminor;

namespace {

PathDecomposition bags(std::vector<VertexSet> b) { return PathDecomposition{std::move(b)}; }

bool increment_ok(const PathDecomposition& p) {
  for (int i = 0; i + 1 < p.length(); ++i)
    if (symmetric_difference_size(p.bags[i], p.bags[i + 1]) != 1) return false;
  return true;
}

// A whole strong component or a single vertex of one.
VertexSet random_sc_set(const Digraph& g, std::mt19937_64& rng) {
  const auto comps = scc_decompose(g);
  const VertexSet& c = comps[rng() % comps.size()];
  if (c.size() == 1 || rng() % 2) return c;
  return VertexSet{c.items()[rng() % c.size()]};
}

}  // namespace

TEST_SUITE("pathdecomp") {
  TEST_CASE("verify examples") {
    const Digraph e(2, {{0, 1}});
    auto r = verify(e, bags({{1}, {0}}), false);
    CHECK(r.valid());
    CHECK(r.width == 0);

    r = verify(e, bags({{0}, {1}}), false);
    CHECK(r.coverage_ok);
    CHECK(r.betweenness_ok);
    CHECK_FALSE(r.cut_ok);
    REQUIRE(r.cut_witness.has_value());
    CHECK(*r.cut_witness == 0);

    const Digraph c3 = directed_cycle(3);
    r = verify(c3, bags({{0, 1}, {1, 2}, {2, 0}}), false);
    CHECK_FALSE(r.betweenness_ok);
    REQUIRE(r.betweenness_witness.has_value());
    CHECK(r.betweenness_witness->vertex == 0);
    CHECK(r.betweenness_witness->h == 0);
    CHECK(r.betweenness_witness->i == 1);
    CHECK(r.betweenness_witness->j == 2);

    r = verify(c3, bags({{0, 1}}), false);
    CHECK_FALSE(r.coverage_ok);
    CHECK(r.uncovered == 2);

    CHECK_THROWS_AS(verify(c3, bags({}), false), std::invalid_argument);
    CHECK_THROWS_AS(verify(c3, bags({{0, 5}}), false), std::invalid_argument);
  }

  TEST_CASE("linked flags") {
    const Digraph c3 = directed_cycle(3);
    auto r = verify(c3, bags({{}, {0, 1}, {1, 2}, {}}), true);
    CHECK(r.valid());
    REQUIRE(r.linked.has_value());
    CHECK_FALSE(r.linked->increment_ok);
    CHECK(r.linked->increment_witness == 0);

    // T_3 has no path leaving 2, so {2} and {1} cannot be linked.
    const Digraph t3 = transitive_tournament(3);
    r = verify(t3, bags({{}, {2}, {1, 2}, {1}, {0, 1}, {0}, {}}), true);
    CHECK(r.valid());
    CHECK(r.linked->increment_ok);
    CHECK(r.linked->cardinality_ok);
    CHECK_FALSE(r.linked->linked_ok);
    REQUIRE(r.linked->witness.has_value());
    CHECK(r.linked->witness->h == 1);
    CHECK(r.linked->witness->j == 3);
    CHECK(r.linked->witness->t == 1);
    CHECK(r.linked->witness->separation.order() == 0);

    r = verify(t3, bags({{}, {2}, {}, {1}, {}, {0}, {}}), true);
    CHECK(r.linked_valid());

    r = verify(t3, bags({{2}, {}, {1}, {}, {0}}), true);
    CHECK_FALSE(r.linked->cardinality_ok);
  }

  TEST_CASE("normalize examples") {
    const Digraph g(2), h(4);
    CHECK(normalize(g, bags({{0, 1}, {0, 1}})) == bags({{0, 1}}));
    CHECK(normalize(h, bags({{0, 1}, {2, 3}})) == bags({{0, 1}, {1}, {}, {2}, {2, 3}}));
    const PathDecomposition already = bags({{}, {0}, {0, 1}, {1}, {}});
    CHECK(normalize(g, already) == already);
  }

  TEST_CASE("normalize preserves validity, ends and M") {
    std::mt19937_64 rng(21);
    for (int iter = 0; iter < 100; ++iter) {
      const int n = 1 + static_cast<int>(rng() % 9);
      const Digraph g = iter % 2 ? random_tournament(n, rng()) : random_digraph(n, rng());
      // A coarse decomposition: merge random runs of the exact one.
      const PathDecomposition exact = exact_pathwidth(g).decomposition;
      std::vector<VertexSet> coarse;
      for (std::size_t i = 0; i < exact.bags.size();) {
        std::size_t j = i + 1 + rng() % 3;
        VertexSet u;
        for (std::size_t t = i; t < j && t < exact.bags.size(); ++t) u = set_union(u, exact.bags[t]);
        coarse.push_back(u);
        i = j;
      }
      const PathDecomposition p = bags(coarse);
      REQUIRE(is_path_decomposition(g, p));
      const PathDecomposition q = normalize(g, p);
      CHECK(is_path_decomposition(g, q));
      CHECK(increment_ok(q));
      CHECK(q.first() == p.first());
      CHECK(q.last() == p.last());
      CHECK(q.max_bag() <= p.max_bag());
    }
  }

  TEST_CASE("pad_empty_ends") {
    CHECK(pad_empty_ends(bags({{0}})) == bags({{}, {0}, {}}));
    CHECK(pad_empty_ends(bags({{}})) == bags({{}}));
    CHECK(pad_empty_ends(bags({{}, {0}})) == bags({{}, {0}, {}}));
  }

  TEST_CASE("deletion transforms") {
    // Vertex 3 isolated.
    const Digraph g(4, {{0, 1}, {1, 2}, {2, 0}});
    const PathDecomposition p = bags({{3}, {0, 1}, {1, 2}});
    REQUIRE(is_path_decomposition(g, p));
    const PathDecomposition q = transform_delete_vertex(p, 3);
    CHECK(q == bags({{}, {0, 1}, {1, 2}}));
    CHECK(is_path_decomposition(delete_vertex(g, 3), q));

    for (int e = 0; e < g.edge_count(); ++e) {
      CHECK(transform_delete_edge(g, p, e) == p);
      CHECK(is_path_decomposition(delete_edge(g, e), p));
    }

    // Vertex 0 in every bag.
    const PathDecomposition all = bags({{0, 1}, {0, 1, 2}, {0, 2}});
    REQUIRE(is_path_decomposition(directed_cycle(3), all));
    const PathDecomposition d0 = transform_delete_vertex(all, 0);
    CHECK(d0 == bags({{0}, {0, 1}, {1}}));
    CHECK(d0.width() == all.width() - 1);

    std::mt19937_64 rng(8);
    for (int iter = 0; iter < 100; ++iter) {
      const int n = 2 + static_cast<int>(rng() % 8);
      const Digraph h = iter % 2 ? random_tournament(n, rng()) : random_digraph(n, rng());
      const PathDecomposition d = exact_pathwidth(h).decomposition;
      const Vertex v = static_cast<Vertex>(rng() % n);
      const PathDecomposition dv = transform_delete_vertex(d, v);
      CHECK(is_path_decomposition(delete_vertex(h, v), dv));
      CHECK(dv.width() <= d.width());
    }
  }

  TEST_CASE("contraction transform") {
    const Digraph c3 = directed_cycle(3);
    auto r = transform_under_contraction(c3, bags({{0, 1}, {1, 2}}), induced_subdigraph(c3, {0, 1, 2}));
    CHECK(r.contraction.graph.vertex_count() == 1);
    CHECK(r.decomposition == bags({{0}, {0}}));
    CHECK(verify(r.contraction.graph, r.decomposition, false).width == 0);

    const Digraph t4 = random_tournament(4, 2);
    const PathDecomposition d = exact_pathwidth(t4).decomposition;
    r = transform_under_contraction(t4, d, induced_subdigraph(t4, {2}));
    CHECK(r.contraction.graph == t4);
    CHECK(r.decomposition == d);

    std::mt19937_64 rng(13);
    for (int iter = 0; iter < 150; ++iter) {
      const int n = 2 + static_cast<int>(rng() % 9);
      const Digraph g = iter % 2 ? random_tournament(n, rng()) : random_digraph(n, rng());
      const PathDecomposition p = exact_pathwidth(g).decomposition;
      const VertexSet h = random_sc_set(g, rng);
      const auto out = transform_under_contraction(g, p, induced_subdigraph(g, h));
      CHECK(is_path_decomposition(out.contraction.graph, out.decomposition));
      CHECK(out.decomposition.width() <= p.width());
    }
  }

  TEST_CASE("build_linked on the 3-cycle") {
    const Digraph c3 = directed_cycle(3);
    const PathDecomposition p = normalize(c3, bags({{}, {0, 1}, {1, 2}, {}}));
    BuildLinkedTrace trace;
    const PathDecomposition q = build_linked(c3, p, {}, {}, &trace);
    const auto r = verify(c3, q, true);
    CHECK(r.linked_valid());
    CHECK(q.max_bag() <= 2);
    CHECK(q.first().empty());
    CHECK(q.last().empty());
    for (std::size_t i = 1; i < trace.measures.size(); ++i)
      CHECK(trace.measures[i - 1] < trace.measures[i]);
  }

  TEST_CASE("build_linked keeps an already linked input") {
    const Digraph t3 = transitive_tournament(3);
    const PathDecomposition p = bags({{}, {2}, {}, {1}, {}, {0}, {}});
    REQUIRE(verify(t3, p, true).linked_valid());
    CHECK(build_linked(t3, p, {}, {}) == p);
  }

  TEST_CASE("build_linked property") {
    std::mt19937_64 rng(31);
    for (int iter = 0; iter < 60; ++iter) {
      const int n = 1 + static_cast<int>(rng() % 10);
      const Digraph g = random_tournament(n, rng());
      const PathDecomposition p = pad_empty_ends(exact_pathwidth(g).decomposition);
      BuildLinkedTrace trace;
      const PathDecomposition q = build_linked(g, p, {}, {}, &trace);
      const auto r = verify(g, q, true);
      CHECK(r.linked_valid());
      CHECK(q.first().empty());
      CHECK(q.last().empty());
      CHECK(q.max_bag() <= p.max_bag());
      CHECK(q.length() - 1 == 2 * (n - q.min_bag()));
      for (std::size_t i = 1; i < trace.measures.size(); ++i)
        CHECK(trace.measures[i - 1] < trace.measures[i]);
    }
  }

  TEST_CASE("build_linked improves coarse decompositions") {
    std::mt19937_64 rng(37);
    int rounds = 0;
    for (int iter = 0; iter < 80; ++iter) {
      const int n = 3 + static_cast<int>(rng() % 8);
      const Digraph g = random_tournament(n, rng());
      const PathDecomposition exact = exact_pathwidth(g).decomposition;
      std::vector<VertexSet> coarse;
      for (std::size_t i = 0; i < exact.bags.size();) {
        const std::size_t j = i + 1 + rng() % 4;
        VertexSet u;
        for (std::size_t t = i; t < j && t < exact.bags.size(); ++t) u = set_union(u, exact.bags[t]);
        coarse.push_back(u);
        i = j;
      }
      const PathDecomposition p = normalize(g, pad_empty_ends(bags(coarse)));
      BuildLinkedTrace trace;
      const PathDecomposition q = build_linked(g, p, {}, {}, &trace);
      rounds += trace.rounds;
      CHECK(verify(g, q, true).linked_valid());
      CHECK(q.max_bag() <= p.max_bag());
      CHECK(q.length() - 1 == 2 * n);
      for (std::size_t i = 1; i < trace.measures.size(); ++i)
        CHECK(trace.measures[i - 1] < trace.measures[i]);
    }
    CHECK(rounds >= 20);
  }

  TEST_CASE("build_linked with non-empty ends") {
    const Digraph c3 = directed_cycle(3);
    const PathDecomposition p = bags({{0}, {0, 2}, {0}, {0, 1}, {0}});
    REQUIRE(is_path_decomposition(c3, p));
    const PathDecomposition q = build_linked(c3, p, {0}, {0});
    CHECK(verify(c3, q, true).linked_valid());
    CHECK(q.first() == VertexSet{0});
    CHECK(q.last() == VertexSet{0});
    CHECK(q.max_bag() <= 2);
    CHECK(q.length() - 1 == 2 * (3 - 1));
  }

  TEST_CASE("lex_measure") {
    const PathDecomposition p = bags({{}, {0}, {0, 1}, {1}, {}});
    CHECK(lex_measure(p, 2) == LexMeasure{2, 2, 1});
  }
}
