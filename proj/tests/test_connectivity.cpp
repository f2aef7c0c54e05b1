#include <doctest.h>

#include <algorithm>
#include <bit>
#include <random>

#include "dminor/connectivity.hpp"
#include "dminor/oracle/brute_force.hpp"

using namespace dminor;

namespace {

VertexSet random_subset(int n, std::mt19937_64& rng) {
  std::vector<Vertex> vs;
  for (Vertex v = 0; v < n; ++v)
    if (rng() % 3 == 0) vs.push_back(v);
  return VertexSet(std::move(vs));
}

}  // namespace

TEST_SUITE("connectivity") {
  TEST_CASE("max_disjoint_paths examples") {
    const Digraph c3 = directed_cycle(3);
    PathSystem ps = max_disjoint_paths(c3, VertexSet{1}, VertexSet{1});
    REQUIRE(ps.size() == 1);
    CHECK(ps.paths[0] == Path{1});

    CHECK(max_disjoint_path_count(c3, VertexSet{0, 1}, VertexSet{1, 2}) ==
          oracle::min_vertex_cut(c3, VertexSet{0, 1}, VertexSet{1, 2}));

    const Digraph t4 = transitive_tournament(4);
    ps = max_disjoint_paths(t4, VertexSet{0, 1}, VertexSet{2, 3});
    CHECK(ps.size() == 2);
    CHECK(is_disjoint_path_system(t4, ps, VertexSet{0, 1}, VertexSet{2, 3}));
    CHECK(max_disjoint_path_count(t4, VertexSet{0, 1}, VertexSet{2, 3}, 1) == 1);
    CHECK(max_disjoint_paths(t4, VertexSet{}, VertexSet{2}).size() == 0);
  }

  TEST_CASE("Menger duality against cut enumeration") {
    std::mt19937_64 rng(17);
    for (int iter = 0; iter < 300; ++iter) {
      const int n = 1 + static_cast<int>(rng() % 8);
      const Digraph g = iter % 2 ? random_tournament(n, rng()) : random_digraph(n, rng());
      const VertexSet a = random_subset(n, rng), b = random_subset(n, rng);
      const PathSystem ps = max_disjoint_paths(g, a, b);
      CHECK(is_disjoint_path_system(g, ps, a, b));
      const int cut = oracle::min_vertex_cut(g, a, b);
      CHECK(static_cast<int>(ps.size()) == cut);
      const Separation sep = min_separation(g, a, b);
      CHECK(is_separation(g, sep));
      CHECK(separates(sep, a, b));
      CHECK(sep.order() == cut);
    }
  }

  TEST_CASE("min_separation examples") {
    const Digraph c3 = directed_cycle(3);
    Separation s = min_separation(c3, VertexSet{0}, VertexSet{2});
    CHECK(s.order() == 1);
    s = min_separation(transitive_tournament(3), VertexSet{2}, VertexSet{0});
    CHECK(s.order() == 0);
    s = min_separation(c3, VertexSet{0, 1}, VertexSet{1});
    CHECK(set_intersection(s.c, s.d).contains(1));
    CHECK(s.order() == 1);
  }

  TEST_CASE("min_separation source side is the residual reachable set") {
    // Two routes 0 -> 1 -> 3 and 0 -> 2 -> 3; the only minimum cut nearest
    // to a is {0}.
    const Digraph g(4, {{0, 1}, {1, 3}, {0, 2}, {2, 3}});
    const Separation s = min_separation(g, VertexSet{0}, VertexSet{3});
    CHECK(s.order() == 1);
    CHECK(s.c == VertexSet{0});
    CHECK(s.d == VertexSet{0, 1, 2, 3});
  }

  TEST_CASE("minimal_union_paths") {
    const Digraph t3 = transitive_tournament(3);
    PathSystem ps = minimal_union_paths(t3, VertexSet{0}, VertexSet{2}, 1);
    REQUIRE(ps.size() == 1);
    CHECK(ps.paths[0] == Path{0, 2});
    CHECK(minimal_union_paths(t3, VertexSet{0}, VertexSet{2}, 0).size() == 0);
    CHECK_THROWS_AS(minimal_union_paths(t3, VertexSet{2}, VertexSet{0}, 1), std::invalid_argument);

    std::mt19937_64 rng(5);
    int checked = 0;
    for (int iter = 0; iter < 400 && checked < 150; ++iter) {
      const int n = 2 + static_cast<int>(rng() % 6);
      const Digraph g = random_tournament(n, rng());
      const VertexSet a = random_subset(n, rng), b = random_subset(n, rng);
      const int max = max_disjoint_path_count(g, a, b);
      if (max == 0) continue;
      const int s = 1 + static_cast<int>(rng() % max);
      ps = minimal_union_paths(g, a, b, s);
      ++checked;
      CHECK(static_cast<int>(ps.size()) == s);
      CHECK(is_disjoint_path_system(g, ps, a, b));
      for (const Path& p : ps.paths) {
        CHECK(is_induced_path(g, p));
        for (std::size_t i = 0; i < p.size(); ++i) {
          CHECK(a.contains(p[i]) == (i == 0));
          CHECK(b.contains(p[i]) == (i + 1 == p.size()));
        }
      }
      // Inclusion-minimal: no system fits in the union minus one vertex.
      const VertexSet u = ps.vertices();
      for (Vertex x : u) {
        VertexSet rest = u;
        rest.erase(x);
        InducedDigraph sub = induce(g, rest);
        std::vector<Vertex> la, lb;
        for (std::size_t i = 0; i < sub.original.size(); ++i) {
          if (a.contains(sub.original[i])) la.push_back(static_cast<Vertex>(i));
          if (b.contains(sub.original[i])) lb.push_back(static_cast<Vertex>(i));
        }
        CHECK(max_disjoint_path_count(sub.graph, VertexSet(la), VertexSet(lb), s) < s);
      }
    }
    CHECK(checked >= 100);
  }

  TEST_CASE("internally disjoint paths against cut enumeration") {
    std::mt19937_64 rng(9);
    for (int iter = 0; iter < 200; ++iter) {
      const int n = 2 + static_cast<int>(rng() % 7);
      const Digraph g = iter % 2 ? random_tournament(n, rng()) : random_digraph(n, rng());
      const Vertex u = static_cast<Vertex>(rng() % n);
      Vertex v = static_cast<Vertex>(rng() % n);
      if (u == v) v = (v + 1) % n;
      CHECK(internally_disjoint_paths(g, u, v) == oracle::min_internal_cut(g, u, v));
    }
  }

  TEST_CASE("k-triples") {
    for (int n = 3; n <= 8; ++n) CHECK_FALSE(find_k_triple(transitive_tournament(n), 1).has_value());

    // A = {0,1}, B = {2,3}, C = {4,5} with c_i -> a_i.
    std::vector<Edge> edges;
    for (Vertex a : {0, 1})
      for (Vertex b : {2, 3}) edges.push_back({a, b});
    for (Vertex b : {2, 3})
      for (Vertex c : {4, 5}) edges.push_back({b, c});
    edges.push_back({4, 1});
    edges.push_back({5, 0});
    const Digraph g(6, edges);
    const auto t = find_k_triple(g, 2);
    REQUIRE(t.has_value());
    CHECK(is_k_triple(g, *t));
    CHECK_FALSE(find_k_triple(g, 3).has_value());
    CHECK_THROWS_AS(find_k_triple(g, 0), std::invalid_argument);

    const KTriple wrong{{0, 1}, {2, 3}, {4, 5}};
    CHECK_FALSE(is_k_triple(g, wrong));
    const KTriple right{{0, 1}, {2, 3}, {5, 4}};
    CHECK(is_k_triple(g, right));

    std::mt19937_64 rng(3);
    for (int iter = 0; iter < 40; ++iter) {
      const int n = 6 + static_cast<int>(rng() % 2);
      const Digraph r = iter % 2 ? random_tournament(n, rng()) : random_digraph(n, rng());
      for (int k = 1; k <= 2; ++k) {
        const auto found = find_k_triple(r, k);
        CHECK(found.has_value() == oracle::has_k_triple(r, k));
        if (found) CHECK(is_k_triple(r, *found));
      }
    }
  }

  TEST_CASE("pairwise k-connected sets") {
    auto s = pairwise_k_connected_set(transitive_tournament(5), 1);
    REQUIRE(s.has_value());
    CHECK(s->size() == 1);
    CHECK_FALSE(pairwise_k_connected_set(transitive_tournament(6), 2).has_value());
    CHECK_FALSE(pairwise_k_connected_set(directed_cycle(3), 2).has_value());

    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 30; ++iter) {
      const Digraph g = random_tournament(7, rng());
      for (int k = 2; k <= 3; ++k) {
        const auto found = pairwise_k_connected_set(g, k);
        // Exhaustive check over all k-subsets with the cut oracle.
        bool exists = false;
        for (Mask m = 0; m < (Mask{1} << 7) && !exists; ++m) {
          if (std::popcount(m) != k) continue;
          const VertexSet vs = VertexSet::from_mask(m);
          bool ok = true;
          for (Vertex u : vs)
            for (Vertex v : vs)
              if (u != v && oracle::min_internal_cut(g, u, v) < k) ok = false;
          exists = ok;
        }
        CHECK(found.has_value() == exists);
        if (found) {
          CHECK(static_cast<int>(found->size()) == k);
          for (Vertex u : *found)
            for (Vertex v : *found)
              if (u != v) CHECK(internally_disjoint_paths(g, u, v) >= k);
        }
      }
    }
  }
}
