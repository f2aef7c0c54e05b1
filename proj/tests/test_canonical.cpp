#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "dminor/canonical.hpp"
#include "dminor/oracle/brute_force.hpp"

using namespace dminor;

namespace {

bool brute_isomorphic(const Digraph& a, const Digraph& b) {
  const int n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (Vertex u = 0; u < n && ok; ++u)
      for (Vertex v = 0; v < n && ok; ++v)
        ok = a.multiplicity(u, v) == b.multiplicity(perm[u], perm[v]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::vector<Vertex> random_perm(int n, std::mt19937_64& rng) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

TEST_SUITE("canonical") {
  TEST_CASE("relabel") {
    const Digraph g(3, {{0, 1}, {1, 2}});
    const Digraph h = relabel(g, {2, 0, 1});
    CHECK(h.edges()[0].tail == 2);
    CHECK(h.edges()[0].head == 0);
    CHECK(h.edges()[1].tail == 0);
    CHECK(h.edges()[1].head == 1);
  }

  TEST_CASE("relabelled copies share a key") {
    std::mt19937_64 rng(4);
    for (int iter = 0; iter < 200; ++iter) {
      const int n = 1 + static_cast<int>(rng() % 8);
      std::vector<Edge> edges;
      for (int e = 0, m = static_cast<int>(rng() % (2 * n + 2)); e < m; ++e)
        edges.push_back({static_cast<Vertex>(rng() % n), static_cast<Vertex>(rng() % n)});
      const Digraph g(n, edges);
      const Digraph h = relabel(g, random_perm(n, rng));
      CHECK(canonical_key(g) == canonical_key(h));
      CHECK(canonical_form(g) == canonical_form(h));
      CHECK(isomorphic(g, h));
      CHECK(relabel(g, canonical_labeling(g)) == canonical_form(g));
    }
  }

  TEST_CASE("keys separate exactly the isomorphism classes") {
    for (int n = 1; n <= 3; ++n) {
      const auto all = oracle::all_simple_digraphs(n);
      for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i; j < all.size(); ++j)
          CHECK((canonical_key(all[i]) == canonical_key(all[j])) == brute_isomorphic(all[i], all[j]));
    }
    const auto t5 = oracle::all_tournaments(5);
    std::mt19937_64 rng(2);
    for (int iter = 0; iter < 400; ++iter) {
      const Digraph& a = t5[rng() % t5.size()];
      const Digraph& b = t5[rng() % t5.size()];
      CHECK(isomorphic(a, b) == brute_isomorphic(a, b));
    }
  }

  TEST_CASE("tournament class counts") {
    // Non-isomorphic tournaments on 1..6 vertices: 1, 1, 2, 4, 12, 56.
    const int expected[] = {1, 1, 2, 4, 12, 56};
    for (int n = 1; n <= 6; ++n) {
      std::vector<std::string> keys;
      for (const Digraph& t : oracle::all_tournaments(n)) keys.push_back(canonical_key(t));
      std::sort(keys.begin(), keys.end());
      keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
      CHECK(static_cast<int>(keys.size()) == expected[n - 1]);
    }
  }

  TEST_CASE("multiplicities and loops matter") {
    CHECK_FALSE(isomorphic(Digraph(2, {{0, 1}}), Digraph(2, {{0, 1}, {0, 1}})));
    CHECK_FALSE(isomorphic(Digraph(1, {{0, 0}}), Digraph(1)));
    CHECK(isomorphic(Digraph(2, {{0, 1}, {0, 1}}), Digraph(2, {{1, 0}, {1, 0}})));
    CHECK(canonical_key(Digraph(0)) == canonical_key(Digraph(0)));
    CHECK(canonical_key(Digraph(0)) != canonical_key(Digraph(1)));
  }
}
