#include <random>
#include <stdexcept>

#include "dminor/digraph.hpp"

namespace dminor {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

bool coin(std::mt19937_64& rng) { return (rng() >> 63) != 0; }

}  // namespace

std::optional<Family> parse_family(const std::string& name) {
  if (name == "transitive") return Family::transitive;
  if (name == "cycle") return Family::cycle;
  if (name == "super_tournament" || name == "super-tournament") return Family::super_tournament;
  if (name == "stability_two" || name == "stability-two") return Family::stability_two;
  if (name == "random_tournament" || name == "random-tournament") return Family::random_tournament;
  if (name == "random_digraph" || name == "random-digraph") return Family::random_digraph;
  return std::nullopt;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::transitive: return "transitive";
    case Family::cycle: return "cycle";
    case Family::super_tournament: return "super_tournament";
    case Family::stability_two: return "stability_two";
    case Family::random_tournament: return "random_tournament";
    case Family::random_digraph: return "random_digraph";
  }
  return "unknown";
}

Digraph generate(Family family, int size, std::uint64_t seed) {
  switch (family) {
    case Family::transitive: return transitive_tournament(size);
    case Family::cycle: return directed_cycle(size);
    case Family::super_tournament: return super_tournament(size);
    case Family::stability_two: return stability_two(size);
    case Family::random_tournament: return random_tournament(size, seed);
    case Family::random_digraph: return random_digraph(size, seed);
  }
  throw std::invalid_argument("unknown family");
}

Digraph transitive_tournament(int n) {
  require(n >= 0, "transitive tournament needs n >= 0");
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) edges.push_back({a, b});
  return Digraph(n, std::move(edges));
}

Digraph directed_cycle(int n) {
  require(n >= 1, "directed cycle needs n >= 1");
  std::vector<Edge> edges;
  if (n == 1) return Digraph(1);
  for (Vertex v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  return Digraph(n, std::move(edges));
}

Digraph super_tournament(int i) {
  require(i >= 3, "super-tournament family needs i >= 3");
  std::vector<Edge> edges = transitive_tournament(i).edges();
  for (Vertex v = 0; v + 1 < i; ++v) edges.push_back({v, v + 1});
  edges.push_back({0, i - 1});
  return Digraph(i, std::move(edges));
}

Digraph stability_two(int i) {
  require(i >= 2, "stability-two family needs i >= 2");
  const StabilityTwoLayout at{i};
  std::vector<Edge> edges;
  for (int k = 0; k < 3; ++k) {
    edges.push_back({at.a(k), at.a((k + 1) % 3)});
    edges.push_back({at.b(k), at.b((k + 1) % 3)});
  }
  for (int x = 0; x < i; ++x)
    for (int y = x + 1; y < i; ++y) {
      edges.push_back({at.c(x), at.c(y)});
      edges.push_back({at.d(x), at.d(y)});
    }
  for (int k = 0; k < 3; ++k)
    for (int x = 0; x < i; ++x) {
      edges.push_back({at.a(k), at.c(x)});
      edges.push_back({at.d(x), at.b(k)});
    }
  edges.push_back({at.b(0), at.a(0)});
  // c_1 d_1 c_2 d_2 ... c_i d_i c_1 as an undirected Hamiltonian cycle, all
  // edges oriented C -> D. For i = 2 this is the complete bipartite K_{2,2}.
  for (int x = 0; x < i; ++x) {
    edges.push_back({at.c(x), at.d(x)});
    edges.push_back({at.c((x + 1) % i), at.d(x)});
  }
  return Digraph(6 + 2 * i, std::move(edges));
}

Digraph random_tournament(int n, std::uint64_t seed) {
  require(n >= 0, "random tournament needs n >= 0");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng))
        edges.push_back({u, v});
      else
        edges.push_back({v, u});
    }
  return Digraph(n, std::move(edges));
}

Digraph random_digraph(int n, std::uint64_t seed) {
  require(n >= 0, "random digraph needs n >= 0");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v && coin(rng)) edges.push_back({u, v});
  return Digraph(n, std::move(edges));
}

}  // namespace dminor
