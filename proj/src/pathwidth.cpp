#include "dminor/pathwidth.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace dminor {

namespace {

using Subset = std::uint32_t;

void check_input(const Digraph& g) {
  if (g.has_loops()) throw std::invalid_argument("path-width is undefined with loops");
  if (g.vertex_count() > kMaxPathwidthVertices)
    throw std::invalid_argument("exact path-width supports at most " +
                                std::to_string(kMaxPathwidthVertices) + " vertices");
}

std::vector<Subset> out_subsets(const Digraph& g) {
  std::vector<Subset> out(g.vertex_count(), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    for (Vertex w : g.successors(v)) out[v] |= Subset{1} << w;
  return out;
}

// |B(T)|: members of T still waiting for an out-neighbour.
inline std::uint8_t boundary_size(const std::vector<Subset>& out, Subset t) {
  std::uint8_t count = 0;
  for (Subset rest = t; rest; rest &= rest - 1) {
    int u = std::countr_zero(rest);
    count += (out[u] & ~t) != 0;
  }
  return count;
}

inline std::uint8_t relax(const std::vector<std::uint8_t>& best,
                          const std::vector<std::uint8_t>& boundary, Subset t) {
  std::uint8_t value = 0xff;
  for (Subset rest = t; rest; rest &= rest - 1) {
    Subset prev = t & ~(rest & (~rest + 1));
    value = std::min(value, std::max(best[prev], boundary[prev]));
  }
  return value;
}

PathwidthResult reconstruct(const Digraph& g, const std::vector<std::uint8_t>& best) {
  const int n = g.vertex_count();
  PathwidthResult res;
  if (n == 0) {
    res.decomposition.bags.push_back({});
    return res;
  }
  const auto out = out_subsets(g);
  const Subset full = (Subset{1} << n) - 1;
  res.width = best[full];

  // Peel the last-introduced vertex off repeatedly; smallest id on ties.
  for (Subset t = full; t;) {
    for (Subset rest = t;; rest &= rest - 1) {
      Subset bit = rest & (~rest + 1);
      Subset prev = t & ~bit;
      if (std::max(best[prev], boundary_size(out, prev)) == best[t]) {
        res.order.push_back(std::countr_zero(bit));
        t = prev;
        break;
      }
    }
  }
  std::reverse(res.order.begin(), res.order.end());

  Subset introduced = 0;
  for (Vertex v : res.order) {
    std::vector<Vertex> bag{v};
    for (Subset rest = introduced; rest; rest &= rest - 1) {
      int u = std::countr_zero(rest);
      if (out[u] & ~introduced) bag.push_back(u);
    }
    res.decomposition.bags.emplace_back(std::move(bag));
    introduced |= Subset{1} << v;
  }
  return res;
}

}  // namespace

std::vector<std::uint8_t> pathwidth_table_serial(const Digraph& g) {
  check_input(g);
  const int n = g.vertex_count();
  const auto out = out_subsets(g);
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::uint8_t> boundary(size), best(size);
  for (Subset t = 0; t < size; ++t) boundary[t] = boundary_size(out, t);
  best[0] = 0;
  for (Subset t = 1; t < size; ++t) best[t] = relax(best, boundary, t);
  return best;
}

std::vector<std::uint8_t> pathwidth_table_parallel(const Digraph& g) {
  check_input(g);
  const int n = g.vertex_count();
  const auto out = out_subsets(g);
  const std::int64_t size = std::int64_t{1} << n;
  std::vector<std::uint8_t> boundary(size), best(size);

#pragma omp parallel for schedule(static)
  for (std::int64_t t = 0; t < size; ++t) boundary[t] = boundary_size(out, static_cast<Subset>(t));

  // Subsets of one cardinality depend only on the previous layer.
  best[0] = 0;
  for (int layer = 1; layer <= n; ++layer) {
#pragma omp parallel for schedule(static)
    for (std::int64_t t = 1; t < size; ++t) {
      if (std::popcount(static_cast<Subset>(t)) != layer) continue;
      best[t] = relax(best, boundary, static_cast<Subset>(t));
    }
  }
  return best;
}

PathwidthResult exact_pathwidth(const Digraph& g) {
  return reconstruct(g, pathwidth_table_parallel(g));
}

PathwidthResult exact_pathwidth_serial(const Digraph& g) {
  return reconstruct(g, pathwidth_table_serial(g));
}

}  // namespace dminor
