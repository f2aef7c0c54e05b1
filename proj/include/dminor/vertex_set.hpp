#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace dminor {

using Vertex = int;

// Bitmask over vertex ids, used by the kernels restricted to hosts with at
// most 64 vertices.
using Mask = std::uint64_t;

/// Sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  using const_iterator = std::vector<Vertex>::const_iterator;

  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> vs) : items_(vs) { canonicalize(); }
  explicit VertexSet(std::vector<Vertex> vs) : items_(std::move(vs)) { canonicalize(); }
  template <class It>
  VertexSet(It first, It last) : items_(first, last) {
    canonicalize();
  }

  static VertexSet range(int n);
  static VertexSet from_mask(Mask m);

  bool contains(Vertex v) const { return std::binary_search(items_.begin(), items_.end(), v); }
  void insert(Vertex v);
  void erase(Vertex v);

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const_iterator begin() const { return items_.begin(); }
  const_iterator end() const { return items_.end(); }
  Vertex front() const { return items_.front(); }
  Vertex back() const { return items_.back(); }
  const std::vector<Vertex>& items() const { return items_; }

  // Requires every member < 64.
  Mask to_mask() const;
  std::string to_string() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) { return a.items_ <=> b.items_; }

 private:
  void canonicalize();

  std::vector<Vertex> items_;
};

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
std::size_t symmetric_difference_size(const VertexSet& a, const VertexSet& b);
bool intersects(const VertexSet& a, const VertexSet& b);
bool is_subset(const VertexSet& a, const VertexSet& b);

}  // namespace dminor
