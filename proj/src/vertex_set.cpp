#include "dminor/vertex_set.hpp"

#include <bit>
#include <iterator>
#include <stdexcept>

namespace dminor {

VertexSet VertexSet::range(int n) {
  VertexSet s;
  s.items_.resize(n > 0 ? n : 0);
  for (int i = 0; i < n; ++i) s.items_[i] = i;
  return s;
}

VertexSet VertexSet::from_mask(Mask m) {
  VertexSet s;
  while (m) {
    s.items_.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return s;
}

void VertexSet::insert(Vertex v) {
  auto it = std::lower_bound(items_.begin(), items_.end(), v);
  if (it == items_.end() || *it != v) items_.insert(it, v);
}

void VertexSet::erase(Vertex v) {
  auto it = std::lower_bound(items_.begin(), items_.end(), v);
  if (it != items_.end() && *it == v) items_.erase(it);
}

Mask VertexSet::to_mask() const {
  Mask m = 0;
  for (Vertex v : items_) {
    if (v < 0 || v >= 64) throw std::out_of_range("vertex id does not fit a 64-bit mask");
    m |= Mask{1} << v;
  }
  return m;
}

std::string VertexSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < items_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(items_[i]);
  }
  return out + "}";
}

void VertexSet::canonicalize() {
  std::sort(items_.begin(), items_.end());
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

std::size_t symmetric_difference_size(const VertexSet& a, const VertexSet& b) {
  std::size_t common = set_intersection(a, b).size();
  return a.size() + b.size() - 2 * common;
}

bool intersects(const VertexSet& a, const VertexSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j)
      ++i;
    else
      ++j;
  }
  return false;
}

bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace dminor
