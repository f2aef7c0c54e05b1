#include "dminor/canonical.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace dminor {

namespace {

std::vector<int> refine_colours(const Digraph& g) {
  const int n = g.vertex_count();
  std::vector<int> colour(n, 0);
  int classes = n > 0 ? 1 : 0;
  for (;;) {
    using Signature = std::tuple<int, int, std::vector<std::tuple<int, int, int>>>;
    std::vector<Signature> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      std::vector<std::tuple<int, int, int>> around;
      for (Vertex w = 0; w < n; ++w) {
        if (w == v) continue;
        int out = g.multiplicity(v, w), in = g.multiplicity(w, v);
        if (out || in) around.emplace_back(colour[w], out, in);
      }
      std::sort(around.begin(), around.end());
      sig[v] = {colour[v], g.multiplicity(v, v), std::move(around)};
    }
    std::vector<Signature> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (Vertex v = 0; v < n; ++v)
      colour[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) -
                                   distinct.begin());
    if (static_cast<int>(distinct.size()) == classes) break;
    classes = static_cast<int>(distinct.size());
  }
  return colour;
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Digraph& g) : g_(g), n_(g.vertex_count()) {
    for (Vertex v = 0; v < n_; ++v)
      for (Vertex w = 0; w < n_; ++w)
        if (g.multiplicity(v, w) > 255) throw std::invalid_argument("edge multiplicity above 255");
    auto colour = refine_colours(g);
    slot_colour_.resize(n_);
    std::vector<Vertex> by_colour(n_);
    for (Vertex v = 0; v < n_; ++v) by_colour[v] = v;
    std::stable_sort(by_colour.begin(), by_colour.end(),
                     [&](Vertex a, Vertex b) { return colour[a] < colour[b]; });
    for (int p = 0; p < n_; ++p) slot_colour_[p] = colour[by_colour[p]];
    colour_ = std::move(colour);
    placed_.assign(n_, -1);
    used_.assign(n_, 0);
  }

  std::vector<Vertex> run() {
    code_.clear();
    search(0);
    std::vector<Vertex> labeling(n_);
    for (int p = 0; p < n_; ++p) labeling[best_order_[p]] = p;
    return labeling;
  }

 private:
  // Code of slot p: loop count, then (in, out) multiplicities to earlier slots.
  void append_slot(int p) {
    Vertex v = placed_[p];
    code_.push_back(static_cast<char>(g_.multiplicity(v, v)));
    for (int q = 0; q < p; ++q) {
      code_.push_back(static_cast<char>(g_.multiplicity(placed_[q], v)));
      code_.push_back(static_cast<char>(g_.multiplicity(v, placed_[q])));
    }
  }

  void search(int p) {
    if (p == n_) {
      if (!have_best_ || code_ < best_code_) {
        best_code_ = code_;
        best_order_ = placed_;
        have_best_ = true;
      }
      return;
    }
    for (Vertex v = 0; v < n_; ++v) {
      if (used_[v] || colour_[v] != slot_colour_[p]) continue;
      const std::size_t mark = code_.size();
      placed_[p] = v;
      append_slot(p);
      // All codes have the same length, so a larger prefix never wins.
      bool prune = have_best_ && code_.compare(0, code_.size(), best_code_, 0, code_.size()) > 0;
      if (!prune) {
        used_[v] = 1;
        search(p + 1);
        used_[v] = 0;
      }
      code_.resize(mark);
    }
    placed_[p] = -1;
  }

  const Digraph& g_;
  int n_;
  std::vector<int> colour_;
  std::vector<int> slot_colour_;
  std::vector<Vertex> placed_;
  std::vector<char> used_;
  std::string code_;
  std::string best_code_;
  std::vector<Vertex> best_order_;
  bool have_best_ = false;
};

}  // namespace

std::vector<Vertex> canonical_labeling(const Digraph& g) {
  if (g.vertex_count() == 0) return {};
  return CanonicalSearch(g).run();
}

Digraph relabel(const Digraph& g, const std::vector<Vertex>& perm) {
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const Edge& e : g.edges()) edges.push_back({perm[e.tail], perm[e.head]});
  return Digraph(g.vertex_count(), std::move(edges));
}

Digraph canonical_form(const Digraph& g) {
  Digraph r = relabel(g, canonical_labeling(g));
  std::vector<Edge> edges = r.edges();
  std::sort(edges.begin(), edges.end());
  return Digraph(r.vertex_count(), std::move(edges));
}

std::string canonical_key(const Digraph& g) {
  const Digraph c = canonical_form(g);
  const int n = c.vertex_count();
  std::string key = std::to_string(n) + ":";
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w = 0; w < n; ++w) key.push_back(static_cast<char>('0' + c.multiplicity(v, w)));
  return key;
}

bool isomorphic(const Digraph& a, const Digraph& b) {
  return a.vertex_count() == b.vertex_count() && a.edge_count() == b.edge_count() &&
         canonical_key(a) == canonical_key(b);
}

}  // namespace dminor
