#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

#include "ldsk/error.hpp"
#include "ldsk/graph.hpp"

namespace ldsk {

inline constexpr int kDefaultMaxLeafCap = 12;

namespace detail {

/// Branches on every edge (include / exclude). Included edges stay acyclic,
/// excluded edges must leave the graph connected; a leaf-count bound prunes
/// subtrees that cannot beat the incumbent.
class SpanningTreeSearch {
 public:
  explicit SpanningTreeSearch(const Graph& g) : n_(g.order()) {
    // Edges of high-degree vertices first, so the first completed tree is
    // star-like and the incumbent starts strong.
    std::vector<Vertex> by_degree = all_vertices(g);
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    std::vector<std::vector<char>> listed(static_cast<std::size_t>(n_), std::vector<char>(static_cast<std::size_t>(n_), 0));
    for (Vertex u : by_degree)
      for (Vertex v : g.neighbors(u))
        if (!listed[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) {
          listed[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
          listed[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
          edges_.emplace_back(u, v);
        }
    words_ = (static_cast<std::size_t>(n_) + 63) / 64;
    available_.assign(static_cast<std::size_t>(n_), Mask(words_, 0));
    for (auto [u, v] : edges_) {
      flip(available_[static_cast<std::size_t>(u)], v);
      flip(available_[static_cast<std::size_t>(v)], u);
    }
    tree_degree_.assign(static_cast<std::size_t>(n_), 0);
  }

  int run() {
    std::vector<Vertex> parent(static_cast<std::size_t>(n_));
    std::iota(parent.begin(), parent.end(), 0);
    recurse(0, 0, parent);
    return best_;
  }

 private:
  static Vertex find(std::vector<Vertex>& parent, Vertex v) {
    while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)];
    return v;
  }

  using Mask = std::vector<std::uint64_t>;

  static bool test(const Mask& m, Vertex v) { return (m[static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1u; }
  static void flip(Mask& m, Vertex v) { m[static_cast<std::size_t>(v) / 64] ^= std::uint64_t{1} << (v % 64); }

  bool connected_without_excluded() const {
    Mask seen(words_, 0);
    std::vector<Vertex> stack{0};
    flip(seen, 0);
    int count = 1;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      const Mask& nb = available_[static_cast<std::size_t>(v)];
      for (std::size_t w = 0; w < words_; ++w)
        for (std::uint64_t fresh = nb[w] & ~seen[w]; fresh; fresh &= fresh - 1) {
          const auto x = static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(fresh)));
          flip(seen, x);
          ++count;
          stack.push_back(x);
        }
    }
    return count == n_;
  }

  // A vertex can still end as a leaf only while its tree degree is <= 1.
  int leaf_upper_bound() const {
    int bound = 0;
    for (Vertex v = 0; v < n_; ++v)
      if (tree_degree_[static_cast<std::size_t>(v)] <= 1) ++bound;
    return bound;
  }

  void recurse(std::size_t index, int tree_edges, std::vector<Vertex>& parent) {
    if (tree_edges == n_ - 1) {
      int leaves = 0;
      for (Vertex v = 0; v < n_; ++v)
        if (tree_degree_[static_cast<std::size_t>(v)] == 1) ++leaves;
      best_ = std::max(best_, leaves);
      return;
    }
    if (index == edges_.size()) return;
    if (leaf_upper_bound() <= best_) return;

    auto [u, v] = edges_[index];
    const Vertex ru = find(parent, u), rv = find(parent, v);
    if (ru != rv) {
      auto saved = parent;
      parent[static_cast<std::size_t>(ru)] = rv;
      ++tree_degree_[static_cast<std::size_t>(u)];
      ++tree_degree_[static_cast<std::size_t>(v)];
      recurse(index + 1, tree_edges + 1, parent);
      --tree_degree_[static_cast<std::size_t>(u)];
      --tree_degree_[static_cast<std::size_t>(v)];
      parent = std::move(saved);
    }
    flip(available_[static_cast<std::size_t>(u)], v);
    flip(available_[static_cast<std::size_t>(v)], u);
    if (ru == rv || connected_without_excluded()) recurse(index + 1, tree_edges, parent);
    flip(available_[static_cast<std::size_t>(u)], v);
    flip(available_[static_cast<std::size_t>(v)], u);
  }

  int n_;
  std::vector<Edge> edges_;
  std::size_t words_ = 1;
  std::vector<Mask> available_;  // neighbours over edges not yet excluded
  std::vector<int> tree_degree_;
  int best_ = 0;
};

}  // namespace detail

/// Maximum number of leaves over all spanning trees of a connected graph.
/// Exhaustive; refuses graphs with more than `cap` vertices.
inline int max_leaf_number_exact(const Graph& g, int cap = kDefaultMaxLeafCap) {
  if (g.order() < 2) throw InvalidArgument("max leaf number needs at least two vertices");
  if (g.order() > cap)
    throw RefusalError("max_leaf_number_exact refuses n = " + std::to_string(g.order()) + " above the cap of " +
                       std::to_string(cap));
  if (!is_connected(g)) throw InvalidArgument("max leaf number is defined for connected graphs only");
  return detail::SpanningTreeSearch(g).run();
}

}  // namespace ldsk
