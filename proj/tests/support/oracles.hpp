#pragma once

// Independent brute-force oracles and seeded instance generators used by the
// test suites. Nothing here calls the library's solver.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "ldsk/graph.hpp"
#include "ldsk/lds.hpp"

namespace ldsk::testing {

using Mask = std::uint64_t;

inline std::vector<Mask> neighbour_masks(const Graph& g) {
  std::vector<Mask> nb(static_cast<std::size_t>(g.order()), 0);
  for (auto [u, v] : g.edges()) {
    nb[static_cast<std::size_t>(u)] |= Mask{1} << v;
    nb[static_cast<std::size_t>(v)] |= Mask{1} << u;
  }
  return nb;
}

/// Direct check of the definition on a bitmask (n <= 64).
inline bool is_lds_mask(const std::vector<Mask>& nb, Mask d) {
  const int n = static_cast<int>(nb.size());
  std::vector<Mask> seen;
  seen.reserve(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    if (d >> v & 1) continue;
    const Mask code = nb[static_cast<std::size_t>(v)] & d;
    if (code == 0) return false;
    seen.push_back(code);
  }
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

inline std::vector<Vertex> mask_vertices(Mask m) {
  std::vector<Vertex> out;
  for (; m; m &= m - 1) out.push_back(static_cast<Vertex>(std::countr_zero(m)));
  return out;
}

inline Mask vertices_mask(const std::vector<Vertex>& vs) {
  Mask m = 0;
  for (Vertex v : vs) m |= Mask{1} << v;
  return m;
}

/// Visits every subset of {0..n-1} of size k in increasing numeric order.
template <typename F>
void for_each_subset(int n, int k, F&& visit) {
  if (k == 0) {
    visit(Mask{0});
    return;
  }
  if (k > n) return;
  Mask m = (Mask{1} << k) - 1;
  const Mask limit = n == 64 ? ~Mask{0} : (Mask{1} << n);
  while (m < limit) {
    if (!visit(m)) return;
    const Mask c = m & (~m + 1), r = m + c;
    if (r == 0) return;
    m = (((r ^ m) >> 2) / c) | r;
  }
}

/// Minimum LDS size by exhaustive search over subsets of increasing size.
inline int brute_force_lds_number(const Graph& g) {
  const auto nb = neighbour_masks(g);
  for (int k = 0; k <= g.order(); ++k) {
    bool found = false;
    for_each_subset(g.order(), k, [&](Mask m) {
      found = is_lds_mask(nb, m);
      return !found;
    });
    if (found) return k;
  }
  return g.order();
}

/// Every LDS of exactly size k.
inline std::vector<CodeSet> all_lds_of_size(const Graph& g, int k) {
  const auto nb = neighbour_masks(g);
  std::vector<CodeSet> out;
  for_each_subset(g.order(), k, [&](Mask m) {
    if (is_lds_mask(nb, m)) out.emplace_back(mask_vertices(m));
    return true;
  });
  return out;
}

/// Max leaf number through connected domination: ml = n - gamma_c for n >= 3.
inline int cds_max_leaf(const Graph& g) {
  const int n = g.order();
  if (n == 2) return 2;
  const auto nb = neighbour_masks(g);
  const Mask all = (Mask{1} << n) - 1;
  for (int k = 1; k <= n; ++k) {
    bool found = false;
    for_each_subset(n, k, [&](Mask m) {
      Mask dominated = m;
      for (Mask r = m; r; r &= r - 1) dominated |= nb[static_cast<std::size_t>(std::countr_zero(r))];
      if (dominated != all) return true;
      Mask reach = m & (~m + 1), frontier = reach;
      while (frontier) {
        Mask next = 0;
        for (Mask r = frontier; r; r &= r - 1) next |= nb[static_cast<std::size_t>(std::countr_zero(r))] & m;
        frontier = next & ~reach;
        reach |= next;
      }
      found = reach == m;
      return !found;
    });
    if (found) return n - k;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Families.

inline Graph path_graph(int n) {
  GraphBuilder b(n);
  for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
  return b.build();
}

inline Graph cycle_graph(int n) {
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
  return b.build();
}

inline Graph complete_graph(int n) {
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) b.add_edge(i, j);
  return b.build();
}

inline Graph star_graph(int leaves) {
  GraphBuilder b(leaves + 1);
  for (int i = 1; i <= leaves; ++i) b.add_edge(0, i);
  return b.build();
}

/// Centre 0 with one pendant path per entry of `legs` (entry = path length).
inline Graph spider_graph(const std::vector<int>& legs) {
  GraphBuilder b(1);
  for (int len : legs) {
    Vertex prev = 0;
    for (int i = 0; i < len; ++i) {
      const Vertex v = b.add_vertex();
      b.add_edge(prev, v);
      prev = v;
    }
  }
  return b.build();
}

/// Hosts 0 and 1 joined by internally disjoint paths with the given numbers
/// of inner vertices.
inline Graph theta_graph(const std::vector<int>& inner) {
  GraphBuilder b(2);
  for (int len : inner) {
    Vertex prev = 0;
    for (int i = 0; i < len; ++i) {
      const Vertex v = b.add_vertex();
      b.add_edge(prev, v);
      prev = v;
    }
    b.add_edge(prev, 1);
  }
  return b.build();
}

/// K4 with `inner[e]` subdivision vertices on its e-th edge (lexicographic).
inline Graph subdivided_k4(const std::vector<int>& inner) {
  GraphBuilder b(4);
  int e = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j, ++e) {
      Vertex prev = i;
      for (int s = 0; s < inner[static_cast<std::size_t>(e)]; ++s) {
        const Vertex v = b.add_vertex();
        b.add_edge(prev, v);
        prev = v;
      }
      b.add_edge(prev, j);
    }
  return b.build();
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

/// A graph whose first `u` vertices form a cluster modulator: the rest is a
/// union of cliques drawn from a few signature templates, so patterns repeat
/// and twin classes appear.
struct PlantedCluster {
  Graph graph;
  std::vector<Vertex> modulator;
};

inline PlantedCluster planted_cluster_graph(std::mt19937_64& rng, int max_n) {
  std::uniform_int_distribution<int> u_size(1, 2);
  const int u = u_size(rng);
  std::vector<std::vector<std::vector<int>>> templates;  // template -> member -> U-neighbours
  std::uniform_int_distribution<int> tcount(1, 3), size(1, 3), bit(0, 1);
  const int nt = tcount(rng);
  for (int t = 0; t < nt; ++t) {
    std::vector<std::vector<int>> members;
    const int s = size(rng);
    for (int i = 0; i < s; ++i) {
      std::vector<int> sig;
      for (int x = 0; x < u; ++x)
        if (bit(rng)) sig.push_back(x);
      members.push_back(sig);
    }
    if (bit(rng) && !members.empty()) members.push_back(members.front());  // plant a true-twin pair
    templates.push_back(members);
  }
  GraphBuilder b(u);
  std::bernoulli_distribution u_edge(0.5);
  for (int x = 0; x < u; ++x)
    for (int y = x + 1; y < u; ++y)
      if (u_edge(rng)) b.add_edge(x, y);
  std::uniform_int_distribution<std::size_t> pick(0, templates.size() - 1);
  for (int guard = 0; guard < 64; ++guard) {
    const auto& t = templates[pick(rng)];
    if (b.order() + static_cast<int>(t.size()) > max_n) break;
    std::vector<Vertex> clique;
    for (const auto& sig : t) {
      const Vertex v = b.add_vertex();
      clique.push_back(v);
      for (int x : sig) b.add_edge(v, x);
    }
    b.add_clique(clique);
  }
  std::vector<Vertex> mod(static_cast<std::size_t>(u));
  for (int x = 0; x < u; ++x) mod[static_cast<std::size_t>(x)] = x;
  return {b.build(), mod};
}

/// r copies of K2 whose first endpoint sees the single modulator vertex 0.
inline Graph trivial_pattern_fixture(int r) {
  GraphBuilder b(1 + 2 * r);
  for (int i = 0; i < r; ++i) {
    b.add_edge(1 + 2 * i, 2 + 2 * i);
    b.add_edge(0, 1 + 2 * i);
  }
  return b.build();
}

/// r copies of K2 with both endpoints adjacent to modulator vertex 0.
inline Graph nontrivial_pattern_fixture(int r) {
  GraphBuilder b(1 + 2 * r);
  for (int i = 0; i < r; ++i) {
    b.add_edge(1 + 2 * i, 2 + 2 * i);
    b.add_edge(0, 1 + 2 * i);
    b.add_edge(0, 2 + 2 * i);
  }
  return b.build();
}

/// r copies of K4 holding two true-twin pairs: one pair sees vertex 0, the
/// other does not.
inline Graph double_pair_fixture(int r) {
  GraphBuilder b(1 + 4 * r);
  for (int i = 0; i < r; ++i) {
    const Vertex base = 1 + 4 * i;
    b.add_clique(std::vector<Vertex>{base, base + 1, base + 2, base + 3});
    b.add_edge(0, base);
    b.add_edge(0, base + 1);
  }
  return b.build();
}

/// Every minimum LDS of the path P_n (n <= 64) with the path check inlined.
inline std::vector<CodeSet> all_minimum_path_solutions(int n, int size) {
  std::vector<CodeSet> out;
  for_each_subset(n, size, [&](Mask m) {
    Mask prev_code = ~Mask{0}, prev2_code = ~Mask{0};
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      Mask code = ~Mask{0};
      if (!(m >> v & 1)) {
        code = 0;
        if (v > 0 && (m >> (v - 1) & 1)) code |= Mask{1} << (v - 1);
        if (v + 1 < n && (m >> (v + 1) & 1)) code |= Mask{1} << (v + 1);
        // Only vertices at distance <= 2 can share a neighbour on a path.
        ok = code != 0 && code != prev2_code;
      }
      prev2_code = prev_code;
      prev_code = code;
    }
    if (ok) out.emplace_back(mask_vertices(m));
    return true;
  });
  return out;
}

/// Random 3-uniform hypergraph as sorted triples.
inline std::vector<std::array<Vertex, 3>> random_triples(std::mt19937_64& rng, int n, int m) {
  std::set<std::array<Vertex, 3>> edges;
  std::uniform_int_distribution<Vertex> pick(0, n - 1);
  for (int guard = 0; static_cast<int>(edges.size()) < m && guard < 1000; ++guard) {
    std::array<Vertex, 3> e{pick(rng), pick(rng), pick(rng)};
    std::sort(e.begin(), e.end());
    if (e[0] != e[1] && e[1] != e[2]) edges.insert(e);
  }
  return {edges.begin(), edges.end()};
}

}  // namespace ldsk::testing
