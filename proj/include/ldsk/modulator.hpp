#pragma once

#include <string>
#include <vector>

#include "ldsk/error.hpp"
#include "ldsk/graph.hpp"

namespace ldsk {

enum class ModulatorKind { kCluster, kClique };

inline const char* to_string(ModulatorKind kind) { return kind == ModulatorKind::kCluster ? "cluster" : "clique"; }

/// U such that G - U is a cluster graph (kCluster) or complete (kClique).
struct Modulator {
  ModulatorKind kind = ModulatorKind::kCluster;
  std::vector<Vertex> vertices;  // sorted

  std::size_t size() const noexcept { return vertices.size(); }
  bool contains(Vertex v) const { return std::binary_search(vertices.begin(), vertices.end(), v); }
};

/// True iff G - U lies in the class named by U.kind.
inline bool verify_modulator(const Graph& g, const Modulator& u) {
  for (Vertex v : u.vertices)
    if (!g.contains(v)) return false;
  const Graph rest = delete_vertices(g, u.vertices).graph;
  if (u.kind == ModulatorKind::kCluster) return is_cluster_graph(rest);
  return rest.size() == rest.order() * (rest.order() - 1) / 2;
}

/// Wraps a user-supplied vertex set; throws InvalidArgument unless it is a
/// valid modulator of the requested kind.
inline Modulator make_modulator(const Graph& g, ModulatorKind kind, std::vector<Vertex> vertices) {
  Modulator u{kind, normalized(std::move(vertices))};
  for (Vertex v : u.vertices)
    if (!g.contains(v)) throw InvalidArgument("modulator vertex " + std::to_string(v) + " not in graph");
  if (!verify_modulator(g, u))
    throw InvalidArgument(std::string("vertex set is not a ") + to_string(kind) + " modulator");
  return u;
}

/// Removes all three vertices of every induced P3 (lexicographically first
/// one each round) until the rest is P3-free. At least one vertex of each
/// removed P3 lies in any cluster modulator, so |U| <= 3 OPT.
inline Modulator cluster_modulator_3approx(const Graph& g) {
  std::vector<Vertex> removed;
  std::vector<Vertex> alive = all_vertices(g);
  for (;;) {
    auto sub = induced_subgraph(g, alive);
    auto p3 = find_induced_p3(sub.graph);
    if (!p3) break;
    auto [a, b, c] = *p3;
    for (Vertex x : {a, b, c}) removed.push_back(sub.to_parent[static_cast<std::size_t>(x)]);
    std::vector<Vertex> next;
    for (Vertex v : alive)
      if (std::find(removed.begin(), removed.end(), v) == removed.end()) next.push_back(v);
    alive = std::move(next);
  }
  return {ModulatorKind::kCluster, normalized(std::move(removed))};
}

/// Both endpoints of a greedy maximal matching of the complement. Every
/// complement edge needs an endpoint in any clique modulator, so |U| <= 2 OPT.
inline Modulator clique_modulator_2approx(const Graph& g) {
  std::vector<char> matched(static_cast<std::size_t>(g.order()), 0);
  std::vector<Vertex> u;
  for (Vertex a = 0; a < g.order(); ++a) {
    if (matched[static_cast<std::size_t>(a)]) continue;
    for (Vertex b = a + 1; b < g.order(); ++b)
      if (!matched[static_cast<std::size_t>(b)] && !g.adjacent(a, b)) {
        matched[static_cast<std::size_t>(a)] = matched[static_cast<std::size_t>(b)] = 1;
        u.push_back(a);
        u.push_back(b);
        break;
      }
  }
  return {ModulatorKind::kClique, normalized(std::move(u))};
}

}  // namespace ldsk
