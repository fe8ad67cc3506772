#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ldsk/error.hpp"
#include "ldsk/graph.hpp"

namespace ldsk {

/// A 3-uniform hypergraph; hyperedges are stored as sorted, distinct triples.
struct HypergraphInstance {
  int n = 0;
  std::vector<std::array<Vertex, 3>> edges;  // sorted, duplicate-free
};

inline HypergraphInstance make_hypergraph(int n, std::vector<std::array<Vertex, 3>> edges) {
  if (n < 0) throw InvalidArgument("negative vertex count");
  for (auto& e : edges) {
    std::sort(e.begin(), e.end());
    for (Vertex v : e)
      if (v < 0 || v >= n) throw InvalidArgument("hyperedge vertex " + std::to_string(v) + " out of range");
    if (e[0] == e[1] || e[1] == e[2]) throw InvalidArgument("hyperedge needs three distinct vertices");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return {n, std::move(edges)};
}

inline HypergraphInstance parse_hypergraph(std::string_view text) {
  const auto lines = detail::content_lines(text);
  if (lines.empty()) throw ParseError(1, "missing header \"n m\"");
  const auto& [hline, head] = lines.front();
  if (head.size() != 2) throw ParseError(hline, "header must be \"n m\"");
  const long long n = detail::parse_integer(head[0], hline), m = detail::parse_integer(head[1], hline);
  if (n < 0 || m < 0) throw ParseError(hline, "negative count");
  if (static_cast<long long>(lines.size()) - 1 != m)
    throw ParseError(hline, "header announces " + std::to_string(m) + " hyperedges, found " +
                                std::to_string(lines.size() - 1));
  std::vector<std::array<Vertex, 3>> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [line, tok] = lines[i];
    if (tok.size() != 3) throw ParseError(line, "hyperedge line needs three ids");
    std::array<Vertex, 3> e{};
    for (std::size_t j = 0; j < 3; ++j) {
      const long long v = detail::parse_integer(tok[j], line);
      if (v < 0 || v >= n) throw ParseError(line, "vertex id " + std::to_string(v) + " out of range");
      e[j] = static_cast<Vertex>(v);
    }
    if (e[0] == e[1] || e[1] == e[2] || e[0] == e[2]) throw ParseError(line, "hyperedge repeats a vertex");
    edges.push_back(e);
  }
  return make_hypergraph(static_cast<int>(n), std::move(edges));
}

inline std::string serialize_hypergraph(const HypergraphInstance& h) {
  std::string out = std::to_string(h.n) + " " + std::to_string(h.edges.size()) + "\n";
  for (const auto& e : h.edges)
    out += std::to_string(e[0]) + " " + std::to_string(e[1]) + " " + std::to_string(e[2]) + "\n";
  return out;
}

inline HypergraphInstance read_hypergraph(const std::string& path) { return parse_hypergraph(detail::read_file(path)); }

/// Colors: 0 = alpha, 1 = beta.
using Coloring = std::vector<int>;

inline bool is_proper_bicoloring(const HypergraphInstance& h, const Coloring& phi) {
  if (static_cast<int>(phi.size()) != h.n) return false;
  for (int c : phi)
    if (c != 0 && c != 1) return false;
  for (const auto& e : h.edges)
    if (phi[static_cast<std::size_t>(e[0])] == phi[static_cast<std::size_t>(e[1])] &&
        phi[static_cast<std::size_t>(e[1])] == phi[static_cast<std::size_t>(e[2])])
      return false;
  return true;
}

inline constexpr int kBicoloringCap = 20;

/// First proper coloring in mask order (bit v set means v is colored beta).
inline std::optional<Coloring> solve_bicoloring_exact(const HypergraphInstance& h) {
  if (h.n > kBicoloringCap)
    throw RefusalError("bicoloring oracle refuses n = " + std::to_string(h.n) + " above the cap of " +
                       std::to_string(kBicoloringCap));
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << h.n); ++mask) {
    bool ok = true;
    for (const auto& e : h.edges) {
      const std::uint32_t bits = ((mask >> e[0]) & 1u) + ((mask >> e[1]) & 1u) + ((mask >> e[2]) & 1u);
      if (bits == 0 || bits == 3) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    Coloring phi(static_cast<std::size_t>(h.n));
    for (int v = 0; v < h.n; ++v) phi[static_cast<std::size_t>(v)] = static_cast<int>((mask >> v) & 1u);
    return phi;
  }
  return std::nullopt;
}

inline constexpr int kCliqueOracleCap = 20;

namespace detail {

inline bool extend_clique(const Graph& g, int k, std::vector<Vertex>& current, Vertex next) {
  if (static_cast<int>(current.size()) == k) return true;
  for (Vertex v = next; v < g.order(); ++v) {
    if (static_cast<int>(current.size()) + (g.order() - v) < k) return false;
    bool adjacent_to_all = true;
    for (Vertex u : current)
      if (!g.adjacent(u, v)) {
        adjacent_to_all = false;
        break;
      }
    if (!adjacent_to_all) continue;
    current.push_back(v);
    if (extend_clique(g, k, current, v + 1)) return true;
    current.pop_back();
  }
  return false;
}

}  // namespace detail

/// Lexicographically first k-clique of H, if any.
inline std::optional<std::vector<Vertex>> solve_clique_exact(const Graph& h, int k) {
  if (h.order() > kCliqueOracleCap)
    throw RefusalError("clique oracle refuses n = " + std::to_string(h.order()) + " above the cap of " +
                       std::to_string(kCliqueOracleCap));
  if (k < 0) throw InvalidArgument("clique size must be non-negative");
  std::vector<Vertex> current;
  if (detail::extend_clique(h, k, current, 0)) return current;
  return std::nullopt;
}

}  // namespace ldsk
