#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "ldsk/error.hpp"

namespace ldsk {

using Vertex = int;
inline constexpr Vertex kNoVertex = -1;

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on the vertex ids 0..n-1.
///
/// Adjacency lists are sorted and duplicate free. A Graph never changes after
/// it is built; use GraphBuilder (or the free functions below) to derive new
/// graphs.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(int n) : adjacency_(static_cast<std::size_t>(n)) {}

  /// Throws InvalidArgument on an out-of-range id or a self-loop.
  static Graph from_edges(int n, std::span<const Edge> edges);

  int order() const noexcept { return static_cast<int>(adjacency_.size()); }
  int size() const noexcept { return edge_count_; }

  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  bool adjacent(Vertex u, Vertex v) const {
    const auto& nu = neighbors(u);
    return std::binary_search(nu.begin(), nu.end(), v);
  }
  bool contains(Vertex v) const noexcept { return v >= 0 && v < order(); }

  /// All edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (Vertex u = 0; u < order(); ++u)
      for (Vertex v : neighbors(u))
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;
  std::vector<std::vector<Vertex>> adjacency_;
  int edge_count_ = 0;
};

/// Accumulates edges, then produces a canonical Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n = 0) : adjacency_(static_cast<std::size_t>(n)) {}

  int order() const noexcept { return static_cast<int>(adjacency_.size()); }

  Vertex add_vertex() {
    adjacency_.emplace_back();
    return order() - 1;
  }

  /// Appends `count` vertices and returns the id of the first.
  Vertex add_vertices(int count) {
    const Vertex first = order();
    adjacency_.resize(adjacency_.size() + static_cast<std::size_t>(count));
    return first;
  }

  GraphBuilder& add_edge(Vertex u, Vertex v) {
    if (u < 0 || v < 0 || u >= order() || v >= order())
      throw InvalidArgument("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") out of range for n = " +
                            std::to_string(order()));
    if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
    adjacency_[static_cast<std::size_t>(u)].push_back(v);
    adjacency_[static_cast<std::size_t>(v)].push_back(u);
    return *this;
  }

  /// Makes `vertices` pairwise adjacent.
  GraphBuilder& add_clique(std::span<const Vertex> vertices) {
    for (std::size_t i = 0; i < vertices.size(); ++i)
      for (std::size_t j = i + 1; j < vertices.size(); ++j) add_edge(vertices[i], vertices[j]);
    return *this;
  }

  GraphBuilder& add_path(std::span<const Vertex> vertices) {
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i) add_edge(vertices[i], vertices[i + 1]);
    return *this;
  }

  Graph build() const {
    Graph g;
    g.adjacency_ = adjacency_;
    int twice = 0;
    for (auto& list : g.adjacency_) {
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
      twice += static_cast<int>(list.size());
    }
    g.edge_count_ = twice / 2;
    return g;
  }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
};

inline Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  if (n < 0) throw InvalidArgument("negative vertex count");
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return b.build();
}

// ---------------------------------------------------------------------------
// Small vertex-set helpers shared by every module.

/// Sorts and deduplicates in place; returns the argument for chaining.
inline std::vector<Vertex> normalized(std::vector<Vertex> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

inline std::vector<Vertex> all_vertices(const Graph& g) {
  std::vector<Vertex> vs(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) vs[static_cast<std::size_t>(v)] = v;
  return vs;
}

inline std::vector<Vertex> closed_neighborhood(const Graph& g, Vertex v) {
  auto n = g.neighbors(v);
  n.insert(std::lower_bound(n.begin(), n.end(), v), v);
  return n;
}

/// Neighbors of v inside the sorted set `within`.
inline std::vector<Vertex> neighbors_in(const Graph& g, Vertex v, std::span<const Vertex> within) {
  std::vector<Vertex> out;
  std::set_intersection(g.neighbors(v).begin(), g.neighbors(v).end(), within.begin(), within.end(),
                        std::back_inserter(out));
  return out;
}

// ---------------------------------------------------------------------------
// Text format: "n m" header, m lines "u v", '#' comment lines.

namespace detail {

inline std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline long long parse_integer(std::string_view token, std::size_t line) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError(line, "expected an integer, got '" + std::string(token) + "'");
  return value;
}

/// Non-blank, non-comment lines with their 1-based line numbers.
inline std::vector<std::pair<std::size_t, std::vector<std::string_view>>> content_lines(std::string_view text) {
  std::vector<std::pair<std::size_t, std::vector<std::string_view>>> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view line = text.substr(pos, end - pos);
    auto tokens = split_tokens(line);
    if (!tokens.empty() && tokens.front().front() != '#') out.emplace_back(number, std::move(tokens));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

}  // namespace detail

/// Parses the edge-list format. Duplicate edges collapse; errors name the line.
inline Graph parse_graph(std::string_view text) {
  auto lines = detail::content_lines(text);
  if (lines.empty()) throw ParseError(1, "missing 'n m' header");
  const auto& [header_line, header] = lines.front();
  if (header.size() != 2) throw ParseError(header_line, "header must be 'n m'");
  const long long n = detail::parse_integer(header[0], header_line);
  const long long m = detail::parse_integer(header[1], header_line);
  if (n < 0 || m < 0) throw ParseError(header_line, "negative count in header");
  if (static_cast<long long>(lines.size()) - 1 != m)
    throw ParseError(header_line, "header announces " + std::to_string(m) + " edges, found " +
                                      std::to_string(lines.size() - 1));
  GraphBuilder b(static_cast<int>(n));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [number, tokens] = lines[i];
    if (tokens.size() != 2) throw ParseError(number, "edge line must be 'u v'");
    const long long u = detail::parse_integer(tokens[0], number);
    const long long v = detail::parse_integer(tokens[1], number);
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError(number, "vertex id out of range [0, " + std::to_string(n) + ")");
    if (u == v) throw ParseError(number, "self-loop at vertex " + std::to_string(u));
    b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return b.build();
}

/// Canonical serialization: header with the deduplicated edge count, then
/// sorted "u v" lines with u < v.
inline std::string serialize_graph(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

inline Graph read_graph(const std::string& path) { return parse_graph(detail::read_file(path)); }
inline void write_graph(const std::string& path, const Graph& g) { detail::write_file(path, serialize_graph(g)); }

/// "k" followed by k vertex ids; used for solutions, modulators and hosts.
inline std::vector<Vertex> parse_vertex_list(std::string_view text) {
  auto lines = detail::content_lines(text);
  if (lines.empty()) throw ParseError(1, "missing count line");
  const auto& [count_line, count_tokens] = lines.front();
  if (count_tokens.size() != 1) throw ParseError(count_line, "first line must hold the vertex count");
  const long long k = detail::parse_integer(count_tokens[0], count_line);
  if (k < 0) throw ParseError(count_line, "negative count");
  std::vector<Vertex> out;
  for (std::size_t i = 1; i < lines.size(); ++i)
    for (auto token : lines[i].second) {
      const long long v = detail::parse_integer(token, lines[i].first);
      if (v < 0) throw ParseError(lines[i].first, "negative vertex id");
      out.push_back(static_cast<Vertex>(v));
    }
  if (static_cast<long long>(out.size()) != k)
    throw ParseError(count_line, "announced " + std::to_string(k) + " ids, found " + std::to_string(out.size()));
  return out;
}

inline std::string serialize_vertex_list(std::span<const Vertex> vs) {
  std::string out = std::to_string(vs.size()) + "\n";
  for (Vertex v : vs) out += std::to_string(v) + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Structural primitives.

inline Graph complement(const Graph& g) {
  GraphBuilder b(g.order());
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) b.add_edge(u, v);
  return b.build();
}

/// Components as sorted vertex lists, ordered by their smallest vertex.
inline std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<Vertex> comp{s};
    seen[static_cast<std::size_t>(s)] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head)
      for (Vertex w : g.neighbors(comp[head]))
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

inline bool is_connected(const Graph& g) { return g.order() <= 1 || connected_components(g).size() == 1; }

inline bool is_clique(const Graph& g, std::span<const Vertex> vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!g.adjacent(vs[i], vs[j])) return false;
  return true;
}

inline bool is_independent(const Graph& g, std::span<const Vertex> vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (g.adjacent(vs[i], vs[j])) return false;
  return true;
}

/// Subgraph induced by `keep`, together with the new-id -> old-id table.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_parent;
};

inline Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<Vertex> kept = normalized({keep.begin(), keep.end()});
  std::vector<Vertex> to_child(static_cast<std::size_t>(g.order()), kNoVertex);
  for (std::size_t i = 0; i < kept.size(); ++i) {
    if (!g.contains(kept[i])) throw InvalidArgument("vertex " + std::to_string(kept[i]) + " not in graph");
    to_child[static_cast<std::size_t>(kept[i])] = static_cast<Vertex>(i);
  }
  GraphBuilder b(static_cast<int>(kept.size()));
  for (auto [u, v] : g.edges()) {
    const Vertex cu = to_child[static_cast<std::size_t>(u)], cv = to_child[static_cast<std::size_t>(v)];
    if (cu != kNoVertex && cv != kNoVertex) b.add_edge(cu, cv);
  }
  return {b.build(), std::move(kept)};
}

/// Result of deleting vertices: ids are compacted, `to_child` maps every old
/// id to its new id (kNoVertex when deleted).
struct Deletion {
  Graph graph;
  std::vector<Vertex> to_child;
  std::vector<Vertex> to_parent;
};

inline Deletion delete_vertices(const Graph& g, std::span<const Vertex> removed) {
  std::vector<char> drop(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : removed) {
    if (!g.contains(v)) throw InvalidArgument("vertex " + std::to_string(v) + " not in graph");
    drop[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!drop[static_cast<std::size_t>(v)]) keep.push_back(v);
  auto sub = induced_subgraph(g, keep);
  std::vector<Vertex> to_child(static_cast<std::size_t>(g.order()), kNoVertex);
  for (std::size_t i = 0; i < sub.to_parent.size(); ++i)
    to_child[static_cast<std::size_t>(sub.to_parent[i])] = static_cast<Vertex>(i);
  return {std::move(sub.graph), std::move(to_child), std::move(sub.to_parent)};
}

// ---------------------------------------------------------------------------
// Twins.

enum class TwinKind { kNone, kFalse, kTrue };

struct TwinClass {
  TwinKind kind = TwinKind::kNone;
  std::vector<Vertex> members;  // sorted

  friend bool operator==(const TwinClass&, const TwinClass&) = default;
};

/// Partition of a vertex subset into maximal classes of mutual twins.
struct TwinClasses {
  std::vector<TwinClass> classes;  // ordered by smallest member

  std::size_t largest() const {
    std::size_t best = 0;
    for (const auto& c : classes) best = std::max(best, c.members.size());
    return best;
  }
};

/// Twinship is decided in the whole graph; only vertices of `restrict`
/// (default: all) are partitioned. Singletons get kind kNone.
inline TwinClasses twin_classes(const Graph& g, std::optional<std::span<const Vertex>> restrict = std::nullopt) {
  std::vector<Vertex> domain = restrict ? normalized({restrict->begin(), restrict->end()}) : all_vertices(g);
  for (Vertex v : domain)
    if (!g.contains(v)) throw InvalidArgument("vertex " + std::to_string(v) + " not in graph");

  // A vertex cannot have both a false twin and a true twin, so grouping by
  // open neighborhood first and by closed neighborhood second is a partition.
  std::map<std::vector<Vertex>, std::vector<Vertex>> by_open;
  for (Vertex v : domain) by_open[g.neighbors(v)].push_back(v);

  TwinClasses out;
  std::map<std::vector<Vertex>, std::vector<Vertex>> by_closed;
  for (auto& [key, members] : by_open) {
    if (members.size() >= 2)
      out.classes.push_back({TwinKind::kFalse, members});
    else
      by_closed[closed_neighborhood(g, members.front())].push_back(members.front());
  }
  for (auto& [key, members] : by_closed)
    out.classes.push_back({members.size() >= 2 ? TwinKind::kTrue : TwinKind::kNone, members});
  std::sort(out.classes.begin(), out.classes.end(),
            [](const TwinClass& a, const TwinClass& b) { return a.members.front() < b.members.front(); });
  return out;
}

// ---------------------------------------------------------------------------

/// Lexicographically smallest (a, b, c) with ab, bc in E and ac not in E.
inline std::optional<std::tuple<Vertex, Vertex, Vertex>> find_induced_p3(const Graph& g) {
  for (Vertex a = 0; a < g.order(); ++a)
    for (Vertex b : g.neighbors(a))
      for (Vertex c : g.neighbors(b))
        if (c != a && !g.adjacent(a, c)) return std::tuple{a, b, c};
  return std::nullopt;
}

inline bool is_cluster_graph(const Graph& g) { return !find_induced_p3(g).has_value(); }

}  // namespace ldsk
