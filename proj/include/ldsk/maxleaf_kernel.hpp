#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ldsk/cluster_kernel.hpp"
#include "ldsk/error.hpp"
#include "ldsk/graph.hpp"
#include "ldsk/lds.hpp"
#include "ldsk/max_leaf.hpp"
#include "ldsk/trace.hpp"

namespace ldsk {

/// A maximal chain of degree-2 non-host vertices. The host endpoints are not
/// members; they coincide when the chain closes a cycle through one host.
struct SubdivisionPath {
  std::vector<Vertex> vertices;
  Vertex first_end = kNoVertex;  // host neighbor of vertices.front()
  Vertex last_end = kNoVertex;   // host neighbor of vertices.back()

  int size() const noexcept { return static_cast<int>(vertices.size()); }
};

struct HostDecomposition {
  std::vector<Vertex> host;  // sorted
  std::vector<SubdivisionPath> paths;
};

/// Splits G into host vertices and the subdivision paths between them.
/// Default host: every vertex of degree != 2, or vertex 0 when G is a cycle.
inline HostDecomposition host_decomposition(const Graph& g, std::optional<std::vector<Vertex>> host = std::nullopt) {
  if (!is_connected(g)) throw InvalidArgument("host decomposition needs a connected graph");
  HostDecomposition out;
  std::vector<char> is_host(static_cast<std::size_t>(g.order()), 0);
  if (host) {
    out.host = normalized(*host);
    for (Vertex v : out.host) {
      if (!g.contains(v)) throw InvalidArgument("host vertex " + std::to_string(v) + " not in graph");
      is_host[static_cast<std::size_t>(v)] = 1;
    }
    for (Vertex v = 0; v < g.order(); ++v)
      if (!is_host[static_cast<std::size_t>(v)] && g.degree(v) != 2)
        throw InvalidArgument("vertex " + std::to_string(v) + " outside the host has degree " +
                              std::to_string(g.degree(v)) + ", expected 2");
    if (out.host.empty() && g.order() > 0) throw InvalidArgument("host must not be empty");
  } else {
    for (Vertex v = 0; v < g.order(); ++v)
      if (g.degree(v) != 2) out.host.push_back(v);
    if (out.host.empty() && g.order() > 0) out.host.push_back(0);
    for (Vertex v : out.host) is_host[static_cast<std::size_t>(v)] = 1;
  }

  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  for (Vertex h : out.host)
    for (Vertex w : g.neighbors(h)) {
      if (is_host[static_cast<std::size_t>(w)] || seen[static_cast<std::size_t>(w)]) continue;
      SubdivisionPath p;
      p.first_end = h;
      Vertex prev = h, cur = w;
      while (!is_host[static_cast<std::size_t>(cur)]) {
        seen[static_cast<std::size_t>(cur)] = 1;
        p.vertices.push_back(cur);
        const auto& nb = g.neighbors(cur);
        const Vertex next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
      }
      p.last_end = cur;
      out.paths.push_back(std::move(p));
    }
  return out;
}

/// Section sizes of a path: [5 + ceil(rho/2), 5, ..., 5, 5 + floor(rho/2)].
struct FiveSectioning {
  std::vector<int> sizes;

  int t() const noexcept { return static_cast<int>(sizes.size()); }
  int inner_count() const noexcept { return t() - 2; }
  int offset(int section) const {
    int o = 0;
    for (int i = 0; i < section; ++i) o += sizes[static_cast<std::size_t>(i)];
    return o;
  }
  int total() const { return offset(t()); }
};

inline FiveSectioning five_sectioning(int length) {
  if (length < 15) throw InvalidArgument("5-sectioning needs a path of at least 15 vertices, got " + std::to_string(length));
  const int q = length / 5, rho = length % 5;
  FiveSectioning f;
  f.sizes.push_back(5 + (rho + 1) / 2);
  for (int i = 0; i < q - 2; ++i) f.sizes.push_back(5);
  f.sizes.push_back(5 + rho / 2);
  return f;
}

inline constexpr int kLongPathThreshold = 20;
inline constexpr int kReducedPathLimit = 19;

// ---------------------------------------------------------------------------
// Normalization of a solution on one long path.

struct PathNormalization {
  CodeSet solution;
  int a = 0, b = 0;  // 1-based positions held by every inner section
  std::string rule;  // which branch of the case analysis produced it
  bool fallback = false;
};

namespace detail {

struct PathView {
  const std::vector<Vertex>& path;
  const FiveSectioning& sec;

  Vertex at(int section, int position) const {  // 1-based position
    return path[static_cast<std::size_t>(sec.offset(section) + position - 1)];
  }
  // f(k): k-th vertex of the first section counted so that f(5) is its last.
  Vertex f(int k) const { return path[static_cast<std::size_t>(sec.sizes.front() - 1 - (5 - k))]; }
  // t(k): k-th vertex of the last section.
  Vertex t(int k) const { return path[static_cast<std::size_t>(sec.offset(sec.t() - 1) + k - 1)]; }

  std::vector<Vertex> inner() const {
    return {path.begin() + sec.sizes.front(), path.begin() + sec.offset(sec.t() - 1)};
  }
};

struct PathPlan {
  int a, b;
  std::vector<Vertex> extra;
  const char* rule;
};

inline PathPlan plan_path_case(const PathView& v, const CodeSet& s) {
  auto in = [&](Vertex x) { return s.contains(x); };
  const bool f2 = in(v.f(2)), f3 = in(v.f(3)), f4 = in(v.f(4)), f5 = in(v.f(5));
  const bool t1 = in(v.t(1)), t2 = in(v.t(2)), t3 = in(v.t(3)), t4 = in(v.t(4));

  if (f5) {
    if (t1 || t2) return {2, 5, {}, "1"};
    if (f3 || f4) return {3, 5, {}, "2.1"};
    return {3, 5, {v.f(3)}, "2.2"};
  }
  if (f4) {
    if (t1) return {1, 4, {}, f2 || f3 ? "3" : "5"};
    if (t2) {
      if (f2 || f3) return t3 || t4 ? PathPlan{2, 4, {}, "4.1"} : PathPlan{2, 4, {v.t(1)}, "4.2"};
      return t3 || t4 ? PathPlan{2, 4, {v.f(5)}, "6.1"} : PathPlan{1, 4, {v.t(1)}, "6.2"};
    }
    return {1, 4, {v.t(1)}, "t"};
  }
  if (t1) return t2 || t3 ? PathPlan{1, 3, {}, "7"} : PathPlan{1, 3, {v.t(3)}, "7*"};
  if (t2) return {2, 5, {v.f(5)}, "8"};
  return {3, 5, {v.f(5)}, "9"};
}

inline CodeSet apply_plan(const PathView& v, const CodeSet& base, int a, int b, std::span<const Vertex> extra) {
  std::vector<Vertex> vs = base.vertices();
  vs.insert(vs.end(), extra.begin(), extra.end());
  for (int i = 1; i + 1 < v.sec.t(); ++i) {
    vs.push_back(v.at(i, a));
    vs.push_back(v.at(i, b));
  }
  return CodeSet(std::move(vs));
}

}  // namespace detail

/// Rewrites S so that every inner 5-section of `path` holds the same two
/// positions, without growing S. The case analysis runs first; if its output
/// fails verification, every position pair with at most one extra border
/// vertex is tried before giving up.
inline PathNormalization normalize_path_solution(const Graph& g, const std::vector<Vertex>& path,
                                                 const FiveSectioning& sec, const CodeSet& s) {
  if (static_cast<int>(path.size()) < 15) throw InvalidArgument("path normalization needs at least 15 vertices");
  if (sec.total() != static_cast<int>(path.size())) throw InvalidArgument("sectioning does not match path length");
  detail::require_valid(g, s, "input set");

  const detail::PathView view{path, sec};
  const std::vector<Vertex> inner = normalized(view.inner());
  std::vector<Vertex> kept;
  for (Vertex x : s)
    if (!std::binary_search(inner.begin(), inner.end(), x)) kept.push_back(x);
  const CodeSet base(std::move(kept));

  auto acceptable = [&](const CodeSet& c) { return c.size() <= s.size() && is_locating_dominating(g, c).ok(); };

  const detail::PathPlan plan = detail::plan_path_case(view, s);
  CodeSet out = detail::apply_plan(view, base, plan.a, plan.b, plan.extra);
  if (acceptable(out)) return {std::move(out), plan.a, plan.b, plan.rule, false};

  std::vector<std::vector<Vertex>> extras{{}};
  for (int k = 2; k <= 5; ++k) extras.push_back({view.f(k)});
  for (int k = 1; k <= 4; ++k) extras.push_back({view.t(k)});
  for (const auto& extra : extras)
    for (int a = 1; a <= 5; ++a)
      for (int b = a + 1; b <= 5; ++b) {
        CodeSet c = detail::apply_plan(view, base, a, b, extra);
        if (acceptable(c)) return {std::move(c), a, b, plan.rule, true};
      }
  throw InternalError("path normalization failed (case " + std::string(plan.rule) + ")");
}

// ---------------------------------------------------------------------------
// Rule 4 and the driver.

namespace detail {

struct ReducedPath {
  std::vector<Vertex> path;  // original ids
  FiveSectioning sec;
};

struct MaxLeafAssembly {
  Graph graph;
  std::vector<Vertex> kernel_to_original;
  std::vector<std::array<Vertex, 5>> replacements;  // parallel to the reduced paths
};

/// Kept original vertices first (ascending, compacted), then five fresh
/// vertices per reduced path.
inline MaxLeafAssembly assemble_maxleaf_kernel(const Graph& original, const std::vector<ReducedPath>& reduced) {
  std::vector<char> drop(static_cast<std::size_t>(original.order()), 0);
  for (const auto& r : reduced) {
    const int lo = r.sec.sizes.front(), hi = r.sec.offset(r.sec.t() - 1);
    for (int i = lo; i < hi; ++i) drop[static_cast<std::size_t>(r.path[static_cast<std::size_t>(i)])] = 1;
  }
  MaxLeafAssembly out;
  std::vector<Vertex> to_kernel(static_cast<std::size_t>(original.order()), kNoVertex);
  for (Vertex v = 0; v < original.order(); ++v)
    if (!drop[static_cast<std::size_t>(v)]) {
      to_kernel[static_cast<std::size_t>(v)] = static_cast<Vertex>(out.kernel_to_original.size());
      out.kernel_to_original.push_back(v);
    }
  GraphBuilder b(static_cast<int>(out.kernel_to_original.size()));
  for (auto [u, v] : original.edges()) {
    const Vertex ku = to_kernel[static_cast<std::size_t>(u)], kv = to_kernel[static_cast<std::size_t>(v)];
    if (ku != kNoVertex && kv != kNoVertex) b.add_edge(ku, kv);
  }
  for (const auto& r : reduced) {
    std::array<Vertex, 5> x{};
    for (auto& xi : x) {
      xi = b.add_vertex();
      out.kernel_to_original.push_back(kNoVertex);
    }
    b.add_path(x);
    const Vertex last_first = r.path[static_cast<std::size_t>(r.sec.sizes.front() - 1)];
    const Vertex first_last = r.path[static_cast<std::size_t>(r.sec.offset(r.sec.t() - 1))];
    b.add_edge(to_kernel[static_cast<std::size_t>(last_first)], x[0]);
    b.add_edge(x[4], to_kernel[static_cast<std::size_t>(first_last)]);
    out.replacements.push_back(x);
  }
  out.graph = b.build();
  return out;
}

inline int reduction_delta(const FiveSectioning& sec) { return 2 * (sec.inner_count() - 1); }

inline std::vector<ReducedPath> reduced_paths(const KernelTrace& trace) {
  std::vector<ReducedPath> out;
  for (const auto& r : trace.records) {
    const auto* p = std::get_if<PathReplaced>(&r);
    if (!p) throw InvalidArgument("unexpected record in max-leaf trace");
    out.push_back({p->path, FiveSectioning{p->sections}});
  }
  return out;
}

inline KernelTrace maxleaf_trace(const Instance& inst, const HostDecomposition& dec,
                                 const std::vector<ReducedPath>& reduced, const MaxLeafAssembly& kernel) {
  KernelTrace trace;
  trace.parameter = Parameter::kMaxLeaf;
  trace.original = inst.graph;
  trace.original_budget = inst.budget;
  trace.host = dec.host;
  int delta = 0;
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    PathReplaced rec{reduced[i].path, reduced[i].sec.sizes, kernel.replacements[i], reduction_delta(reduced[i].sec)};
    delta += rec.budget_delta;
    trace.records.push_back(std::move(rec));
  }
  trace.kernel_to_original = kernel.kernel_to_original;
  trace.kernel_budget = inst.budget - delta;
  return trace;
}

}  // namespace detail

/// Rule 4 on one path of the decomposition.
inline std::pair<Instance, KernelTrace> rule_long_path(const Instance& inst, const HostDecomposition& dec,
                                                       std::size_t path_id) {
  if (path_id >= dec.paths.size()) throw InvalidArgument("path id out of range");
  const auto& p = dec.paths[path_id];
  if (p.size() < kLongPathThreshold)
    throw InapplicableError("long-path rule needs at least 20 vertices, path has " + std::to_string(p.size()));
  const std::vector<detail::ReducedPath> reduced{{p.vertices, five_sectioning(p.size())}};
  const auto kernel = detail::assemble_maxleaf_kernel(inst.graph, reduced);
  KernelTrace trace = detail::maxleaf_trace(inst, dec, reduced, kernel);
  return {Instance{kernel.graph, trace.kernel_budget}, std::move(trace)};
}

inline std::uint64_t p2_bound(int k) { return static_cast<std::uint64_t>(5 * k - 1 + k / 2); }
inline std::uint64_t maxleaf_vertex_bound(int k) { return static_cast<std::uint64_t>(108 * k + k / 2); }

/// |P_2(G)| <= 5k - 1 + floor(k/2) for the default decomposition.
inline bool check_p2_bound(const Graph& g, int k) {
  return host_decomposition(g).paths.size() <= p2_bound(k);
}

struct MaxLeafOptions {
  std::optional<std::vector<Vertex>> host;
  std::optional<int> max_leaf;  // computed exactly when absent and n <= max_leaf_cap
  int max_leaf_cap = kDefaultMaxLeafCap;
};

/// Rule 4 on every path of at least 20 vertices; a reduced path has at most
/// 19 vertices, so one pass reaches the fixpoint.
inline KernelResult kernelize_maxleaf(const Instance& inst, const MaxLeafOptions& options = {}) {
  const HostDecomposition dec = host_decomposition(inst.graph, options.host);
  std::vector<detail::ReducedPath> reduced;
  std::vector<int> kernel_lengths;
  for (const auto& p : dec.paths) {
    if (p.size() >= kLongPathThreshold) {
      reduced.push_back({p.vertices, five_sectioning(p.size())});
      const auto& s = reduced.back().sec.sizes;
      kernel_lengths.push_back(s.front() + 5 + s.back());
    } else {
      kernel_lengths.push_back(p.size());
    }
  }
  const auto kernel = detail::assemble_maxleaf_kernel(inst.graph, reduced);
  KernelTrace trace = detail::maxleaf_trace(inst, dec, reduced, kernel);

  SizeReport rep;
  rep.vertices = kernel.graph.order();
  rep.path_count = static_cast<int>(dec.paths.size());
  const int longest = kernel_lengths.empty() ? 0 : *std::max_element(kernel_lengths.begin(), kernel_lengths.end());
  rep.checks.push_back({"longest subdivision path <= 19", static_cast<std::uint64_t>(longest), kReducedPathLimit});
  std::optional<int> k = options.max_leaf;
  if (!k && inst.graph.order() >= 2 && inst.graph.order() <= options.max_leaf_cap)
    k = max_leaf_number_exact(inst.graph, options.max_leaf_cap);
  if (k) {
    rep.max_leaf = k;
    rep.checks.push_back({"|P_2| <= 5k-1+floor(k/2)", dec.paths.size(), p2_bound(*k)});
    rep.checks.push_back({"kernel vertices <= 108k+floor(k/2)", static_cast<std::uint64_t>(kernel.graph.order()),
                          maxleaf_vertex_bound(*k)});
  }
  return {Instance{kernel.graph, trace.kernel_budget}, std::move(trace), std::move(rep)};
}

/// Maps a max-leaf kernel solution back: normalize on every replacement
/// path, then copy the two positions of X^P into each removed inner section.
inline CodeSet lift_maxleaf_solution(const KernelTrace& trace, const CodeSet& kernel_solution) {
  if (trace.parameter != Parameter::kMaxLeaf) throw InvalidArgument("trace does not belong to the max-leaf kernel");
  const auto reduced = detail::reduced_paths(trace);
  const auto kernel = detail::assemble_maxleaf_kernel(trace.original, reduced);
  if (kernel.kernel_to_original != trace.kernel_to_original)
    throw InvalidArgument("trace is inconsistent with its original graph");
  for (Vertex v : kernel_solution)
    if (!kernel.graph.contains(v)) throw InvalidArgument("solution vertex " + std::to_string(v) + " not in kernel");
  detail::require_valid(kernel.graph, kernel_solution, "kernel solution");

  std::vector<Vertex> to_kernel(static_cast<std::size_t>(trace.original.order()), kNoVertex);
  for (std::size_t i = 0; i < kernel.kernel_to_original.size(); ++i)
    if (kernel.kernel_to_original[i] != kNoVertex)
      to_kernel[static_cast<std::size_t>(kernel.kernel_to_original[i])] = static_cast<Vertex>(i);

  CodeSet s = kernel_solution;
  std::vector<std::pair<int, int>> positions;
  for (std::size_t r = 0; r < reduced.size(); ++r) {
    const auto& sec = reduced[r].sec;
    std::vector<Vertex> kpath;
    for (int i = 0; i < sec.sizes.front(); ++i)
      kpath.push_back(to_kernel[static_cast<std::size_t>(reduced[r].path[static_cast<std::size_t>(i)])]);
    kpath.insert(kpath.end(), kernel.replacements[r].begin(), kernel.replacements[r].end());
    for (int i = sec.offset(sec.t() - 1); i < sec.total(); ++i)
      kpath.push_back(to_kernel[static_cast<std::size_t>(reduced[r].path[static_cast<std::size_t>(i)])]);
    const FiveSectioning ksec{{sec.sizes.front(), 5, sec.sizes.back()}};
    auto norm = normalize_path_solution(kernel.graph, kpath, ksec, s);
    s = std::move(norm.solution);
    positions.emplace_back(norm.a, norm.b);
  }

  std::vector<Vertex> out;
  for (Vertex v : s)
    if (kernel.kernel_to_original[static_cast<std::size_t>(v)] != kNoVertex)
      out.push_back(kernel.kernel_to_original[static_cast<std::size_t>(v)]);
  for (std::size_t r = 0; r < reduced.size(); ++r) {
    const detail::PathView view{reduced[r].path, reduced[r].sec};
    for (int i = 1; i + 1 < reduced[r].sec.t(); ++i) {
      out.push_back(view.at(i, positions[r].first));
      out.push_back(view.at(i, positions[r].second));
    }
  }
  CodeSet lifted(std::move(out));
  const Verdict verdict = is_locating_dominating(trace.original, lifted);
  if (!verdict.ok()) throw InternalError("lifted set fails on the original graph: " + verdict.describe());
  return lifted;
}

}  // namespace ldsk
