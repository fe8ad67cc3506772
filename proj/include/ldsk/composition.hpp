#pragma once

#include <algorithm>
#include <array>
#include <set>
#include <string>
#include <vector>

#include "ldsk/error.hpp"
#include "ldsk/graph.hpp"
#include "ldsk/layout.hpp"
#include "ldsk/lds.hpp"
#include "ldsk/oracles.hpp"

namespace ldsk {

enum class CompositionVariant { kVertexCover, kClique };

inline const char* to_string(CompositionVariant v) { return v == CompositionVariant::kVertexCover ? "vc" : "clique"; }

/// Seven-vertex gadget with terminals alpha and beta.
struct BinaryGadget {
  Vertex a = kNoVertex, b = kNoVertex, c = kNoVertex, d = kNoVertex, e = kNoVertex;
  Vertex alpha = kNoVertex, beta = kNoVertex;
};

struct HyperedgeGadget {
  std::array<Vertex, 3> edge{};
  Vertex r = kNoVertex, c = kNoVertex, big_a = kNoVertex, big_b = kNoVertex;
};

struct Composition {
  CompositionVariant variant = CompositionVariant::kVertexCover;
  std::vector<HypergraphInstance> instances;  // padded to a power of two
  int original_count = 0;
  int n = 0;
  int h = 0;
  std::vector<std::array<Vertex, 3>> edges;  // union over all instances, sorted
  Graph graph;
  int budget = 0;
  RoleTable roles;
  std::vector<BinaryGadget> vertex_gadgets;
  std::vector<HyperedgeGadget> edge_gadgets;
  std::vector<BinaryGadget> selector;  // T_j: alpha = 0_j, beta = 1_j
  std::vector<Vertex> x;
  std::vector<Vertex> y;  // vc: y0 y1 y2 z z'; clique: y0 z
  Vertex z = kNoVertex;

  int t() const noexcept { return static_cast<int>(instances.size()); }

  /// V(T): the selector gadgets together with X and Y.
  std::vector<Vertex> selector_vertices() const {
    std::vector<Vertex> out;
    for (const auto& g : selector) out.insert(out.end(), {g.a, g.b, g.c, g.d, g.e, g.alpha, g.beta});
    out.insert(out.end(), x.begin(), x.end());
    out.insert(out.end(), y.begin(), y.end());
    return normalized(std::move(out));
  }
};

inline int composition_budget(CompositionVariant variant, int n, int h, int m) {
  return 3 * (n + h) + m + (variant == CompositionVariant::kVertexCover ? 2 : 1);
}

inline bool instance_bit(int i, int j) { return ((i >> j) & 1) != 0; }

namespace detail {

inline BinaryGadget add_binary_gadget(RoleTable& roles, const std::string& prefix, const std::string& suffix,
                                      const std::string& alpha, const std::string& beta) {
  BinaryGadget g;
  g.a = roles.add(prefix + "a" + suffix);
  g.b = roles.add(prefix + "b" + suffix);
  g.c = roles.add(prefix + "c" + suffix);
  g.d = roles.add(prefix + "d" + suffix);
  g.e = roles.add(prefix + "e" + suffix);
  g.alpha = roles.add(alpha);
  g.beta = roles.add(beta);
  return g;
}

inline void wire_binary_gadget(GraphBuilder& b, const BinaryGadget& g) {
  b.add_edge(g.b, g.c);
  b.add_edge(g.c, g.alpha);
  b.add_edge(g.alpha, g.d);
  b.add_edge(g.d, g.beta);
  b.add_edge(g.beta, g.c);
  b.add_edge(g.d, g.e);
  b.add_edge(g.a, g.alpha);
  b.add_edge(g.a, g.beta);
}

inline std::string edge_name(const std::array<Vertex, 3>& e) {
  return "{" + std::to_string(e[0]) + "," + std::to_string(e[1]) + "," + std::to_string(e[2]) + "}";
}

}  // namespace detail

/// OR-composition of bicoloring instances into one LDS instance. Vertex ids:
/// vertex gadgets, hyperedge gadgets, selector gadgets T_j, then X and Y.
inline Composition build_or_composition(std::vector<HypergraphInstance> instances, CompositionVariant variant) {
  if (instances.empty()) throw InvalidArgument("composition needs at least one instance");
  const int n = instances.front().n;
  for (const auto& inst : instances)
    if (inst.n != n)
      throw InvalidArgument("instances disagree on the vertex count (" + std::to_string(n) + " vs " +
                            std::to_string(inst.n) + ")");

  Composition out;
  out.variant = variant;
  out.original_count = static_cast<int>(instances.size());
  out.n = n;
  // Smallest selector that can name an instance: h >= 1 (vc), h >= 2 (clique).
  std::size_t t = variant == CompositionVariant::kVertexCover ? 2 : 4;
  while (t < instances.size()) t *= 2;
  while (instances.size() < t) instances.push_back(instances.back());
  out.instances = std::move(instances);
  out.h = 0;
  while ((std::size_t{1} << out.h) < t) ++out.h;

  std::set<std::array<Vertex, 3>> all;
  for (const auto& inst : out.instances) all.insert(inst.edges.begin(), inst.edges.end());
  out.edges.assign(all.begin(), all.end());

  auto& roles = out.roles;
  for (int v = 0; v < n; ++v) {
    const std::string s = "(" + std::to_string(v) + ")";
    out.vertex_gadgets.push_back(detail::add_binary_gadget(roles, "", s, "alpha" + s, "beta" + s));
  }
  for (std::size_t q = 0; q < out.edges.size(); ++q) {
    HyperedgeGadget g;
    g.edge = out.edges[q];
    const std::string s = "(E" + detail::edge_name(g.edge) + ")";
    g.r = roles.add("r" + s);
    g.c = roles.add("c" + s);
    g.big_a = roles.add("A" + s);
    g.big_b = roles.add("B" + s);
    out.edge_gadgets.push_back(g);
  }
  for (int j = 0; j < out.h; ++j) {
    const std::string s = "(" + std::to_string(j) + ")";
    out.selector.push_back(detail::add_binary_gadget(roles, "T" + s + ".", "", "0" + s, "1" + s));
  }
  for (int i = 0; i < out.t(); ++i) out.x.push_back(roles.add(detail::role("x", {i})));
  if (variant == CompositionVariant::kVertexCover) {
    for (const char* name : {"y0", "y1", "y2", "z", "z'"}) out.y.push_back(roles.add(name));
    out.z = out.y[3];
  } else {
    for (const char* name : {"y0", "z"}) out.y.push_back(roles.add(name));
    out.z = out.y[1];
  }

  GraphBuilder b(roles.size());
  for (const auto& g : out.vertex_gadgets) detail::wire_binary_gadget(b, g);
  for (const auto& g : out.selector) detail::wire_binary_gadget(b, g);
  for (const auto& g : out.edge_gadgets) {
    b.add_edge(g.r, g.c);
    b.add_edge(g.c, g.big_a);
    b.add_edge(g.c, g.big_b);
    for (Vertex v : g.edge) {
      b.add_edge(g.big_a, out.vertex_gadgets[static_cast<std::size_t>(v)].alpha);
      b.add_edge(g.big_b, out.vertex_gadgets[static_cast<std::size_t>(v)].beta);
    }
    for (int i = 0; i < out.t(); ++i) {
      const auto& own = out.instances[static_cast<std::size_t>(i)].edges;
      if (!std::binary_search(own.begin(), own.end(), g.edge)) {
        b.add_edge(out.x[static_cast<std::size_t>(i)], g.big_a);
        b.add_edge(out.x[static_cast<std::size_t>(i)], g.big_b);
      }
    }
  }
  for (int i = 0; i < out.t(); ++i)
    for (int j = 0; j < out.h; ++j) {
      const auto& s = out.selector[static_cast<std::size_t>(j)];
      b.add_edge(out.x[static_cast<std::size_t>(i)], instance_bit(i, j) ? s.alpha : s.beta);
    }
  const Vertex y0 = out.y[0];
  for (const auto& s : out.selector) {
    b.add_edge(y0, s.alpha);
    b.add_edge(y0, s.beta);
  }
  if (variant == CompositionVariant::kVertexCover) {
    const Vertex y1 = out.y[1], y2 = out.y[2], z = out.y[3], zp = out.y[4];
    b.add_edge(z, y0);
    b.add_edge(z, y1);
    b.add_edge(z, zp);
    for (Vertex xi : out.x)
      for (Vertex w : {y0, y1, y2, z}) b.add_edge(xi, w);
  } else {
    b.add_edge(y0, out.z);
    b.add_clique(out.x);
    for (Vertex xi : out.x) b.add_edge(xi, out.z);
  }
  out.graph = b.build();
  out.budget = composition_budget(variant, n, out.h, static_cast<int>(out.edges.size()));
  return out;
}

inline Composition build_or_composition_vc(std::vector<HypergraphInstance> instances) {
  return build_or_composition(std::move(instances), CompositionVariant::kVertexCover);
}

inline Composition build_or_composition_clique(std::vector<HypergraphInstance> instances) {
  return build_or_composition(std::move(instances), CompositionVariant::kClique);
}

/// Solution of size d from a proper bicoloring of instance i.
inline CodeSet solution_from_bicoloring(const Composition& c, int i, const Coloring& phi) {
  if (i < 0 || i >= c.t()) throw InvalidArgument("instance index " + std::to_string(i) + " out of range");
  if (!is_proper_bicoloring(c.instances[static_cast<std::size_t>(i)], phi))
    throw InvalidArgument("coloring is not a proper bicoloring of instance " + std::to_string(i));
  std::vector<Vertex> s;
  for (int v = 0; v < c.n; ++v) {
    const auto& g = c.vertex_gadgets[static_cast<std::size_t>(v)];
    s.insert(s.end(), {g.c, g.d, phi[static_cast<std::size_t>(v)] == 0 ? g.alpha : g.beta});
  }
  for (const auto& g : c.edge_gadgets) s.push_back(g.c);
  for (int j = 0; j < c.h; ++j) {
    const auto& g = c.selector[static_cast<std::size_t>(j)];
    s.insert(s.end(), {g.c, g.d, instance_bit(i, j) ? g.beta : g.alpha});
  }
  s.push_back(c.x[static_cast<std::size_t>(i)]);
  if (c.variant == CompositionVariant::kVertexCover) s.push_back(c.z);
  CodeSet out(std::move(s));
  const Verdict verdict = is_locating_dominating(c.graph, out);
  if (!verdict.ok()) throw InternalError("constructed solution is not locating-dominating: " + verdict.describe());
  if (static_cast<int>(out.size()) != c.budget) throw InternalError("constructed solution has the wrong size");
  return out;
}

struct ExtractedColoring {
  int instance = 0;
  Coloring phi;
};

inline ExtractedColoring extract_bicoloring(const Composition& c, const CodeSet& d) {
  const Verdict verdict = is_locating_dominating(c.graph, d);
  if (!verdict.ok()) throw InvalidArgument("input set is not locating-dominating: " + verdict.describe());
  if (static_cast<int>(d.size()) > c.budget)
    throw InvalidArgument("input set has " + std::to_string(d.size()) + " vertices, budget is " + std::to_string(c.budget));
  std::vector<int> chosen;
  for (int i = 0; i < c.t(); ++i)
    if (d.contains(c.x[static_cast<std::size_t>(i)])) chosen.push_back(i);
  if (chosen.size() != 1)
    throw InvalidArgument("selector step: expected exactly one x vertex in the solution, found " +
                          std::to_string(chosen.size()));
  ExtractedColoring out;
  out.instance = chosen.front();
  for (int v = 0; v < c.n; ++v) {
    const auto& g = c.vertex_gadgets[static_cast<std::size_t>(v)];
    const bool a = d.contains(g.alpha), b = d.contains(g.beta);
    if (a == b)
      throw InvalidArgument("vertex gadget step: gadget of vertex " + std::to_string(v) +
                            " must hold exactly one of alpha and beta");
    out.phi.push_back(a ? 0 : 1);
  }
  if (!is_proper_bicoloring(c.instances[static_cast<std::size_t>(out.instance)], out.phi))
    throw InvalidArgument("coloring step: extracted coloring leaves a monochromatic hyperedge in instance " +
                          std::to_string(out.instance));
  return out;
}

struct CoverWitness {
  CompositionVariant variant = CompositionVariant::kVertexCover;
  std::vector<Vertex> vertices;  // vertex cover (vc) or clique modulator (clique)
};

inline int composition_cover_size(const Composition& c) {
  return 7 * c.n + 4 * static_cast<int>(c.edges.size()) + 7 * c.h +
         (c.variant == CompositionVariant::kVertexCover ? 5 : 2);
}

inline CoverWitness composition_cover_witnesses(const Composition& c) {
  CoverWitness w;
  w.variant = c.variant;
  std::vector<char> in_x(static_cast<std::size_t>(c.graph.order()), 0);
  for (Vertex v : c.x) in_x[static_cast<std::size_t>(v)] = 1;
  for (Vertex v = 0; v < c.graph.order(); ++v)
    if (!in_x[static_cast<std::size_t>(v)]) w.vertices.push_back(v);
  if (c.variant == CompositionVariant::kVertexCover) {
    if (!is_independent(c.graph, c.x)) throw InternalError("X is not independent");
  } else if (!is_clique(c.graph, c.x)) {
    throw InternalError("X is not a clique");
  }
  if (static_cast<int>(w.vertices.size()) != composition_cover_size(c))
    throw InternalError("cover witness has an unexpected size");
  return w;
}

struct ObservationCheck {
  std::string name;
  bool holds = false;
};

struct AuditReport {
  std::vector<ObservationCheck> checks;
  int selector_intersection = 0;
  int selector_bound = 0;

  bool all_hold() const {
    for (const auto& c : checks)
      if (!c.holds) return false;
    return true;
  }
};

/// Local lower-bound predicates every solution satisfies, checked per gadget.
inline AuditReport audit_observations(const Composition& c, const CodeSet& d) {
  AuditReport report;
  auto hits = [&](std::initializer_list<Vertex> vs) {
    for (Vertex v : vs)
      if (d.contains(v)) return true;
    return false;
  };
  auto binary = [&](const BinaryGadget& g, const std::string& name) {
    report.checks.push_back({name + " meets {a,alpha,beta}", hits({g.a, g.alpha, g.beta})});
    report.checks.push_back({name + " meets {b,c}", hits({g.b, g.c})});
    report.checks.push_back({name + " meets {d,e}", hits({g.d, g.e})});
  };
  for (int v = 0; v < c.n; ++v) binary(c.vertex_gadgets[static_cast<std::size_t>(v)], "G(" + std::to_string(v) + ")");
  for (const auto& g : c.edge_gadgets)
    report.checks.push_back({"E" + detail::edge_name(g.edge) + " meets {c,r}", hits({g.c, g.r})});
  for (int j = 0; j < c.h; ++j) binary(c.selector[static_cast<std::size_t>(j)], "T(" + std::to_string(j) + ")");
  for (Vertex v : c.selector_vertices()) report.selector_intersection += d.contains(v) ? 1 : 0;
  report.selector_bound = 3 * c.h + (c.variant == CompositionVariant::kVertexCover ? 2 : 1);
  report.checks.push_back({"selector holds at least " + std::to_string(report.selector_bound) + " vertices",
                           report.selector_intersection >= report.selector_bound});
  return report;
}

}  // namespace ldsk
