#pragma once

#include <array>
#include <string>
#include <vector>

#include "ldsk/error.hpp"
#include "ldsk/graph.hpp"
#include "ldsk/layout.hpp"
#include "ldsk/lds.hpp"

namespace ldsk {

/// Clique instance (H, k); every vertex of H needs a neighbor.
struct CliqueInstance {
  Graph h;
  int k = 0;
};

struct SelectorGadgetF {
  std::array<Vertex, 4> alpha{};
  std::array<Vertex, 3> beta{};
  Vertex rho = kNoVertex;

  std::vector<Vertex> vertices() const {
    return {alpha[0], alpha[1], alpha[2], alpha[3], beta[0], beta[1], beta[2], rho};
  }
};

/// Group-edge gadget between copies i < j (0-based).
struct PairGadget {
  int i = 0, j = 0;
  std::vector<Vertex> q, q_prime;  // matched index by index
  std::array<Vertex, 4> gamma{};
  Vertex lambda_i = kNoVertex, lambda_j = kNoVertex, tau = kNoVertex;

  std::vector<Vertex> vertices() const {
    std::vector<Vertex> out = q;
    out.insert(out.end(), q_prime.begin(), q_prime.end());
    out.insert(out.end(), gamma.begin(), gamma.end());
    out.push_back(lambda_i);
    out.push_back(lambda_j);
    out.push_back(tau);
    return out;
  }
};

/// The generated LDS instance plus the role of every vertex. Ids are laid out
/// as: copies H_1..H_k, gadgets F_1..F_k, then pair gadgets in lexicographic
/// (i, j) order.
struct CliqueReduction {
  CliqueInstance source;
  std::vector<Edge> h_edges;  // sorted; edge t owns slots 2t (e^{u,v}) and 2t+1 (e^{v,u})
  Graph graph;
  int budget = 0;
  RoleTable roles;
  std::vector<std::vector<Vertex>> copies;  // copies[i][v] = v_i
  std::vector<SelectorGadgetF> f;
  std::vector<PairGadget> pairs;

  const PairGadget& pair(int i, int j) const {
    for (const auto& p : pairs)
      if (p.i == i && p.j == j) return p;
    throw InvalidArgument("no pair gadget for (" + std::to_string(i) + ", " + std::to_string(j) + ")");
  }

  /// e^{u,v}_{i,j}: the Q vertex adjacent to u_i and v_j.
  Vertex edge_vertex(const PairGadget& p, Vertex u, Vertex v) const {
    const Edge key{std::min(u, v), std::max(u, v)};
    auto it = std::lower_bound(h_edges.begin(), h_edges.end(), key);
    if (it == h_edges.end() || *it != key)
      throw InvalidArgument("{" + std::to_string(u) + ", " + std::to_string(v) + "} is not an edge of H");
    const auto slot = static_cast<std::size_t>(2 * (it - h_edges.begin()) + (u < v ? 0 : 1));
    return p.q[slot];
  }
};

inline std::uint64_t binomial2(std::uint64_t k) { return k * (k - 1) / 2; }

inline int clique_reduction_budget(int k, int m) {
  return 4 * k + static_cast<int>(binomial2(static_cast<std::uint64_t>(k))) * (2 * m + 1);
}

inline CliqueReduction build_clique_reduction(const CliqueInstance& in) {
  const Graph& h = in.h;
  const int k = in.k, n = h.order();
  if (k < 2) throw InvalidArgument("clique reduction needs k >= 2");
  for (Vertex v = 0; v < n; ++v)
    if (h.degree(v) == 0) throw InvalidArgument("vertex " + std::to_string(v) + " of H is isolated");

  CliqueReduction out;
  out.source = in;
  out.h_edges = h.edges();
  const int m = static_cast<int>(out.h_edges.size());
  auto& roles = out.roles;
  using detail::role;

  for (int i = 0; i < k; ++i) {
    std::vector<Vertex> copy;
    for (Vertex v = 0; v < n; ++v) copy.push_back(roles.add(role("copy", {i + 1, v})));
    out.copies.push_back(std::move(copy));
  }
  for (int i = 0; i < k; ++i) {
    SelectorGadgetF f;
    for (int l = 0; l < 4; ++l) f.alpha[static_cast<std::size_t>(l)] = roles.add(role("alpha", {i + 1, l + 1}));
    for (int l = 0; l < 3; ++l) f.beta[static_cast<std::size_t>(l)] = roles.add(role("beta", {i + 1, l + 1}));
    f.rho = roles.add(role("rho", {i + 1}));
    out.f.push_back(f);
  }
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      PairGadget p;
      p.i = i;
      p.j = j;
      const std::string at = std::to_string(i + 1) + "," + std::to_string(j + 1);
      for (const auto& [a, b] : out.h_edges) {
        p.q.push_back(roles.add("e(" + std::to_string(a) + "," + std::to_string(b) + ";" + at + ")"));
        p.q.push_back(roles.add("e(" + std::to_string(b) + "," + std::to_string(a) + ";" + at + ")"));
      }
      for (const auto& [a, b] : out.h_edges) {
        p.q_prime.push_back(roles.add("e'(" + std::to_string(a) + "," + std::to_string(b) + ";" + at + ")"));
        p.q_prime.push_back(roles.add("e'(" + std::to_string(b) + "," + std::to_string(a) + ";" + at + ")"));
      }
      for (int l = 0; l < 4; ++l)
        p.gamma[static_cast<std::size_t>(l)] = roles.add("gamma(" + at + ";" + std::to_string(l + 1) + ")");
      p.lambda_i = roles.add("lambda(" + std::to_string(i + 1) + ";" + at + ")");
      p.lambda_j = roles.add("lambda(" + std::to_string(j + 1) + ";" + at + ")");
      p.tau = roles.add("tau(" + at + ")");
      out.pairs.push_back(std::move(p));
    }

  GraphBuilder b(roles.size());
  for (const auto& copy : out.copies) b.add_clique(copy);
  for (int i = 0; i < k; ++i) {
    const auto& f = out.f[static_cast<std::size_t>(i)];
    for (Vertex v : out.copies[static_cast<std::size_t>(i)]) {
      b.add_edge(f.alpha[0], v);
      b.add_edge(f.beta[0], v);
      b.add_edge(f.rho, v);
    }
    b.add_path(f.alpha);
    b.add_edge(f.beta[2], f.beta[1]);
    b.add_edge(f.beta[1], f.beta[0]);
  }
  for (const auto& p : out.pairs) {
    b.add_clique(p.q);
    b.add_clique(p.q_prime);
    for (std::size_t t = 0; t < p.q.size(); ++t) b.add_edge(p.q[t], p.q_prime[t]);
    b.add_path(p.gamma);
    for (Vertex e : p.q) {
      b.add_edge(p.lambda_i, e);
      b.add_edge(p.lambda_j, e);
      b.add_edge(p.tau, e);
      b.add_edge(p.gamma[0], e);
    }
    for (Vertex e : p.q_prime) b.add_edge(p.gamma[0], e);
    b.add_edge(p.tau, p.gamma[0]);
    b.add_edge(p.gamma[0], p.lambda_i);
    b.add_edge(p.gamma[0], p.lambda_j);
    for (Vertex v : out.copies[static_cast<std::size_t>(p.i)]) b.add_edge(p.lambda_i, v);
    for (Vertex v : out.copies[static_cast<std::size_t>(p.j)]) b.add_edge(p.lambda_j, v);
    for (std::size_t t = 0; t < out.h_edges.size(); ++t) {
      const auto [u, v] = out.h_edges[t];
      const auto& ci = out.copies[static_cast<std::size_t>(p.i)];
      const auto& cj = out.copies[static_cast<std::size_t>(p.j)];
      b.add_edge(p.q[2 * t], ci[static_cast<std::size_t>(u)]);
      b.add_edge(p.q[2 * t], cj[static_cast<std::size_t>(v)]);
      b.add_edge(p.q[2 * t + 1], ci[static_cast<std::size_t>(v)]);
      b.add_edge(p.q[2 * t + 1], cj[static_cast<std::size_t>(u)]);
    }
  }
  out.graph = b.build();
  out.budget = clique_reduction_budget(k, m);
  return out;
}

/// The canonical solution for a k-clique listed in copy order
/// (clique[i] is placed in copy i).
inline CodeSet canonical_solution_from_clique(const CliqueReduction& r, const std::vector<Vertex>& clique) {
  const int k = r.source.k;
  if (static_cast<int>(clique.size()) != k) throw InvalidArgument("clique must have exactly k vertices");
  for (Vertex v : clique)
    if (!r.source.h.contains(v)) throw InvalidArgument("vertex " + std::to_string(v) + " not in H");
  if (!is_clique(r.source.h, clique) || normalized(clique).size() != clique.size())
    throw InvalidArgument("vertex set is not a clique of H");
  if (r.h_edges.size() < 2)
    throw InvalidArgument("no canonical solution when H has a single edge: tau and the free Q' vertex share their "
                          "neighborhood in every canonical set");

  std::vector<Vertex> d;
  for (int i = 0; i < k; ++i) {
    const auto& f = r.f[static_cast<std::size_t>(i)];
    d.insert(d.end(), {f.alpha[0], f.alpha[2], f.beta[1]});
    d.push_back(r.copies[static_cast<std::size_t>(i)][static_cast<std::size_t>(clique[static_cast<std::size_t>(i)])]);
  }
  for (const auto& p : r.pairs) {
    d.push_back(p.gamma[0]);
    d.push_back(p.gamma[2]);
    const Vertex skip = r.edge_vertex(p, clique[static_cast<std::size_t>(p.i)], clique[static_cast<std::size_t>(p.j)]);
    for (Vertex e : p.q)
      if (e != skip) d.push_back(e);
  }
  CodeSet out(std::move(d));
  const Verdict verdict = is_locating_dominating(r.graph, out);
  if (!verdict.ok()) throw InternalError("canonical solution is not locating-dominating: " + verdict.describe());
  if (static_cast<int>(out.size()) != r.budget) throw InternalError("canonical solution has the wrong size");
  return out;
}

/// Rebuilds D into canonical form and reads one vertex per copy of H.
inline std::vector<Vertex> extract_clique_from_solution(const CliqueReduction& r, const CodeSet& d) {
  const Verdict verdict = is_locating_dominating(r.graph, d);
  if (!verdict.ok()) throw InvalidArgument("input set is not locating-dominating: " + verdict.describe());
  if (static_cast<int>(d.size()) > r.budget)
    throw InvalidArgument("input set has " + std::to_string(d.size()) + " vertices, budget is " + std::to_string(r.budget));

  auto count = [&](const std::vector<Vertex>& vs) {
    int c = 0;
    for (Vertex v : vs) c += d.contains(v) ? 1 : 0;
    return c;
  };
  std::vector<char> drop(static_cast<std::size_t>(r.graph.order()), 0);
  std::vector<Vertex> add;
  const int k = r.source.k;
  const int m = static_cast<int>(r.h_edges.size());
  for (int i = 0; i < k; ++i) {
    const auto& f = r.f[static_cast<std::size_t>(i)];
    const int c = count(f.vertices());
    if (c != 3)
      throw InvalidArgument("canonical form: gadget F_" + std::to_string(i + 1) + " holds " + std::to_string(c) +
                            " solution vertices, expected 3");
    for (Vertex v : f.vertices()) drop[static_cast<std::size_t>(v)] = 1;
    add.insert(add.end(), {f.alpha[0], f.alpha[2], f.beta[1]});
    const int in_copy = count(r.copies[static_cast<std::size_t>(i)]);
    if (in_copy != 1)
      throw InvalidArgument("canonical form: copy H_" + std::to_string(i + 1) + " holds " + std::to_string(in_copy) +
                            " solution vertices, expected 1");
  }
  for (const auto& p : r.pairs) {
    const std::string name = "E_" + std::to_string(p.i + 1) + "," + std::to_string(p.j + 1);
    const int c = count(p.vertices());
    if (c != 2 * m + 1)
      throw InvalidArgument("canonical form: gadget " + name + " holds " + std::to_string(c) +
                            " solution vertices, expected " + std::to_string(2 * m + 1));
    std::size_t free_edge = p.q.size();
    for (std::size_t t = 0; t < p.q.size(); ++t)
      if (!d.contains(p.q[t]) && !d.contains(p.q_prime[t])) {
        free_edge = t;
        break;
      }
    if (free_edge == p.q.size())
      throw InvalidArgument("canonical form: every matching edge of " + name + " meets the solution");
    for (Vertex v : p.vertices()) drop[static_cast<std::size_t>(v)] = 1;
    add.push_back(p.gamma[0]);
    add.push_back(p.gamma[2]);
    for (std::size_t t = 0; t < p.q.size(); ++t)
      if (t != free_edge) add.push_back(p.q[t]);
  }
  std::vector<Vertex> rebuilt = add;
  for (Vertex v : d)
    if (!drop[static_cast<std::size_t>(v)]) rebuilt.push_back(v);
  const CodeSet canonical(std::move(rebuilt));
  const Verdict cv = is_locating_dominating(r.graph, canonical);
  if (!cv.ok()) throw InternalError("canonical rebuild is not locating-dominating: " + cv.describe());

  std::vector<Vertex> s;
  for (int i = 0; i < k; ++i)
    for (Vertex v = 0; v < r.source.h.order(); ++v)
      if (canonical.contains(r.copies[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)])) s.push_back(v);
  if (normalized(s).size() != s.size() || !is_clique(r.source.h, s))
    throw InvalidArgument("vertices read from the copies do not form a k-clique of H");
  return s;
}

/// One clique per copy, five per F gadget, seven per pair gadget.
inline std::vector<std::vector<Vertex>> clique_cover(const CliqueReduction& r) {
  std::vector<std::vector<Vertex>> cover;
  for (const auto& copy : r.copies) cover.push_back(copy);
  for (const auto& f : r.f) {
    cover.push_back({f.rho});
    cover.push_back({f.beta[0], f.beta[1]});
    cover.push_back({f.beta[2]});
    cover.push_back({f.alpha[0], f.alpha[1]});
    cover.push_back({f.alpha[2], f.alpha[3]});
  }
  for (const auto& p : r.pairs) {
    cover.push_back({p.tau});
    cover.push_back({p.gamma[0], p.gamma[1]});
    cover.push_back({p.gamma[2], p.gamma[3]});
    cover.push_back({p.lambda_i});
    cover.push_back({p.lambda_j});
    cover.push_back(p.q);
    cover.push_back(p.q_prime);
  }
  std::vector<char> covered(static_cast<std::size_t>(r.graph.order()), 0);
  for (const auto& c : cover) {
    if (!is_clique(r.graph, c)) throw InternalError("cover set is not a clique");
    for (Vertex v : c) covered[static_cast<std::size_t>(v)] = 1;
  }
  for (char c : covered)
    if (!c) throw InternalError("clique cover misses a vertex");
  return cover;
}

}  // namespace ldsk
