#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ldsk/error.hpp"
#include "ldsk/graph.hpp"
#include "ldsk/lds.hpp"
#include "ldsk/modulator.hpp"
#include "ldsk/trace.hpp"

namespace ldsk {

/// A component clique of G - U.
struct CliqueRecord {
  int id = 0;
  std::vector<Vertex> members;                  // position order: by signature, then id
  std::vector<std::vector<Vertex>> signatures;  // N_U(member), parallel to members
  bool trivial = true;                          // no two members are true twins
  std::vector<Vertex> tau;                      // lower id of each same-signature pair
};

/// Cliques of G - U with identical signature multisets.
struct Pattern {
  std::vector<std::vector<Vertex>> key;  // sorted multiset of signatures
  std::vector<CliqueRecord> cliques;     // ordered by smallest member
  int s = 0;
  bool trivial = true;
  int tau_size = 0;

  int r() const noexcept { return static_cast<int>(cliques.size()); }

  std::vector<Vertex> vertices() const {
    std::vector<Vertex> out;
    for (const auto& q : cliques) out.insert(out.end(), q.members.begin(), q.members.end());
    return normalized(std::move(out));
  }
};

inline std::string pattern_key_string(const std::vector<std::vector<Vertex>>& key) {
  std::string out;
  for (const auto& sig : key) {
    out += '{';
    for (std::size_t i = 0; i < sig.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(sig[i]);
    }
    out += '}';
  }
  return out;
}

namespace detail {

inline std::vector<Vertex> to_parent_ids(const std::vector<Vertex>& to_parent, std::span<const Vertex> vs) {
  std::vector<Vertex> out;
  out.reserve(vs.size());
  for (Vertex v : vs) out.push_back(to_parent[static_cast<std::size_t>(v)]);
  return out;
}

/// Inverse of to_parent (which is sorted); throws if a vertex is absent.
inline std::vector<Vertex> to_child_ids(const std::vector<Vertex>& to_parent, std::span<const Vertex> vs) {
  std::vector<Vertex> out;
  out.reserve(vs.size());
  for (Vertex v : vs) {
    auto it = std::lower_bound(to_parent.begin(), to_parent.end(), v);
    if (it == to_parent.end() || *it != v) throw InternalError("vertex " + std::to_string(v) + " missing from subgraph");
    out.push_back(static_cast<Vertex>(it - to_parent.begin()));
  }
  return out;
}

inline CodeSet unite(const CodeSet& a, std::span<const Vertex> extra) {
  std::vector<Vertex> vs = a.vertices();
  vs.insert(vs.end(), extra.begin(), extra.end());
  return CodeSet(std::move(vs));
}

}  // namespace detail

/// Component cliques of G - U, ordered by smallest member.
inline std::vector<CliqueRecord> cluster_cliques(const Graph& g, const Modulator& u) {
  for (Vertex v : u.vertices)
    if (!g.contains(v)) throw InvalidArgument("modulator vertex " + std::to_string(v) + " not in graph");
  auto rest = delete_vertices(g, u.vertices);
  if (!is_cluster_graph(rest.graph)) throw InvalidArgument("G - U is not a cluster graph");

  std::vector<CliqueRecord> out;
  for (const auto& comp : connected_components(rest.graph)) {
    CliqueRecord q;
    q.id = static_cast<int>(out.size());
    std::vector<std::pair<std::vector<Vertex>, Vertex>> entries;
    for (Vertex c : comp) {
      const Vertex v = rest.to_parent[static_cast<std::size_t>(c)];
      entries.emplace_back(neighbors_in(g, v, u.vertices), v);
    }
    std::sort(entries.begin(), entries.end());
    for (std::size_t i = 0; i < entries.size(); ++i) {
      q.members.push_back(entries[i].second);
      q.signatures.push_back(entries[i].first);
      if (i > 0 && entries[i].first == entries[i - 1].first) {
        q.trivial = false;
        const bool pair = (i < 2 || entries[i - 2].first != entries[i].first) &&
                          (i + 1 == entries.size() || entries[i + 1].first != entries[i].first);
        if (pair) q.tau.push_back(std::min(entries[i - 1].second, entries[i].second));
      }
    }
    std::sort(q.tau.begin(), q.tau.end());
    out.push_back(std::move(q));
  }
  return out;
}

/// Partition of the cliques of G - U into patterns, ordered by key.
inline std::vector<Pattern> compute_patterns(const Graph& g, const Modulator& u) {
  std::map<std::vector<std::vector<Vertex>>, Pattern> by_key;
  for (auto& q : cluster_cliques(g, u)) {
    Pattern& p = by_key[q.signatures];
    if (p.cliques.empty()) {
      p.key = q.signatures;
      p.s = static_cast<int>(q.members.size());
      p.trivial = q.trivial;
      p.tau_size = static_cast<int>(q.tau.size());
    }
    p.cliques.push_back(std::move(q));
  }
  std::vector<Pattern> out;
  for (auto& [key, p] : by_key) out.push_back(std::move(p));
  return out;
}

inline bool trivial_rule_applies(const Pattern& p, std::size_t modulator_size) {
  return p.trivial && p.s >= 2 && p.r() >= 2 * p.s + static_cast<int>(modulator_size) + 2;
}

inline bool nontrivial_rule_applies(const Pattern& p, std::size_t modulator_size) {
  return !p.trivial && p.s >= 2 && p.r() >= static_cast<int>(modulator_size) + 2;
}

// ---------------------------------------------------------------------------
// Reduction state shared by the drivers. Vertices keep their original ids;
// the current graph is the subgraph induced by the alive ones.

namespace detail {

struct ReductionState {
  Graph original;
  int original_budget = 0;
  std::vector<Vertex> modulator;  // original ids, never deleted
  std::vector<char> alive;
  int budget = 0;
  std::vector<RuleRecord> records;
  bool collapsed = false;

  ReductionState(const Instance& inst, std::vector<Vertex> u)
      : original(inst.graph),
        original_budget(inst.budget),
        modulator(std::move(u)),
        alive(static_cast<std::size_t>(inst.graph.order()), 1),
        budget(inst.budget) {}

  std::vector<Vertex> alive_list() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < original.order(); ++v)
      if (alive[static_cast<std::size_t>(v)]) out.push_back(v);
    return out;
  }

  Subgraph current() const { return induced_subgraph(original, alive_list()); }

  Modulator current_modulator(const Subgraph& sub, ModulatorKind kind) const {
    return {kind, to_child_ids(sub.to_parent, modulator)};
  }

  void charge(int delta) {
    budget -= delta;
    if (budget < 0) collapsed = true;
  }
};

/// One round of Rule 1 on V \ U; returns whether anything was removed.
inline bool twin_round(ReductionState& st) {
  const Subgraph sub = st.current();
  std::vector<Vertex> outside;
  const auto u = to_child_ids(sub.to_parent, st.modulator);
  for (Vertex v = 0; v < sub.graph.order(); ++v)
    if (!std::binary_search(u.begin(), u.end(), v)) outside.push_back(v);
  bool changed = false;
  for (const auto& cls : twin_classes(sub.graph, std::span<const Vertex>(outside)).classes) {
    if (cls.members.size() <= 2) continue;
    const std::vector<Vertex> twins = {sub.to_parent[static_cast<std::size_t>(cls.members[0])],
                                       sub.to_parent[static_cast<std::size_t>(cls.members[1])]};
    for (std::size_t i = cls.members.size(); i-- > 2;) {
      const Vertex w = sub.to_parent[static_cast<std::size_t>(cls.members[i])];
      st.alive[static_cast<std::size_t>(w)] = 0;
      st.records.push_back(TwinRemoved{w, twins, 1});
      st.charge(1);
      changed = true;
      if (st.collapsed) return true;
    }
  }
  return changed;
}

inline void twin_reduce(ReductionState& st) {
  while (!st.collapsed && twin_round(st)) {
  }
}

/// Deletes the clique of `p` (child ids of `sub`) with the largest smallest member.
inline void remove_pattern_clique(ReductionState& st, const Subgraph& sub, Pattern& p) {
  const CliqueRecord victim = std::move(p.cliques.back());
  p.cliques.pop_back();
  CliqueRemoved rec;
  rec.trivial = p.trivial;
  rec.removed = to_parent_ids(sub.to_parent, victim.members);
  for (const auto& q : p.cliques) rec.remaining.push_back(to_parent_ids(sub.to_parent, q.members));
  std::vector<std::vector<Vertex>> key;
  for (const auto& sig : p.key) key.push_back(to_parent_ids(sub.to_parent, sig));
  rec.key = pattern_key_string(key);
  rec.tau = to_parent_ids(sub.to_parent, victim.tau);
  rec.budget_delta = p.trivial ? 1 : p.tau_size;
  for (Vertex v : rec.removed) st.alive[static_cast<std::size_t>(v)] = 0;
  const int delta = rec.budget_delta;
  st.records.push_back(std::move(rec));
  st.charge(delta);
}

/// Rules 2 and 3 on every pattern until their guards fail; removals in one
/// pattern leave every other clique and every twin relation outside U intact.
inline bool pattern_round(ReductionState& st, ModulatorKind kind) {
  const Subgraph sub = st.current();
  const Modulator u = st.current_modulator(sub, kind);
  bool changed = false;
  for (auto& p : compute_patterns(sub.graph, u)) {
    while (!st.collapsed && (trivial_rule_applies(p, u.size()) || nontrivial_rule_applies(p, u.size()))) {
      remove_pattern_clique(st, sub, p);
      changed = true;
    }
  }
  return changed;
}

inline std::pair<Instance, KernelTrace> finish(const ReductionState& st, Parameter parameter) {
  KernelTrace trace;
  trace.parameter = parameter;
  trace.original = st.original;
  trace.original_budget = st.original_budget;
  trace.modulator = st.modulator;
  trace.records = st.records;
  if (st.collapsed) {
    trace.collapsed_to_no = true;
    trace.kernel_budget = 0;
    return {Instance{GraphBuilder(1).build(), 0}, std::move(trace)};
  }
  const Subgraph sub = st.current();
  trace.kernel_to_original = sub.to_parent;
  trace.kernel_budget = st.budget;
  return {Instance{sub.graph, st.budget}, std::move(trace)};
}

inline Modulator checked_modulator(const Graph& g, const Modulator& u, ModulatorKind kind) {
  Modulator m{kind, normalized(u.vertices)};
  if (!verify_modulator(g, m)) throw InvalidArgument(std::string("vertex set is not a ") + to_string(kind) + " modulator");
  return m;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Single rules.

/// Rule 1, exhaustively: while three mutual twins lie outside U, delete the
/// highest-indexed one and decrement d.
inline std::pair<Instance, KernelTrace> rule_twin_reduce(const Instance& inst, const Modulator& u) {
  for (Vertex v : u.vertices)
    if (!inst.graph.contains(v)) throw InvalidArgument("modulator vertex " + std::to_string(v) + " not in graph");
  detail::ReductionState st(inst, normalized(u.vertices));
  detail::twin_reduce(st);
  return detail::finish(st, u.kind == ModulatorKind::kClique ? Parameter::kClique : Parameter::kCluster);
}

namespace detail {

inline std::pair<Instance, KernelTrace> apply_pattern_rule(const Instance& inst, const Modulator& u,
                                                           const Pattern& pattern, bool trivial) {
  const Modulator m = checked_modulator(inst.graph, u, ModulatorKind::kCluster);
  const auto patterns = compute_patterns(inst.graph, m);
  auto it = std::find_if(patterns.begin(), patterns.end(), [&](const Pattern& p) { return p.key == pattern.key; });
  if (it == patterns.end()) throw InvalidArgument("pattern not present in graph");
  Pattern p = *it;
  const bool ok = trivial ? trivial_rule_applies(p, m.size()) : nontrivial_rule_applies(p, m.size());
  if (!ok)
    throw InapplicableError(std::string(trivial ? "trivial" : "non-trivial") + " pattern rule needs " +
                            (trivial ? "a trivial pattern with s >= 2 and r >= 2s + |U| + 2"
                                     : "a non-trivial pattern with s >= 2 and r >= |U| + 2") +
                            " (s = " + std::to_string(p.s) + ", r = " + std::to_string(p.r()) +
                            ", |U| = " + std::to_string(m.size()) + ")");
  ReductionState st(inst, m.vertices);
  const Subgraph identity = st.current();
  remove_pattern_clique(st, identity, p);
  return finish(st, Parameter::kCluster);
}

}  // namespace detail

/// Rule 2: removes one clique of a trivial pattern, d - 1.
inline std::pair<Instance, KernelTrace> rule_trivial_pattern(const Instance& inst, const Modulator& u,
                                                             const Pattern& pattern) {
  return detail::apply_pattern_rule(inst, u, pattern, true);
}

/// Rule 3: removes one clique of a non-trivial pattern, d - |tau|.
inline std::pair<Instance, KernelTrace> rule_nontrivial_pattern(const Instance& inst, const Modulator& u,
                                                                const Pattern& pattern) {
  return detail::apply_pattern_rule(inst, u, pattern, false);
}

// ---------------------------------------------------------------------------
// Size reports.

inline SizeReport cluster_size_report(const Graph& g, const Modulator& u) {
  SizeReport rep;
  rep.vertices = g.order();
  rep.modulator_size = static_cast<int>(u.size());
  const auto patterns = compute_patterns(g, u);
  rep.pattern_count = static_cast<int>(patterns.size());
  const std::uint64_t k = u.size();
  std::uint64_t largest = 0;
  for (const auto& p : patterns) largest = std::max<std::uint64_t>(largest, static_cast<std::uint64_t>(p.s));
  rep.checks.push_back({"clique size <= 2^(|U|+1)", largest, pow2_saturating(k + 1)});
  for (const auto& p : patterns) {
    const std::string name = "cliques in " + std::string(p.trivial ? "trivial" : "non-trivial") + " pattern " +
                             pattern_key_string(p.key);
    if (p.trivial)
      rep.checks.push_back({name + " <= 2s+|U|+1", static_cast<std::uint64_t>(p.r()),
                            2 * static_cast<std::uint64_t>(p.s) + k + 1});
    else
      rep.checks.push_back({name + " <= |U|+1", static_cast<std::uint64_t>(p.r()), k + 1});
  }
  rep.checks.push_back({"pattern count <= 2*2^(2^|U|)", static_cast<std::uint64_t>(patterns.size()),
                        mul_saturating(2, pow2_saturating(pow2_saturating(k)))});
  return rep;
}

inline SizeReport clique_size_report(const Graph& g, const Modulator& u) {
  SizeReport rep;
  rep.vertices = g.order();
  rep.modulator_size = static_cast<int>(u.size());
  rep.checks.push_back({"vertices <= |U| + 2*2^|U|", static_cast<std::uint64_t>(g.order()),
                        add_saturating(u.size(), mul_saturating(2, pow2_saturating(u.size())))});
  return rep;
}

namespace detail {

inline SizeReport collapsed_report() {
  SizeReport rep;
  rep.vertices = 1;
  rep.checks.push_back({"canonical NO instance has one vertex", 1, 1});
  return rep;
}

inline Modulator kernel_modulator(const KernelTrace& trace, ModulatorKind kind) {
  return {kind, to_child_ids(trace.kernel_to_original, trace.modulator)};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Drivers.

/// Rule 1 exhaustively, then Rules 2-3 until no guard holds.
inline KernelResult kernelize_cluster(const Instance& inst, std::optional<Modulator> u = std::nullopt) {
  const Modulator m = u ? detail::checked_modulator(inst.graph, *u, ModulatorKind::kCluster)
                        : cluster_modulator_3approx(inst.graph);
  detail::ReductionState st(inst, m.vertices);
  for (;;) {
    detail::twin_reduce(st);
    if (st.collapsed || !detail::pattern_round(st, ModulatorKind::kCluster)) break;
  }
  auto [kernel, trace] = detail::finish(st, Parameter::kCluster);
  SizeReport rep = st.collapsed ? detail::collapsed_report()
                                : cluster_size_report(kernel.graph, detail::kernel_modulator(trace, ModulatorKind::kCluster));
  rep.modulator_size = static_cast<int>(m.size());
  return {std::move(kernel), std::move(trace), std::move(rep)};
}

/// Rule 1 exhaustively on V \ U for a clique modulator U.
inline KernelResult kernelize_clique(const Instance& inst, std::optional<Modulator> u = std::nullopt) {
  const Modulator m = u ? detail::checked_modulator(inst.graph, *u, ModulatorKind::kClique)
                        : clique_modulator_2approx(inst.graph);
  detail::ReductionState st(inst, m.vertices);
  detail::twin_reduce(st);
  auto [kernel, trace] = detail::finish(st, Parameter::kClique);
  SizeReport rep = st.collapsed ? detail::collapsed_report()
                                : clique_size_report(kernel.graph, detail::kernel_modulator(trace, ModulatorKind::kClique));
  rep.modulator_size = static_cast<int>(m.size());
  return {std::move(kernel), std::move(trace), std::move(rep)};
}

/// True when some rule of the cluster driver could still fire.
inline bool cluster_rules_applicable(const Graph& g, const Modulator& u) {
  std::vector<Vertex> outside;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!u.contains(v)) outside.push_back(v);
  if (twin_classes(g, std::span<const Vertex>(outside)).largest() > 2) return true;
  for (const auto& p : compute_patterns(g, u))
    if (trivial_rule_applies(p, u.size()) || nontrivial_rule_applies(p, u.size())) return true;
  return false;
}

// ---------------------------------------------------------------------------
// Normalizers.

struct TrivialNormalization {
  CodeSet solution;
  int position = 0;               // l: the shared position index
  std::array<int, 3> cliques{};   // indices into pattern.cliques
};

struct NontrivialNormalization {
  CodeSet solution;
  int clique = 0;  // index into pattern.cliques with solution ∩ Q = tau(Q)
};

namespace detail {

inline void require_valid(const Graph& g, const CodeSet& d, const char* what) {
  const Verdict v = is_locating_dominating(g, d);
  if (!v.ok()) throw InvalidArgument(std::string(what) + " is not locating-dominating: " + v.describe());
}

inline std::optional<std::pair<int, std::array<int, 3>>> aligned_triple(const Pattern& p, const CodeSet& d) {
  for (int l = 0; l < p.s; ++l) {
    std::vector<int> hits;
    for (int i = 0; i < p.r() && hits.size() < 3; ++i) {
      const auto& q = p.cliques[static_cast<std::size_t>(i)].members;
      int inside = 0;
      for (Vertex v : q) inside += d.contains(v) ? 1 : 0;
      if (inside == 1 && d.contains(q[static_cast<std::size_t>(l)])) hits.push_back(i);
    }
    if (hits.size() == 3) return std::make_pair(l, std::array<int, 3>{hits[0], hits[1], hits[2]});
  }
  return std::nullopt;
}

inline int count_in(const CodeSet& d, std::span<const Vertex> vs) {
  int c = 0;
  for (Vertex v : vs) c += d.contains(v) ? 1 : 0;
  return c;
}

}  // namespace detail

/// Rewrites a solution so that three cliques of a trivial pattern meet it in
/// exactly their position-l vertex, without growing it.
inline TrivialNormalization normalize_trivial_solution(const Graph& g, const Modulator& u, const Pattern& pattern,
                                                       const CodeSet& d) {
  if (!pattern.trivial || pattern.s < 2)
    throw InvalidArgument("trivial normalization needs a trivial pattern with s >= 2");
  if (pattern.r() < 2 * pattern.s + static_cast<int>(u.size()) + 1)
    throw InvalidArgument("trivial normalization needs r >= 2s + |U| + 1");
  detail::require_valid(g, d, "input set");

  const std::vector<Vertex> vq = pattern.vertices();
  std::vector<Vertex> rebuilt_vs;
  for (Vertex v : d)
    if (!std::binary_search(vq.begin(), vq.end(), v)) rebuilt_vs.push_back(v);
  rebuilt_vs.insert(rebuilt_vs.end(), u.vertices.begin(), u.vertices.end());
  for (const auto& q : pattern.cliques) rebuilt_vs.push_back(q.members.front());
  const CodeSet rebuilt(std::move(rebuilt_vs));

  const bool heavy = detail::count_in(d, vq) >= pattern.r() + static_cast<int>(u.size());
  std::vector<CodeSet> candidates;
  if (heavy) {
    candidates.push_back(rebuilt);
  } else {
    candidates.push_back(d);
    if (rebuilt.size() <= d.size()) candidates.push_back(rebuilt);
  }
  for (const auto& c : candidates) {
    if (c.size() > d.size() || !is_locating_dominating(g, c).ok()) continue;
    if (auto hit = detail::aligned_triple(pattern, c)) return {c, hit->first, hit->second};
  }
  throw InternalError("trivial normalization found no position-aligned triple of cliques");
}

/// Rewrites a solution so that some clique Q of a non-trivial pattern meets
/// it in exactly tau(Q), without growing it.
inline NontrivialNormalization normalize_nontrivial_solution(const Graph& g, const Modulator& u,
                                                             const Pattern& pattern, const CodeSet& d) {
  if (pattern.trivial) throw InvalidArgument("non-trivial normalization needs a non-trivial pattern");
  if (pattern.r() < static_cast<int>(u.size()) + 1)
    throw InvalidArgument("non-trivial normalization needs r >= |U| + 1");
  for (const auto& q : pattern.cliques)
    for (std::size_t i = 2; i < q.signatures.size(); ++i)
      if (q.signatures[i] == q.signatures[i - 2])
        throw InvalidArgument("clique holds three true twins; apply the twin rule first");
  detail::require_valid(g, d, "input set");

  // Pass-through: some clique already holds one vertex of every twin pair and
  // nothing else. Swapping true twins is an automorphism, so it can be moved
  // onto tau(Q) itself.
  for (int i = 0; i < pattern.r(); ++i) {
    const auto& q = pattern.cliques[static_cast<std::size_t>(i)];
    bool transversal = true;
    std::vector<std::pair<Vertex, Vertex>> swaps;
    for (std::size_t j = 0; j < q.members.size() && transversal; ++j) {
      const bool paired_prev = j > 0 && q.signatures[j] == q.signatures[j - 1];
      const bool paired_next = j + 1 < q.members.size() && q.signatures[j] == q.signatures[j + 1];
      if (paired_prev) continue;
      if (!paired_next) {
        transversal = !d.contains(q.members[j]);
        continue;
      }
      const Vertex a = q.members[j], b = q.members[j + 1];
      if (d.contains(a) == d.contains(b)) {
        transversal = false;
        continue;
      }
      const Vertex rep = std::min(a, b);
      if (!d.contains(rep)) swaps.emplace_back(std::max(a, b), rep);
    }
    if (!transversal) continue;
    CodeSet out = d;
    for (auto [from, to] : swaps) {
      out.erase(from);
      out.insert(to);
    }
    if (!is_locating_dominating(g, out).ok()) throw InternalError("twin swap broke the solution");
    return {out, i};
  }

  const std::vector<Vertex> vq = pattern.vertices();
  std::vector<Vertex> vs;
  for (Vertex v : d)
    if (!std::binary_search(vq.begin(), vq.end(), v)) vs.push_back(v);
  vs.insert(vs.end(), u.vertices.begin(), u.vertices.end());
  for (const auto& q : pattern.cliques) vs.insert(vs.end(), q.tau.begin(), q.tau.end());
  CodeSet out(std::move(vs));
  if (out.size() > d.size()) throw InternalError("non-trivial normalization grew the solution");
  const Verdict verdict = is_locating_dominating(g, out);
  if (!verdict.ok()) throw InternalError("non-trivial normalization produced an invalid set: " + verdict.describe());
  return {out, 0};
}

// ---------------------------------------------------------------------------
// Lifting.

namespace detail {

inline CodeSet lift_clique_record(const CliqueRemoved& rec, const Graph& original, const std::vector<Vertex>& modulator,
                                  const std::vector<Vertex>& after, const std::vector<Vertex>& before,
                                  const CodeSet& d) {
  const Subgraph g_after = induced_subgraph(original, after);
  const Subgraph g_before = induced_subgraph(original, before);
  const Modulator u_after{ModulatorKind::kCluster, to_child_ids(g_after.to_parent, modulator)};
  const CodeSet d_after(to_child_ids(g_after.to_parent, d.vertices()));
  const Vertex anchor = to_child_ids(g_after.to_parent, rec.remaining.front()).front();

  auto valid_before = [&](const CodeSet& s) {
    return is_locating_dominating(g_before.graph, CodeSet(to_child_ids(g_before.to_parent, s.vertices()))).ok();
  };

  std::optional<Pattern> pattern;
  for (auto& p : compute_patterns(g_after.graph, u_after))
    for (const auto& q : p.cliques)
      if (std::find(q.members.begin(), q.members.end(), anchor) != q.members.end()) pattern = p;
  if (!pattern) throw InternalError("pattern of removed clique not found while lifting");

  try {
    if (rec.trivial) {
      auto norm = normalize_trivial_solution(g_after.graph, u_after, *pattern, d_after);
      CodeSet lifted(to_parent_ids(g_after.to_parent, norm.solution.vertices()));
      lifted.insert(rec.removed[static_cast<std::size_t>(norm.position)]);
      if (valid_before(lifted)) return lifted;
    } else {
      auto norm = normalize_nontrivial_solution(g_after.graph, u_after, *pattern, d_after);
      CodeSet lifted = unite(CodeSet(to_parent_ids(g_after.to_parent, norm.solution.vertices())), rec.tau);
      if (valid_before(lifted)) return lifted;
    }
  } catch (const InternalError&) {
  }
  // Direct completions of the unnormalized set, still within the budget delta.
  if (rec.trivial) {
    for (Vertex v : rec.removed) {
      CodeSet lifted = d;
      lifted.insert(v);
      if (valid_before(lifted)) return lifted;
    }
  } else {
    CodeSet lifted = unite(d, rec.tau);
    if (valid_before(lifted)) return lifted;
  }
  throw InternalError("could not lift solution over removed clique " + rec.key);
}

}  // namespace detail

/// Maps a solution of a cluster or clique kernel back to the original graph.
inline CodeSet lift_cluster_solution(const KernelTrace& trace, const CodeSet& kernel_solution) {
  if (trace.parameter == Parameter::kMaxLeaf) throw InvalidArgument("trace belongs to the max-leaf kernel");
  if (trace.collapsed_to_no) throw InvalidArgument("kernel is the canonical NO instance; there is nothing to lift");
  const Graph kernel = induced_subgraph(trace.original, trace.kernel_to_original).graph;
  for (Vertex v : kernel_solution)
    if (!kernel.contains(v)) throw InvalidArgument("solution vertex " + std::to_string(v) + " not in kernel");
  detail::require_valid(kernel, kernel_solution, "kernel solution");

  CodeSet d(detail::to_parent_ids(trace.kernel_to_original, kernel_solution.vertices()));
  std::vector<Vertex> alive = trace.kernel_to_original;
  for (auto it = trace.records.rbegin(); it != trace.records.rend(); ++it) {
    std::vector<Vertex> before = alive;
    if (const auto* tw = std::get_if<TwinRemoved>(&*it)) {
      before.push_back(tw->removed);
      before = normalized(std::move(before));
      const Subgraph g_before = induced_subgraph(trace.original, before);
      auto valid = [&](const CodeSet& s) {
        return is_locating_dominating(g_before.graph, CodeSet(detail::to_child_ids(g_before.to_parent, s.vertices())))
            .ok();
      };
      if (!valid(d)) {
        d.insert(tw->removed);
        if (!valid(d)) throw InternalError("re-adding twin " + std::to_string(tw->removed) + " did not repair the set");
      }
    } else if (const auto* cq = std::get_if<CliqueRemoved>(&*it)) {
      before.insert(before.end(), cq->removed.begin(), cq->removed.end());
      before = normalized(std::move(before));
      d = detail::lift_clique_record(*cq, trace.original, trace.modulator, alive, before, d);
    } else {
      throw InvalidArgument("unexpected record in cluster trace");
    }
    alive = std::move(before);
  }
  const Verdict verdict = is_locating_dominating(trace.original, d);
  if (!verdict.ok()) throw InternalError("lifted set fails on the original graph: " + verdict.describe());
  return d;
}

}  // namespace ldsk
