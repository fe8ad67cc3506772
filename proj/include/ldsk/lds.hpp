#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "ldsk/error.hpp"
#include "ldsk/graph.hpp"

namespace ldsk {

/// A candidate locating-dominating set: sorted, duplicate-free vertex ids.
class CodeSet {
 public:
  CodeSet() = default;
  CodeSet(std::initializer_list<Vertex> vs) : vertices_(normalized(vs)) {}
  explicit CodeSet(std::vector<Vertex> vs) : vertices_(normalized(std::move(vs))) {}

  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  bool empty() const noexcept { return vertices_.empty(); }
  bool contains(Vertex v) const { return std::binary_search(vertices_.begin(), vertices_.end(), v); }
  auto begin() const { return vertices_.begin(); }
  auto end() const { return vertices_.end(); }

  void insert(Vertex v) {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v) vertices_.insert(it, v);
  }
  void erase(Vertex v) {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it != vertices_.end() && *it == v) vertices_.erase(it);
  }

  friend bool operator==(const CodeSet&, const CodeSet&) = default;

 private:
  std::vector<Vertex> vertices_;
};

inline CodeSet parse_code_set(std::string_view text) { return CodeSet(parse_vertex_list(text)); }
inline std::string serialize_code_set(const CodeSet& d) { return serialize_vertex_list(d.vertices()); }
inline CodeSet read_code_set(const std::string& path) { return parse_code_set(detail::read_file(path)); }
inline void write_code_set(const std::string& path, const CodeSet& d) {
  detail::write_file(path, serialize_code_set(d));
}

// ---------------------------------------------------------------------------
// Verification.

struct Undominated {
  Vertex vertex;
};
struct Confounded {
  Vertex first;
  Vertex second;
};

/// Outcome of checking a CodeSet; on failure carries the first violation in
/// vertex order.
struct Verdict {
  std::variant<std::monostate, Undominated, Confounded> violation;

  bool ok() const noexcept { return std::holds_alternative<std::monostate>(violation); }
  explicit operator bool() const noexcept { return ok(); }

  std::string describe() const {
    if (auto* u = std::get_if<Undominated>(&violation)) return "vertex " + std::to_string(u->vertex) + " is undominated";
    if (auto* c = std::get_if<Confounded>(&violation))
      return "vertices " + std::to_string(c->first) + " and " + std::to_string(c->second) + " are confounded";
    return "locating-dominating";
  }
};

inline Verdict is_locating_dominating(const Graph& g, const CodeSet& d) {
  for (Vertex v : d)
    if (!g.contains(v)) throw InvalidArgument("code set vertex " + std::to_string(v) + " not in graph");
  std::map<std::vector<Vertex>, Vertex> seen;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (d.contains(v)) continue;
    auto signature = neighbors_in(g, v, d.vertices());
    if (signature.empty()) return {Undominated{v}};
    auto [it, inserted] = seen.emplace(std::move(signature), v);
    if (!inserted) return {Confounded{it->second, v}};
  }
  return {};
}

// ---------------------------------------------------------------------------
// Exact solver.

inline constexpr int kSolverHardCap = 128;

struct SolverOptions {
  int vertex_cap = kSolverHardCap;  // refuse larger graphs
};

namespace detail {

template <std::size_t Words>
struct Bits {
  std::array<std::uint64_t, Words> w{};

  void set(int i) { w[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (w[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1; }
  bool none() const {
    for (auto x : w)
      if (x) return false;
    return true;
  }
  int count() const {
    int c = 0;
    for (auto x : w) c += std::popcount(x);
    return c;
  }
  bool intersects(const Bits& o) const {
    for (std::size_t i = 0; i < Words; ++i)
      if (w[i] & o.w[i]) return true;
    return false;
  }
  Bits operator&(const Bits& o) const {
    Bits r;
    for (std::size_t i = 0; i < Words; ++i) r.w[i] = w[i] & o.w[i];
    return r;
  }
  Bits operator|(const Bits& o) const {
    Bits r;
    for (std::size_t i = 0; i < Words; ++i) r.w[i] = w[i] | o.w[i];
    return r;
  }
  Bits operator^(const Bits& o) const {
    Bits r;
    for (std::size_t i = 0; i < Words; ++i) r.w[i] = w[i] ^ o.w[i];
    return r;
  }
  Bits without(const Bits& o) const {
    Bits r;
    for (std::size_t i = 0; i < Words; ++i) r.w[i] = w[i] & ~o.w[i];
    return r;
  }
  Bits& operator|=(const Bits& o) {
    for (std::size_t i = 0; i < Words; ++i) w[i] |= o.w[i];
    return *this;
  }
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < Words; ++i)
      for (std::uint64_t x = w[i]; x; x &= x - 1) f(static_cast<int>(i * 64 + static_cast<std::size_t>(std::countr_zero(x))));
  }
  bool operator==(const Bits&) const = default;
};

template <std::size_t Words>
struct BitsHash {
  std::size_t operator()(const Bits<Words>& b) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (auto x : b.w) h = (h ^ x) * 0xff51afd7ed558ccdull;
    return static_cast<std::size_t>(h ^ (h >> 33));
  }
};

/// Iterative deepening on the solution size. Each node branches on the
/// lowest-indexed violation: an undominated vertex (add one vertex of its
/// closed neighborhood) or a confounded pair (add one vertex that separates
/// them). Candidates tried earlier are forbidden in later siblings, so each
/// set is visited at most once.
template <std::size_t Words>
class ExactSolver {
  using B = Bits<Words>;

 public:
  explicit ExactSolver(const Graph& g) : n_(g.order()), open_(static_cast<std::size_t>(n_)), closed_(static_cast<std::size_t>(n_)) {
    for (Vertex v = 0; v < n_; ++v) {
      for (Vertex w : g.neighbors(v)) open_[static_cast<std::size_t>(v)].set(w);
      closed_[static_cast<std::size_t>(v)] = open_[static_cast<std::size_t>(v)];
      closed_[static_cast<std::size_t>(v)].set(v);
      degree_.push_back(g.degree(v));
    }
    by_degree_ = all_vertices(g);
    std::stable_sort(by_degree_.begin(), by_degree_.end(),
                     [&](Vertex a, Vertex b) { return degree_[static_cast<std::size_t>(a)] > degree_[static_cast<std::size_t>(b)]; });
  }

  std::optional<CodeSet> solve(int max_size) {
    if (n_ == 0) return CodeSet{};
    for (int k = 0; k <= std::min(max_size, n_); ++k) {
      B chosen, forbidden;
      if (search(chosen, forbidden, 0, k, 0)) {
        std::vector<Vertex> out;
        result_.for_each([&](int v) { out.push_back(v); });
        return CodeSet(std::move(out));
      }
    }
    return std::nullopt;
  }

 private:
  // Returns the candidate set for the first violation, or nullopt when the
  // current set is already locating-dominating.
  std::optional<B> first_violation(const B& chosen) {
    signatures_.clear();
    for (int v = 0; v < n_; ++v) {
      if (chosen.test(v)) continue;
      B sig = open_[static_cast<std::size_t>(v)] & chosen;
      if (sig.none()) return closed_[static_cast<std::size_t>(v)];
      auto [it, inserted] = signatures_.emplace(sig, v);
      if (!inserted) {
        const int u = it->second;
        B sep = open_[static_cast<std::size_t>(u)] ^ open_[static_cast<std::size_t>(v)];
        sep.set(u);
        sep.set(v);
        return sep;
      }
    }
    return std::nullopt;
  }

  // Counting bound: a final set D of size k needs 2n - 3k <= sum of degrees
  // over D (each outside vertex has >= 1 neighbor in D, at most k of them
  // exactly one).
  bool degree_bound_allows(int size, int degree_sum, int remaining, const B& allowed) const {
    int extra = 0, taken = 0;
    for (Vertex v : by_degree_) {
      if (taken == remaining) break;
      if (allowed.test(v)) {
        extra += degree_[static_cast<std::size_t>(v)];
        ++taken;
      }
    }
    const int k = size + taken;
    return 2 * n_ - 3 * k <= degree_sum + extra;
  }

  // Greedy packing of undominated vertices whose candidate sets are
  // disjoint; each needs its own new vertex.
  bool packing_bound_allows(const B& chosen, int remaining, const B& allowed) const {
    B used;
    int need = 0;
    for (int v = 0; v < n_; ++v) {
      if (chosen.test(v) || open_[static_cast<std::size_t>(v)].intersects(chosen)) continue;
      B cand = closed_[static_cast<std::size_t>(v)] & allowed;
      if (cand.none()) return false;
      if (cand.intersects(used)) continue;
      used |= cand;
      if (++need > remaining) return false;
    }
    return true;
  }

  bool search(B& chosen, B& forbidden, int size, int limit, int degree_sum) {
    auto violation = first_violation(chosen);
    if (!violation) {
      result_ = chosen;
      return true;
    }
    const int remaining = limit - size;
    if (remaining == 0) return false;
    B full;
    for (int v = 0; v < n_; ++v) full.set(v);
    const B allowed = full.without(chosen).without(forbidden);
    if (!degree_bound_allows(size, degree_sum, remaining, allowed)) return false;
    if (!packing_bound_allows(chosen, remaining, allowed)) return false;

    const B candidates = *violation & allowed;
    std::vector<int> order;
    candidates.for_each([&](int v) { order.push_back(v); });
    const B saved_forbidden = forbidden;
    bool found = false;
    for (int c : order) {
      chosen.set(c);
      found = search(chosen, forbidden, size + 1, limit, degree_sum + degree_[static_cast<std::size_t>(c)]);
      chosen.reset(c);
      if (found) break;
      forbidden.set(c);
    }
    forbidden = saved_forbidden;
    return found;
  }

  int n_;
  std::vector<B> open_, closed_;
  std::vector<int> degree_;
  std::vector<Vertex> by_degree_;
  std::unordered_map<B, int, BitsHash<Words>> signatures_;
  B result_;
};

}  // namespace detail

/// A minimum locating-dominating set of g, or nullopt when `limit` is given
/// and every locating-dominating set is larger. The result is deterministic
/// and re-verified before it is returned.
inline std::optional<CodeSet> solve_exact(const Graph& g, std::optional<int> limit = std::nullopt,
                                          const SolverOptions& options = {}) {
  const int cap = std::min(options.vertex_cap, kSolverHardCap);
  if (g.order() > cap)
    throw RefusalError("solve_exact refuses n = " + std::to_string(g.order()) + " above the cap of " +
                       std::to_string(cap));
  const int max_size = limit ? std::max(-1, *limit) : g.order();
  if (max_size < 0) return std::nullopt;
  std::optional<CodeSet> out;
  if (g.order() <= 64)
    out = detail::ExactSolver<1>(g).solve(max_size);
  else
    out = detail::ExactSolver<2>(g).solve(max_size);
  if (out) {
    auto verdict = is_locating_dominating(g, *out);
    if (!verdict) throw InternalError("solve_exact produced an invalid set: " + verdict.describe());
  }
  return out;
}

inline int lds_number(const Graph& g, const SolverOptions& options = {}) {
  return static_cast<int>(solve_exact(g, std::nullopt, options)->size());
}

/// Decision version: does g admit a locating-dominating set of size <= budget?
inline bool has_lds_within(const Graph& g, int budget, const SolverOptions& options = {}) {
  if (budget < 0) return false;
  return solve_exact(g, budget, options).has_value();
}

}  // namespace ldsk
