#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ldsk/graph.hpp"

namespace ldsk {

/// A graph together with the budget d of the decision question
/// "is there a locating-dominating set of size at most d?".
struct Instance {
  Graph graph;
  int budget = 0;
};

enum class Parameter { kCluster, kClique, kMaxLeaf };

inline const char* to_string(Parameter p) {
  switch (p) {
    case Parameter::kCluster: return "cluster";
    case Parameter::kClique: return "clique";
    case Parameter::kMaxLeaf: return "maxleaf";
  }
  return "?";
}

// Rule records. Every vertex id below is an id of the original graph, except
// PathReplaced::replacement which names vertices that exist only in the kernel.

/// Twin rule: `removed` had at least two surviving mutual twins.
struct TwinRemoved {
  Vertex removed = kNoVertex;
  std::vector<Vertex> twins;
  int budget_delta = 1;
};

/// A clique of a pattern was deleted. Cliques list their members in
/// position order (sorted by modulator signature), so index l of `removed`
/// corresponds to index l of every clique in `remaining`.
struct CliqueRemoved {
  bool trivial = true;
  std::string key;
  std::vector<Vertex> removed;
  std::vector<std::vector<Vertex>> remaining;
  std::vector<Vertex> tau;  // representatives of the removed clique's twin pairs
  int budget_delta = 1;
};

/// A long subdivision path had its inner 5-sections replaced by five fresh
/// vertices.
struct PathReplaced {
  std::vector<Vertex> path;    // original ids, in walking order
  std::vector<int> sections;   // 5-sectioning sizes, sum == path.size()
  std::array<Vertex, 5> replacement{};  // kernel ids of the fresh path
  int budget_delta = 0;
};

using RuleRecord = std::variant<TwinRemoved, CliqueRemoved, PathReplaced>;

/// Everything needed to map a kernel solution back to the input graph.
struct KernelTrace {
  Parameter parameter = Parameter::kCluster;
  Graph original;
  int original_budget = 0;
  std::vector<Vertex> modulator;  // cluster / clique kernels
  std::vector<Vertex> host;       // max-leaf kernel
  std::vector<RuleRecord> records;
  std::vector<Vertex> kernel_to_original;  // kNoVertex for fresh vertices
  int kernel_budget = 0;
  bool collapsed_to_no = false;  // budget went negative; kernel is (K1, 0)

  int total_delta() const {
    int sum = 0;
    for (const auto& r : records) std::visit([&](const auto& x) { sum += x.budget_delta; }, r);
    return sum;
  }
};

/// One explicit inequality `value <= bound` about a kernel.
struct BoundCheck {
  std::string name;
  std::uint64_t value = 0;
  std::uint64_t bound = 0;

  bool holds() const noexcept { return value <= bound; }
};

struct SizeReport {
  int vertices = 0;
  int modulator_size = 0;
  int pattern_count = 0;
  int path_count = 0;
  std::optional<int> max_leaf;
  std::vector<BoundCheck> checks;

  bool all_hold() const {
    for (const auto& c : checks)
      if (!c.holds()) return false;
    return true;
  }
};

struct KernelResult {
  Instance instance;
  KernelTrace trace;
  SizeReport report;
};

/// 2^e, saturating at the largest representable value.
inline std::uint64_t pow2_saturating(std::uint64_t e) {
  return e >= 63 ? std::numeric_limits<std::uint64_t>::max() : (std::uint64_t{1} << e);
}

inline std::uint64_t mul_saturating(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

inline std::uint64_t add_saturating(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

}  // namespace ldsk
