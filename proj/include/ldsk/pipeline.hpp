#pragma once

#include <optional>
#include <vector>

#include "ldsk/cluster_kernel.hpp"
#include "ldsk/maxleaf_kernel.hpp"
#include "ldsk/modulator.hpp"
#include "ldsk/trace.hpp"

namespace ldsk {

struct KernelizeOptions {
  std::optional<std::vector<Vertex>> modulator;
  std::optional<std::vector<Vertex>> host;
  std::optional<int> max_leaf;
};

inline KernelResult kernelize(const Instance& inst, Parameter parameter, const KernelizeOptions& options = {}) {
  switch (parameter) {
    case Parameter::kCluster:
      return kernelize_cluster(inst, options.modulator ? std::optional<Modulator>(make_modulator(
                                                             inst.graph, ModulatorKind::kCluster, *options.modulator))
                                                       : std::nullopt);
    case Parameter::kClique:
      return kernelize_clique(inst, options.modulator ? std::optional<Modulator>(make_modulator(
                                                            inst.graph, ModulatorKind::kClique, *options.modulator))
                                                      : std::nullopt);
    case Parameter::kMaxLeaf: {
      MaxLeafOptions ml;
      ml.host = options.host;
      ml.max_leaf = options.max_leaf;
      return kernelize_maxleaf(inst, ml);
    }
  }
  throw InternalError("unknown parameter");
}

inline CodeSet lift_solution(const KernelTrace& trace, const CodeSet& kernel_solution) {
  return trace.parameter == Parameter::kMaxLeaf ? lift_maxleaf_solution(trace, kernel_solution)
                                                : lift_cluster_solution(trace, kernel_solution);
}

}  // namespace ldsk
