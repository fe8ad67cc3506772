#pragma once

#include "ldsk/clique_reduction.hpp"
#include "ldsk/cluster_kernel.hpp"
#include "ldsk/composition.hpp"
#include "ldsk/error.hpp"
#include "ldsk/graph.hpp"
#include "ldsk/io.hpp"
#include "ldsk/layout.hpp"
#include "ldsk/lds.hpp"
#include "ldsk/max_leaf.hpp"
#include "ldsk/maxleaf_kernel.hpp"
#include "ldsk/modulator.hpp"
#include "ldsk/oracles.hpp"
#include "ldsk/pipeline.hpp"
#include "ldsk/trace.hpp"
