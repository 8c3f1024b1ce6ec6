// CRAFT improvement engine: steepest-descent swap search over block layouts,
// plus an exhaustive placement oracle for desk-scale instances.
#pragma once

#include <optional>
#include <vector>

#include "mass/layout.hpp"

namespace mass {

/// One applied improvement. `facilities` lists every facility whose slot
/// changed, ascending: two for a plain swap (one when the partner slot was
/// empty), three for a 3-cycle, four when two paired columns exchange places.
struct SwapStep {
  std::vector<int> facilities;
  double cost_before = 0;
  double cost_after = 0;
};

/// Ordered improvement steps; cost strictly decreases at every step.
using SwapTrace = std::vector<SwapStep>;

struct CraftConfig {
  bool enable_three_way = false;
  DistanceModel model = DistanceModel::RectilinearCentroid;
  int max_iterations = 1000;  // safety valve, must be >= 1
};

struct ImproveResult {
  BlockLayout layout;
  SwapStep step;
};

/// Evaluates every candidate move, recomputing L for each: all unordered
/// facility/slot swaps (empty slots join in as a virtual zero-flow facility),
/// every exchange of two whole columns, and all 3-cycles of facility triples
/// when enabled. Returns the steepest strictly-improving candidate, ties
/// resolved toward the smallest facility index set then smallest rotation;
/// nullopt when no candidate strictly decreases L.
std::optional<ImproveResult> improve_once(const BlockLayout& layout, const LoadMatrix& m,
                                          const CraftConfig& cfg);

struct CraftResult {
  BlockLayout layout;
  SwapTrace trace;
  double final_cost = 0;
  bool iterations_exhausted = false;
};

/// Applies improve_once until no improvement remains or cfg.max_iterations
/// passes have been spent (reported in the result, not an error).
CraftResult run_craft(BlockLayout seed, const LoadMatrix& m, const CraftConfig& cfg);

struct OracleResult {
  double optimum = 0;
  BlockLayout layout;  // lexicographically smallest optimal placement
};

/// Exact global minimum of L over all injective placements, by enumeration.
/// Guarded: throws TooLargeError for more than 8 facilities.
OracleResult brute_force_optimum(const LoadMatrix& m, const FloorPlan& plan, DistanceModel model);

}  // namespace mass
