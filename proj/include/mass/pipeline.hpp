// The MASS algorithm end-to-end, and the seeding benchmark.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mass/craft.hpp"
#include "mass/hungarian.hpp"
#include "mass/layout.hpp"
#include "mass/matrix.hpp"

namespace mass {

/// Objective for the assignment seeding step.
///  - Minimize: treat the load matrix as the cost matrix (paper-faithful).
///  - MaximizeComposite: solve on negated symmetrized composites, pairing
///    facilities with the heaviest back-and-forth traffic instead.
enum class MatchingObjective { Minimize, MaximizeComposite };

struct PipelineResult {
  Assignment assignment;
  BlockLayout initial_layout;
  double initial_cost = 0;   // L
  BlockLayout final_layout;
  double final_cost = 0;     // L*
  double improvement = 0;    // L - L*
  SwapTrace trace;
};

/// Runs the full sequence: cost-matrix conversion, assignment solve, initial
/// layout, CRAFT descent. Infeasibility from the assignment stage propagates.
PipelineResult run_mass(const LoadMatrix& m, const FloorPlan& plan, const CraftConfig& cfg,
                        MatchingObjective objective = MatchingObjective::Minimize,
                        UnitOrder seed_order = UnitOrder::CompositeDescending);

struct BenchmarkTrial {
  std::uint64_t seed = 0;
  int iterations = 0;
  double final_cost = 0;
};

struct BenchmarkReport {
  int mass_iterations = 0;
  std::vector<BenchmarkTrial> random_trials;
  std::optional<double> global_optimum;  // attached when n <= 8
};

/// Runs CRAFT once from the MASS seed and from `trials` uniformly random
/// placements (trial t uses seed rng_seed + t; reproducible). Requires
/// trials >= 1.
BenchmarkReport benchmark_seeds(const LoadMatrix& m, const FloorPlan& plan, const CraftConfig& cfg,
                                int trials, std::uint64_t rng_seed,
                                UnitOrder seed_order = UnitOrder::CompositeDescending);

}  // namespace mass
