#include "mass/pipeline.hpp"

#include <random>
#include <utility>

namespace mass {

namespace {

// Negated symmetrized composites: minimizing this matrix maximizes the total
// composite movement of the chosen pairing. Diagonal stays forbidden.
CostMatrix composite_cost_matrix(const LoadMatrix& m) {
  CostMatrix c = to_cost_matrix(m);
  for (int i = 0; i < c.n; ++i)
    for (int j = 0; j < c.n; ++j)
      c.at(i, j) = i == j ? Cell{} : Cell{-m.composite(i, j)};
  return c;
}

Assignment seed_assignment(const LoadMatrix& m, MatchingObjective objective) {
  // A single facility has nothing to pair with: the identity assignment is
  // the only sensible seed, and the solver would reject the all-forbidden
  // 1x1 matrix outright.
  if (m.size() == 1) {
    Assignment a;
    a.n = 1;
    a.sigma = {0};
    a.objective = 0;
    a.certificate_k = 1;
    return a;
  }
  switch (objective) {
    case MatchingObjective::Minimize:
      return solve_assignment(to_cost_matrix(m));
    case MatchingObjective::MaximizeComposite:
      return solve_assignment(composite_cost_matrix(m));
  }
  return {};  // unreachable
}

}  // namespace

PipelineResult run_mass(const LoadMatrix& m, const FloorPlan& plan, const CraftConfig& cfg,
                        MatchingObjective objective, UnitOrder seed_order) {
  Assignment a = seed_assignment(m, objective);
  BlockLayout seed = initial_layout(a, m, plan, seed_order);
  const double initial = total_cost(seed, m, cfg.model).total;
  CraftResult improved = run_craft(seed, m, cfg);
  return PipelineResult{std::move(a),
                        std::move(seed),
                        initial,
                        std::move(improved.layout),
                        improved.final_cost,
                        initial - improved.final_cost,
                        std::move(improved.trace)};
}

BenchmarkReport benchmark_seeds(const LoadMatrix& m, const FloorPlan& plan, const CraftConfig& cfg,
                                int trials, std::uint64_t rng_seed, UnitOrder seed_order) {
  if (trials < 1) throw ValidationError("benchmark needs at least one random trial");

  BenchmarkReport report;
  report.mass_iterations =
      static_cast<int>(run_mass(m, plan, cfg, MatchingObjective::Minimize, seed_order).trace.size());

  std::vector<Slot> slots;
  for (int r = 0; r < plan.rows; ++r)
    for (int c = 0; c < plan.cols; ++c) slots.push_back(Slot{r, c});
  const int n = m.size();
  if (static_cast<int>(slots.size()) < n)
    throw ValidationError("floor plan has fewer slots than facilities");

  for (int t = 0; t < trials; ++t) {
    const std::uint64_t seed = rng_seed + static_cast<std::uint64_t>(t);
    std::mt19937_64 rng(seed);
    // Partial Fisher-Yates: the first n entries become a uniform injective
    // placement.
    std::vector<Slot> deck = slots;
    for (int i = 0; i < n; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, deck.size() - 1);
      std::swap(deck[i], deck[pick(rng)]);
    }
    deck.resize(n);
    CraftResult r = run_craft(BlockLayout(plan, std::move(deck)), m, cfg);
    report.random_trials.push_back(
        BenchmarkTrial{seed, static_cast<int>(r.trace.size()), r.final_cost});
  }

  if (n <= 8) report.global_optimum = brute_force_optimum(m, plan, cfg.model).optimum;
  return report;
}

}  // namespace mass
