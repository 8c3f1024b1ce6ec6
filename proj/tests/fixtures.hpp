// Shared fixtures: the six-facility workshop instance and independent
// brute-force oracles the solver under test never touches.
#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mass/layout.hpp"
#include "mass/matrix.hpp"

namespace fixtures {

inline std::string example_csv() {
  return "name,F_I,F_II,F_III,F_IV,F_V,F_VI\n"
         "F_I,-,20,-,-,-,25\n"
         "F_II,10,-,15,-,-,-\n"
         "F_III,-,-,-,30,-,-\n"
         "F_IV,-,-,50,-,-,40\n"
         "F_V,-,-,-,-,-,10\n"
         "F_VI,-,-,-,-,15,-\n";
}

inline mass::LoadMatrix example_matrix() { return mass::parse_load_matrix(example_csv()); }

// 64m x 22m floor, 2m aisles, six cells -> 2x3 grid of 20m x 10m cells.
inline mass::FloorPlan example_plan() { return mass::build_floor_plan(64, 22, 2, 6); }

// The published starting layout: pairs (I,II), (III,IV), (V,VI) left to right.
inline mass::BlockLayout example_initial_layout() {
  return mass::BlockLayout(example_plan(),
                           {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {0, 2}, {1, 2}});
}

// The published improved layout: (III,IV) and (V,VI) trade columns.
inline mass::BlockLayout example_final_layout() {
  return mass::BlockLayout(example_plan(),
                           {{0, 0}, {1, 0}, {0, 2}, {1, 2}, {0, 1}, {1, 1}});
}

// Exhaustive assignment oracle via next_permutation; nullopt when every
// permutation crosses a forbidden cell.
inline std::optional<mass::Load> assignment_oracle(const mass::CostMatrix& c) {
  std::vector<int> perm(c.n);
  std::iota(perm.begin(), perm.end(), 0);
  std::optional<mass::Load> best;
  do {
    mass::Load total = 0;
    bool feasible = true;
    for (int i = 0; i < c.n && feasible; ++i) {
      const mass::Cell& x = c.at(i, perm[i]);
      if (!x.has_value())
        feasible = false;
      else
        total += *x;
    }
    if (feasible && (!best || total < *best)) best = total;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// Random cost matrix; when `plant_permutation` a random permutation of cells
/// is forced finite so a perfect assignment always exists.
inline mass::CostMatrix random_cost_matrix(std::mt19937_64& rng, int n, double forbid_prob,
                                           bool plant_permutation, mass::Load lo = 0,
                                           mass::Load hi = 99) {
  mass::CostMatrix c;
  c.n = n;
  c.cost.assign(static_cast<std::size_t>(n) * n, std::nullopt);
  c.row_potential.assign(n, 0);
  c.col_potential.assign(n, 0);
  std::uniform_int_distribution<mass::Load> value(lo, hi);
  std::bernoulli_distribution forbid(forbid_prob);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!forbid(rng)) c.at(i, j) = value(rng);
  if (plant_permutation) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (int i = 0; i < n; ++i)
      if (!c.at(i, perm[i]).has_value()) c.at(i, perm[i]) = value(rng);
  }
  return c;
}

/// Hall-violating matrix: `k` chosen rows are finite only inside a set of
/// k-1 columns, so no perfect assignment exists.
inline mass::CostMatrix infeasible_cost_matrix(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> pick_k(2, n);
  const int k = pick_k(rng);
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::shuffle(idx.begin(), idx.end(), rng);
  std::vector<int> rows(idx.begin(), idx.begin() + k);
  std::shuffle(idx.begin(), idx.end(), rng);
  std::vector<int> cols(idx.begin(), idx.begin() + k - 1);

  mass::CostMatrix c = random_cost_matrix(rng, n, 0.0, false);
  for (int i : rows)
    for (int j = 0; j < n; ++j)
      if (std::find(cols.begin(), cols.end(), j) == cols.end()) c.at(i, j) = std::nullopt;
  return c;
}

/// Random small layout instance with integral cell geometry.
struct RandomInstance {
  mass::LoadMatrix matrix;
  mass::FloorPlan plan;
  mass::BlockLayout seed;
};

inline RandomInstance random_instance(std::mt19937_64& rng, int max_n = 6) {
  std::uniform_int_distribution<int> pick_n(1, max_n);
  const int n = pick_n(rng);

  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("A" + std::to_string(i));
  std::vector<mass::Cell> flows(static_cast<std::size_t>(n) * n, std::nullopt);
  std::bernoulli_distribution has_flow(0.6);
  std::uniform_int_distribution<mass::Load> value(0, 50);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && has_flow(rng)) flows[static_cast<std::size_t>(i) * n + j] = value(rng);
  mass::LoadMatrix m(std::move(names), std::move(flows));

  std::uniform_int_distribution<int> pick_rows(1, 3);
  const int rows = pick_rows(rng);
  std::uniform_int_distribution<int> extra(0, 2);
  int cols = (n + rows - 1) / rows + extra(rng);
  // Keep the slot count oracle-friendly.
  while (rows * cols > 9 && cols > (n + rows - 1) / rows) --cols;
  const mass::FloorPlan plan = mass::build_floor_plan(cols * 10.0 + (cols - 1) * 2.0,
                                                      rows * 8.0 + (rows - 1) * 2.0, 2.0, rows, cols);

  std::vector<mass::Slot> slots;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) slots.push_back({r, c});
  std::shuffle(slots.begin(), slots.end(), rng);
  slots.resize(n);
  return RandomInstance{std::move(m), plan, mass::BlockLayout(plan, std::move(slots))};
}

}  // namespace fixtures
