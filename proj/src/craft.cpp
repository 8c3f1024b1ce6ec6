#include "mass/craft.hpp"

#include <algorithm>

namespace mass {

namespace {

double cost_of(const std::vector<Slot>& placement, const BlockLayout& base, const LoadMatrix& m,
               DistanceModel model) {
  return total_cost(base.with_placement(placement), m, model).total;
}

std::vector<Slot> empty_slots(const BlockLayout& layout) {
  std::vector<Slot> out;
  for (int r = 0; r < layout.plan().rows; ++r)
    for (int c = 0; c < layout.plan().cols; ++c)
      if (Slot s{r, c}; !layout.facility_at(s).has_value()) out.push_back(s);
  return out;
}

}  // namespace

std::optional<ImproveResult> improve_once(const BlockLayout& layout, const LoadMatrix& m,
                                          const CraftConfig& cfg) {
  const int n = layout.facility_count();
  const double before = total_cost(layout, m, cfg.model).total;

  double best_cost = before;
  std::optional<std::vector<Slot>> best_placement;
  std::vector<int> best_facilities;

  // Steepest descent with a fixed enumeration order; strict `<` keeps the
  // earliest candidate on ties.
  auto consider = [&](std::vector<Slot> placement, std::vector<int> facilities) {
    const double cost = cost_of(placement, layout, m, cfg.model);
    if (cost < best_cost) {
      best_cost = cost;
      best_placement = std::move(placement);
      best_facilities = std::move(facilities);
    }
  };

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::vector<Slot> p = layout.placement();
      std::swap(p[i], p[j]);
      consider(std::move(p), {i, j});
    }

  const std::vector<Slot> empties = empty_slots(layout);
  for (int i = 0; i < n; ++i)
    for (const Slot& s : empties) {
      std::vector<Slot> p = layout.placement();
      p[i] = s;
      consider(std::move(p), {i});
    }

  for (int c1 = 0; c1 < layout.plan().cols; ++c1)
    for (int c2 = c1 + 1; c2 < layout.plan().cols; ++c2) {
      std::vector<Slot> p = layout.placement();
      std::vector<int> moved;
      for (int f = 0; f < n; ++f) {
        if (p[f].col == c1)
          p[f].col = c2;
        else if (p[f].col == c2)
          p[f].col = c1;
        else
          continue;
        moved.push_back(f);
      }
      if (!moved.empty()) consider(std::move(p), std::move(moved));
    }

  if (cfg.enable_three_way)
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int c = b + 1; c < n; ++c)
          for (int rot = 0; rot < 2; ++rot) {
            std::vector<Slot> p = layout.placement();
            if (rot == 0) {  // a -> b's slot -> c's slot -> a's slot
              p[a] = layout.slot_of(b);
              p[b] = layout.slot_of(c);
              p[c] = layout.slot_of(a);
            } else {
              p[a] = layout.slot_of(c);
              p[c] = layout.slot_of(b);
              p[b] = layout.slot_of(a);
            }
            consider(std::move(p), {a, b, c});
          }

  if (!best_placement) return std::nullopt;
  return ImproveResult{layout.with_placement(std::move(*best_placement)),
                       SwapStep{std::move(best_facilities), before, best_cost}};
}

CraftResult run_craft(BlockLayout seed, const LoadMatrix& m, const CraftConfig& cfg) {
  if (cfg.max_iterations < 1) throw ValidationError("max_iterations must be at least 1");
  CraftResult result{std::move(seed), {}, 0, false};
  for (int pass = 0; pass < cfg.max_iterations; ++pass) {
    std::optional<ImproveResult> step = improve_once(result.layout, m, cfg);
    if (!step) {
      result.final_cost = total_cost(result.layout, m, cfg.model).total;
      return result;
    }
    result.layout = std::move(step->layout);
    result.trace.push_back(std::move(step->step));
  }
  result.iterations_exhausted = true;
  result.final_cost = total_cost(result.layout, m, cfg.model).total;
  return result;
}

OracleResult brute_force_optimum(const LoadMatrix& m, const FloorPlan& plan, DistanceModel model) {
  const int n = m.size();
  if (n > 8)
    throw TooLargeError("exhaustive placement search is limited to 8 facilities (got " +
                        std::to_string(n) + ")");
  if (plan.capacity() < n)
    throw ValidationError("floor plan has " + std::to_string(plan.capacity()) + " slots for " +
                          std::to_string(n) + " facilities");

  std::vector<Slot> slots;
  for (int r = 0; r < plan.rows; ++r)
    for (int c = 0; c < plan.cols; ++c) slots.push_back(Slot{r, c});

  // Depth-first over facilities in index order, slots in (row, col) order:
  // the first placement reaching a given cost is the lexicographically
  // smallest, so strict improvement keeps exactly that one.
  std::optional<double> best_cost;
  std::vector<Slot> best_placement;
  std::vector<Slot> current(n);
  std::vector<char> used(slots.size(), 0);
  BlockLayout probe(plan, {});

  auto descend = [&](auto&& self, int f) -> void {
    if (f == n) {
      const double cost = total_cost(probe.with_placement(current), m, model).total;
      if (!best_cost || cost < *best_cost) {
        best_cost = cost;
        best_placement = current;
      }
      return;
    }
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if (used[s]) continue;
      used[s] = 1;
      current[f] = slots[s];
      self(self, f + 1);
      used[s] = 0;
    }
  };
  descend(descend, 0);

  return OracleResult{*best_cost, BlockLayout(plan, std::move(best_placement))};
}

}  // namespace mass
