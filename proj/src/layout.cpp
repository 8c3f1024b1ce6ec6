#include "mass/layout.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace mass {

namespace {

struct GridShape {
  int rows = 0;
  int cols = 0;
};

FloorPlan plan_for_shape(double width_m, double height_m, double aisle_m, GridShape s) {
  FloorPlan p;
  p.width_m = width_m;
  p.height_m = height_m;
  p.aisle_m = aisle_m;
  p.rows = s.rows;
  p.cols = s.cols;
  p.cell_w_m = (width_m - (s.cols - 1) * aisle_m) / s.cols;
  p.cell_h_m = (height_m - (s.rows - 1) * aisle_m) / s.rows;
  return p;
}

void check_plan_inputs(double width_m, double height_m, double aisle_m) {
  if (width_m <= 0 || height_m <= 0)
    throw ValidationError("floor dimensions must be positive");
  if (aisle_m < 0) throw ValidationError("aisle width must be non-negative");
}

}  // namespace

FloorPlan build_floor_plan(double width_m, double height_m, double aisle_m, int n) {
  check_plan_inputs(width_m, height_m, aisle_m);
  if (n < 1) throw ValidationError("facility count must be at least 1");

  const double floor_aspect = width_m / height_m;
  std::optional<FloorPlan> best;
  auto better = [&](const FloorPlan& a, const FloorPlan& b) {
    if (a.capacity() != b.capacity()) return a.capacity() < b.capacity();
    const double da = std::abs(static_cast<double>(a.cols) / a.rows - floor_aspect);
    const double db = std::abs(static_cast<double>(b.cols) / b.rows - floor_aspect);
    if (da != db) return da < db;
    if (a.rows != b.rows) return a.rows < b.rows;
    return a.cols < b.cols;
  };
  for (int rows = 1; rows <= n; ++rows) {
    const int cols = (n + rows - 1) / rows;
    FloorPlan p = plan_for_shape(width_m, height_m, aisle_m, {rows, cols});
    if (p.cell_w_m <= 0 || p.cell_h_m <= 0) continue;
    if (!best || better(p, *best)) best = p;
  }
  if (!best) {
    std::ostringstream os;
    os << "no grid with positive cell dimensions holds " << n << " facilities on a " << width_m
       << "m x " << height_m << "m floor with " << aisle_m << "m aisles";
    throw ValidationError(os.str());
  }
  return *best;
}

FloorPlan build_floor_plan(double width_m, double height_m, double aisle_m, int rows, int cols) {
  check_plan_inputs(width_m, height_m, aisle_m);
  if (rows < 1 || cols < 1) throw ValidationError("grid shape must have positive rows and cols");
  FloorPlan p = plan_for_shape(width_m, height_m, aisle_m, {rows, cols});
  if (p.cell_w_m <= 0 || p.cell_h_m <= 0) {
    std::ostringstream os;
    os << "a " << rows << "x" << cols << " grid leaves no positive cell dimensions on a "
       << width_m << "m x " << height_m << "m floor with " << aisle_m << "m aisles";
    throw ValidationError(os.str());
  }
  return p;
}

BlockLayout::BlockLayout(FloorPlan plan, std::vector<Slot> placement)
    : plan_(plan), placement_(std::move(placement)) {
  if (static_cast<int>(placement_.size()) > plan_.capacity())
    throw ValidationError("more facilities than slots on the floor plan");
  for (std::size_t f = 0; f < placement_.size(); ++f) {
    const Slot s = placement_[f];
    if (s.row < 0 || s.row >= plan_.rows || s.col < 0 || s.col >= plan_.cols)
      throw ValidationError("facility " + std::to_string(f + 1) + " placed outside the grid");
    for (std::size_t g = 0; g < f; ++g)
      if (placement_[g] == s)
        throw ValidationError("facilities " + std::to_string(g + 1) + " and " +
                              std::to_string(f + 1) + " share a slot");
  }
}

std::optional<int> BlockLayout::facility_at(Slot s) const {
  for (std::size_t f = 0; f < placement_.size(); ++f)
    if (placement_[f] == s) return static_cast<int>(f);
  return std::nullopt;
}

BlockLayout BlockLayout::with_placement(std::vector<Slot> placement) const {
  return BlockLayout(plan_, std::move(placement));
}

double distance(const BlockLayout& layout, int i, int j, DistanceModel model) {
  if (i == j) return 0;
  const FloorPlan& p = layout.plan();
  const Slot a = layout.slot_of(i), b = layout.slot_of(j);
  switch (model) {
    case DistanceModel::Paper:
      if (a.col == b.col) return p.aisle_m;
      return (p.cell_w_m + p.aisle_m) * std::abs(a.col - b.col);
    case DistanceModel::RectilinearCentroid: {
      const double dx = (a.col - b.col) * (p.cell_w_m + p.aisle_m);
      const double dy = (a.row - b.row) * (p.cell_h_m + p.aisle_m);
      return std::abs(dx) + std::abs(dy);
    }
  }
  return 0;  // unreachable
}

CostReport total_cost(const BlockLayout& layout, const LoadMatrix& m, DistanceModel model) {
  if (m.size() != layout.facility_count())
    throw ValidationError("load matrix and layout disagree on the facility count");
  CostReport report;
  for (int from = 0; from < m.size(); ++from)
    for (int to = 0; to < m.size(); ++to) {
      const Cell& flow = m.flow(from, to);
      if (!flow.has_value()) continue;
      CostTerm t;
      t.from = from;
      t.to = to;
      t.flow = *flow;
      t.distance = distance(layout, from, to, model);
      t.contribution = static_cast<double>(t.flow) * t.distance;
      report.total += t.contribution;
      report.terms.push_back(t);
    }
  return report;
}

namespace {

// sigma's cycles, each listed from its smallest member, ordered by that member.
std::vector<std::vector<int>> cycle_units(const Assignment& a) {
  std::vector<std::vector<int>> units;
  std::vector<char> seen(a.n, 0);
  for (int i = 0; i < a.n; ++i) {
    if (seen[i]) continue;
    std::vector<int> cycle;
    for (int j = i; !seen[j]; j = a.sigma[j]) {
      seen[j] = 1;
      cycle.push_back(j);
    }
    units.push_back(std::move(cycle));
  }
  return units;
}

// Movement a unit keeps local: the composite along its consecutive members.
Load unit_weight(const std::vector<int>& unit, const LoadMatrix& m) {
  Load w = 0;
  for (std::size_t k = 0; k + 1 < unit.size(); ++k) w += m.composite(unit[k], unit[k + 1]);
  if (unit.size() > 2) w += m.composite(unit.back(), unit.front());
  return w;
}

}  // namespace

BlockLayout initial_layout(const Assignment& a, const LoadMatrix& m, const FloorPlan& plan,
                           UnitOrder order) {
  if (a.n != m.size())
    throw ValidationError("assignment and load matrix disagree on the facility count");
  if (plan.capacity() < a.n)
    throw ValidationError("floor plan has " + std::to_string(plan.capacity()) +
                          " slots for " + std::to_string(a.n) + " facilities");

  std::vector<std::vector<int>> units = cycle_units(a);
  if (order == UnitOrder::CompositeDescending)
    std::stable_sort(units.begin(), units.end(),
                     [&](const std::vector<int>& u, const std::vector<int>& v) {
                       return unit_weight(u, m) > unit_weight(v, m);
                     });

  std::vector<Slot> placement(a.n);

  // Column-aligned mode: every unit starts a fresh column, running down the
  // first column and serpentining through any further columns it needs.
  int columns_needed = 0;
  for (const auto& u : units)
    columns_needed += static_cast<int>((u.size() + plan.rows - 1) / plan.rows);
  if (plan.rows >= 2 && columns_needed <= plan.cols) {
    int col = 0;
    for (const auto& u : units) {
      int used = 0;
      for (std::size_t k = 0; k < u.size(); ++k, ++used) {
        const int within = used % plan.rows;
        const int c = col + used / plan.rows;
        const int local = (used / plan.rows) % 2;  // serpentine inside the unit
        placement[u[k]] = Slot{local == 0 ? within : plan.rows - 1 - within, c};
      }
      col += (static_cast<int>(u.size()) + plan.rows - 1) / plan.rows;
    }
    return BlockLayout(plan, std::move(placement));
  }

  // Dense mode: stream every unit in order through the serpentine
  // column-major slot sequence.
  std::vector<Slot> stream;
  stream.reserve(plan.capacity());
  for (int c = 0; c < plan.cols; ++c)
    for (int r = 0; r < plan.rows; ++r)
      stream.push_back(Slot{c % 2 == 0 ? r : plan.rows - 1 - r, c});
  std::size_t next = 0;
  for (const auto& u : units)
    for (int f : u) placement[f] = stream[next++];
  return BlockLayout(plan, std::move(placement));
}

}  // namespace mass
