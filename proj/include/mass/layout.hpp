// Floor-plan geometry, block layouts, inter-facility distance models and the
// construction of the initial layout from an assignment.
#pragma once

#include <optional>
#include <vector>

#include "mass/hungarian.hpp"
#include "mass/matrix.hpp"

namespace mass {

/// Inter-facility distance model.
///  - Paper: aisle width for facilities sharing a column, otherwise
///    (cell width + aisle) * |column difference| with rows ignored. This is
///    the model implied by the worked example's cost arithmetic.
///  - RectilinearCentroid: |dx| + |dy| between slot centroids (the
///    conventional choice, default for non-reproduction runs).
enum class DistanceModel { Paper, RectilinearCentroid };

/// Rectangular floor divided into a rows x cols grid of uniform facility
/// cells separated by aisles:
///   cols*cell_w_m + (cols-1)*aisle_m = width_m
///   rows*cell_h_m + (rows-1)*aisle_m = height_m
struct FloorPlan {
  double width_m = 0;
  double height_m = 0;
  double aisle_m = 0;
  int rows = 0;
  int cols = 0;
  double cell_w_m = 0;
  double cell_h_m = 0;

  int capacity() const { return rows * cols; }

  bool operator==(const FloorPlan&) const = default;
};

/// Picks the grid shape with rows*cols >= n minimizing the slot count, ties
/// broken toward the shape whose cols/rows ratio is closest to the floor's
/// width/height ratio (then fewer rows, then fewer cols). Throws
/// ValidationError when no shape with positive cell dimensions can hold n.
FloorPlan build_floor_plan(double width_m, double height_m, double aisle_m, int n);

/// Same plan derivation with the grid shape fixed by the caller.
FloorPlan build_floor_plan(double width_m, double height_m, double aisle_m, int rows, int cols);

struct Slot {
  int row = 0;
  int col = 0;

  bool operator==(const Slot&) const = default;
};

/// Injective placement of facilities 0..n-1 onto the plan's slot grid.
class BlockLayout {
 public:
  /// Validates bounds and injectivity; throws ValidationError.
  BlockLayout(FloorPlan plan, std::vector<Slot> placement);

  const FloorPlan& plan() const { return plan_; }
  int facility_count() const { return static_cast<int>(placement_.size()); }
  Slot slot_of(int facility) const { return placement_.at(facility); }
  const std::vector<Slot>& placement() const { return placement_; }

  /// Facility occupying the slot, or nullopt when the slot is empty.
  std::optional<int> facility_at(Slot s) const;

  BlockLayout with_placement(std::vector<Slot> placement) const;

  bool operator==(const BlockLayout&) const = default;

 private:
  FloorPlan plan_;
  std::vector<Slot> placement_;
};

/// Distance between two placed facilities in meters. Symmetric, zero iff
/// i == j, strictly positive otherwise.
double distance(const BlockLayout& layout, int i, int j, DistanceModel model);

/// One l_ij * d_ij contribution to the load function.
struct CostTerm {
  int from = 0;
  int to = 0;
  Load flow = 0;
  double distance = 0;
  double contribution = 0;
};

/// Load function L with its per-pair breakdown, terms ordered by (from, to).
struct CostReport {
  double total = 0;
  std::vector<CostTerm> terms;
};

CostReport total_cost(const BlockLayout& layout, const LoadMatrix& m, DistanceModel model);

/// Ordering of assignment units (pairs/chains) across columns.
///  - CompositeDescending: highest intra-unit composite leftmost (heuristic).
///  - IndexAscending: lowest facility index leftmost, which reproduces the
///    worked example's pictured column order.
enum class UnitOrder { CompositeDescending, IndexAscending };

/// Builds the initial block layout from an assignment: sigma's 2-cycles
/// become same-column pairs across the aisle, longer cycles become chains of
/// consecutive adjacent slots, units placed left-to-right per `order`.
/// Throws ValidationError when the plan has fewer slots than facilities.
BlockLayout initial_layout(const Assignment& a, const LoadMatrix& m, const FloorPlan& plan,
                           UnitOrder order = UnitOrder::CompositeDescending);

}  // namespace mass
