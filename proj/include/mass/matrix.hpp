// Load-matrix representation, CSV ingestion, composite-movement ranking and
// conversion to an assignment cost matrix with forbidden cells.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mass/errors.hpp"

namespace mass {

/// Material flow quantity in load-units. Integral by design: every cost
/// comparison in the assignment stage is exact.
using Load = std::int64_t;

/// A matrix cell; std::nullopt marks a vacant (load matrix) or forbidden
/// (cost matrix) cell. The big-M device is kept symbolic, never a sentinel.
using Cell = std::optional<Load>;

/// Square matrix of directed material flows between facilities.
/// Diagonal cells are always vacant; non-vacant flows are >= 0.
class LoadMatrix {
 public:
  /// Validates all invariants; throws ValidationError on violation.
  LoadMatrix(std::vector<std::string> names, std::vector<Cell> flows);

  int size() const { return n_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int i) const { return names_.at(i); }

  /// Flow from facility `from` to facility `to` (nullopt = vacant).
  const Cell& flow(int from, int to) const { return flows_.at(static_cast<std::size_t>(from) * n_ + to); }

  /// Flow with vacant read as zero.
  Load flow_or_zero(int from, int to) const { return flow(from, to).value_or(0); }

  /// Back-and-forth movement between a pair, vacant counted as 0.
  Load composite(int a, int b) const { return flow_or_zero(a, b) + flow_or_zero(b, a); }

  bool operator==(const LoadMatrix&) const = default;

 private:
  int n_;
  std::vector<std::string> names_;
  std::vector<Cell> flows_;  // row-major n*n
};

/// Parses the load-matrix CSV format: header `name,<n facility names>`, then
/// one row per facility. Cells are non-negative integers, `-` or empty
/// (vacant). Throws ParseError naming the offending line/column.
LoadMatrix parse_load_matrix(std::string_view text);

/// Canonical CSV serialization (LF endings, `-` for vacant cells).
/// parse_load_matrix(serialize_load_matrix(m)) == m.
std::string serialize_load_matrix(const LoadMatrix& m);

/// One ranked pair: facilities a < b and their composite movement.
struct CompositeEntry {
  int a;
  int b;
  Load composite;

  bool operator==(const CompositeEntry&) const = default;
};

/// All pairs with composite > 0, sorted descending by composite,
/// ties broken lexicographically by (a, b).
using CompositeRanking = std::vector<CompositeEntry>;

CompositeRanking composite_movements(const LoadMatrix& m);

/// Assignment cost matrix. Forbidden cells are exactly the vacant cells of
/// the source load matrix; row/column potentials accumulate the amounts
/// subtracted by the Hungarian reduction steps (zero at construction).
struct CostMatrix {
  int n = 0;
  std::vector<Cell> cost;            // row-major n*n, nullopt = forbidden
  std::vector<Load> row_potential;   // A_i
  std::vector<Load> col_potential;   // B_j

  Cell& at(int i, int j) { return cost.at(static_cast<std::size_t>(i) * n + j); }
  const Cell& at(int i, int j) const { return cost.at(static_cast<std::size_t>(i) * n + j); }
};

/// cost[i][j] = flow(i->j) where non-vacant, Forbidden elsewhere (the
/// diagonal included); potentials start at zero.
CostMatrix to_cost_matrix(const LoadMatrix& m);

}  // namespace mass
