// Exact assignment solver with forbidden cells: row/column reduction,
// minimum line cover, dual adjustment and the k = n optimality certificate.
#pragma once

#include <vector>

#include "mass/matrix.hpp"

namespace mass {

/// Minimum set of row/column lines covering every zero of a reduced matrix.
/// k = |rows| + |cols| equals the maximum matching size on zero cells.
struct LineCover {
  std::vector<int> rows;
  std::vector<int> cols;
  int k = 0;
};

/// A perfect assignment over finite cells.
struct Assignment {
  int n = 0;
  std::vector<int> sigma;   // row i -> assigned column sigma[i]
  Load objective = 0;       // sum of cost[i][sigma[i]] in the original matrix
  int certificate_k = 0;    // line count at termination; n on success
};

/// Subtracts each row's finite minimum, then each column's, accumulating the
/// amounts into row_potential/col_potential. Forbidden cells stay forbidden.
/// Throws InfeasibleError if a row or column has no finite cell.
CostMatrix reduce(CostMatrix c);

/// Minimum line cover of the zero cells (Koenig construction over a maximum
/// matching; deterministic lowest-index tie-breaks).
LineCover min_line_cover(const CostMatrix& c);

/// Standard Hungarian adjustment: delta = smallest finite uncovered value,
/// subtracted from uncovered cells and added to doubly-covered ones, with the
/// potentials updated to keep the constant-shift bookkeeping consistent.
/// Throws std::invalid_argument when cover.k >= n (nothing to adjust) and
/// InfeasibleError when every uncovered cell is forbidden.
CostMatrix adjust(CostMatrix c, const LineCover& cover);

/// Minimum-cost assignment using only finite cells. Loops
/// reduce -> cover -> (k = n ? extract : adjust). Among optimal assignments
/// the lexicographically smallest sigma is returned. Throws InfeasibleError
/// (with a blocking row/column set) when no perfect finite assignment exists.
Assignment solve_assignment(const CostMatrix& c);

}  // namespace mass
