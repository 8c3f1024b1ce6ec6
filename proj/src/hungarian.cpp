#include "mass/hungarian.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace mass {

namespace {

std::string index_list(const std::vector<int>& xs) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) os << ", ";
    os << xs[i] + 1;
  }
  os << '}';
  return os.str();
}

// Kuhn augmenting path over zero cells; deterministic: rows processed in
// ascending order, columns tried in ascending order.
bool try_augment(const CostMatrix& c, int i, std::vector<char>& visited, std::vector<int>& match_col) {
  for (int j = 0; j < c.n; ++j) {
    if (visited[j] || c.at(i, j) != Cell{0}) continue;
    visited[j] = 1;
    if (match_col[j] < 0 || try_augment(c, match_col[j], visited, match_col)) {
      match_col[j] = i;
      return true;
    }
  }
  return false;
}

std::vector<int> max_zero_matching(const CostMatrix& c) {
  std::vector<int> match_col(c.n, -1);
  for (int i = 0; i < c.n; ++i) {
    std::vector<char> visited(c.n, 0);
    try_augment(c, i, visited, match_col);
  }
  return match_col;
}

// True when rows [from, n) can all be matched to distinct unused zero columns.
bool completable(const CostMatrix& c, int from, const std::vector<char>& col_used) {
  std::vector<int> match_col(c.n, -1);
  std::function<bool(int, std::vector<char>&)> augment = [&](int i, std::vector<char>& visited) {
    for (int j = 0; j < c.n; ++j) {
      if (col_used[j] || visited[j] || c.at(i, j) != Cell{0}) continue;
      visited[j] = 1;
      if (match_col[j] < 0 || augment(match_col[j], visited)) {
        match_col[j] = i;
        return true;
      }
    }
    return false;
  };
  for (int i = from; i < c.n; ++i) {
    std::vector<char> visited(c.n, 0);
    if (!augment(i, visited)) return false;
  }
  return true;
}

}  // namespace

CostMatrix reduce(CostMatrix c) {
  for (int i = 0; i < c.n; ++i) {
    Load mn = std::numeric_limits<Load>::max();
    bool any = false;
    for (int j = 0; j < c.n; ++j)
      if (const Cell& x = c.at(i, j); x.has_value()) {
        mn = std::min(mn, *x);
        any = true;
      }
    if (!any)
      throw InfeasibleError("row " + std::to_string(i + 1) + " has no finite cells", {i}, {});
    for (int j = 0; j < c.n; ++j)
      if (Cell& x = c.at(i, j); x.has_value()) *x -= mn;
    c.row_potential[i] += mn;
  }
  for (int j = 0; j < c.n; ++j) {
    Load mn = std::numeric_limits<Load>::max();
    bool any = false;
    for (int i = 0; i < c.n; ++i)
      if (const Cell& x = c.at(i, j); x.has_value()) {
        mn = std::min(mn, *x);
        any = true;
      }
    if (!any)
      throw InfeasibleError("column " + std::to_string(j + 1) + " has no finite cells", {}, {j});
    for (int i = 0; i < c.n; ++i)
      if (Cell& x = c.at(i, j); x.has_value()) *x -= mn;
    c.col_potential[j] += mn;
  }
  return c;
}

LineCover min_line_cover(const CostMatrix& c) {
  const std::vector<int> match_col = max_zero_matching(c);
  std::vector<int> row_match(c.n, -1);
  for (int j = 0; j < c.n; ++j)
    if (match_col[j] >= 0) row_match[match_col[j]] = j;

  // Koenig: alternate from unmatched rows along zero edges; the cover is the
  // unreached rows plus the reached columns.
  std::vector<char> row_reached(c.n, 0), col_reached(c.n, 0);
  std::vector<int> stack;
  for (int i = 0; i < c.n; ++i)
    if (row_match[i] < 0) {
      row_reached[i] = 1;
      stack.push_back(i);
    }
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < c.n; ++j) {
      if (col_reached[j] || c.at(i, j) != Cell{0}) continue;
      col_reached[j] = 1;
      if (int i2 = match_col[j]; i2 >= 0 && !row_reached[i2]) {
        row_reached[i2] = 1;
        stack.push_back(i2);
      }
    }
  }

  LineCover cover;
  for (int i = 0; i < c.n; ++i)
    if (!row_reached[i]) cover.rows.push_back(i);
  for (int j = 0; j < c.n; ++j)
    if (col_reached[j]) cover.cols.push_back(j);
  cover.k = static_cast<int>(cover.rows.size() + cover.cols.size());
  return cover;
}

CostMatrix adjust(CostMatrix c, const LineCover& cover) {
  if (cover.k >= c.n)
    throw std::invalid_argument("adjust requires a cover with k < n (k = " +
                                std::to_string(cover.k) + ", n = " + std::to_string(c.n) + ")");
  std::vector<char> row_cov(c.n, 0), col_cov(c.n, 0);
  for (int i : cover.rows) row_cov[i] = 1;
  for (int j : cover.cols) col_cov[j] = 1;

  Load delta = std::numeric_limits<Load>::max();
  bool any = false;
  for (int i = 0; i < c.n; ++i) {
    if (row_cov[i]) continue;
    for (int j = 0; j < c.n; ++j) {
      if (col_cov[j]) continue;
      if (const Cell& x = c.at(i, j); x.has_value()) {
        delta = std::min(delta, *x);
        any = true;
      }
    }
  }
  if (!any) {
    // Every uncovered cell is forbidden: the uncovered rows have finite
    // cells only in the covered columns, and there are fewer of those.
    std::vector<int> rows, cols;
    for (int i = 0; i < c.n; ++i)
      if (!row_cov[i]) rows.push_back(i);
    cols = cover.cols;
    throw InfeasibleError("no perfect assignment avoids the forbidden cells: rows " +
                              index_list(rows) + " have finite cells only in columns " +
                              index_list(cols),
                          rows, cols);
  }

  for (int i = 0; i < c.n; ++i)
    for (int j = 0; j < c.n; ++j) {
      Cell& x = c.at(i, j);
      if (!x.has_value()) continue;
      if (!row_cov[i] && !col_cov[j])
        *x -= delta;
      else if (row_cov[i] && col_cov[j])
        *x += delta;
    }
  for (int i = 0; i < c.n; ++i)
    if (!row_cov[i]) c.row_potential[i] += delta;
  for (int j = 0; j < c.n; ++j)
    if (col_cov[j]) c.col_potential[j] -= delta;
  return c;
}

Assignment solve_assignment(const CostMatrix& input) {
  CostMatrix r = reduce(input);
  LineCover cover = min_line_cover(r);
  while (cover.k < r.n) {
    r = adjust(std::move(r), cover);
    cover = min_line_cover(r);
  }

  // With k = n a perfect zero matching exists and the optimal assignments
  // are exactly the perfect matchings on zero cells; pick the
  // lexicographically smallest sigma among them.
  Assignment a;
  a.n = r.n;
  a.certificate_k = cover.k;
  a.sigma.assign(r.n, -1);
  std::vector<char> col_used(r.n, 0);
  for (int i = 0; i < r.n; ++i) {
    bool placed = false;
    for (int j = 0; j < r.n && !placed; ++j) {
      if (col_used[j] || r.at(i, j) != Cell{0}) continue;
      col_used[j] = 1;
      if (completable(r, i + 1, col_used)) {
        a.sigma[i] = j;
        placed = true;
      } else {
        col_used[j] = 0;
      }
    }
    if (!placed)
      throw std::logic_error("zero matching extraction failed despite k = n certificate");
  }
  for (int i = 0; i < r.n; ++i) a.objective += *input.at(i, a.sigma[i]);
  return a;
}

}  // namespace mass
