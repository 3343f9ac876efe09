#pragma once

#include <optional>
#include <vector>

#include "mhg/errors.hpp"

namespace mhg {

template <class F>
struct LinSolveResult {
  std::vector<F> solution;
  bool consistent = false;
  int rank = 0;
  bool unique = false;
};

// Exact Gaussian elimination over a field F for A x = b (A is rows x cols,
// possibly overdetermined).  Reports rank, consistency, and uniqueness;
// free variables, if any, are set to zero.
template <class F>
LinSolveResult<F> solve_linear_system(std::vector<std::vector<F>> a, std::vector<F> b) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  std::vector<int> pivot_col_of_row;
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int sel = -1;
    for (int r = row; r < rows; ++r) {
      if (!a[r][col].is_zero()) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(a[sel], a[row]);
    std::swap(b[sel], b[row]);
    F inv = F(1) / a[row][col];
    for (int c = col; c < cols; ++c) a[row][c] = a[row][c] * inv;
    b[row] = b[row] * inv;
    for (int r = 0; r < rows; ++r) {
      if (r == row || a[r][col].is_zero()) continue;
      F f = a[r][col];
      for (int c = col; c < cols; ++c) a[r][c] = a[r][c] - f * a[row][c];
      b[r] = b[r] - f * b[row];
    }
    pivot_col_of_row.push_back(col);
    ++row;
  }
  LinSolveResult<F> res;
  res.rank = row;
  res.consistent = true;
  for (int r = row; r < rows; ++r) {
    if (!b[r].is_zero()) {
      res.consistent = false;
      break;
    }
  }
  res.unique = (res.rank == cols);
  res.solution.assign(cols, F(0));
  if (res.consistent)
    for (int r = 0; r < row; ++r) res.solution[pivot_col_of_row[r]] = b[r];
  return res;
}

}  // namespace mhg
