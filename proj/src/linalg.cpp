#include "qrec/linalg.hpp"

#include <stdexcept>

namespace qrec {

LinearSolution solve_linear(const QMatrix& a, const QVector& rhs) {
  const size_t nrows = a.size();
  if (rhs.size() != nrows) throw std::invalid_argument("right hand side length mismatch");
  const size_t ncols = nrows == 0 ? 0 : a[0].size();

  std::vector<QVector> aug(nrows);
  for (size_t i = 0; i < nrows; ++i) {
    if (a[i].size() != ncols) throw std::invalid_argument("ragged matrix");
    aug[i] = a[i];
    aug[i].push_back(rhs[i]);
  }

  std::vector<size_t> pivot_col;
  size_t pr = 0;
  for (size_t col = 0; col < ncols && pr < nrows; ++col) {
    size_t piv = pr;
    while (piv < nrows && aug[piv][col].is_zero()) ++piv;
    if (piv == nrows) continue;
    std::swap(aug[pr], aug[piv]);
    const Rational inv = aug[pr][col].inverse();
    for (size_t j = col; j <= ncols; ++j) aug[pr][j] *= inv;
    for (size_t i = 0; i < nrows; ++i) {
      if (i == pr || aug[i][col].is_zero()) continue;
      const Rational f = aug[i][col];
      for (size_t j = col; j <= ncols; ++j) aug[i][j] -= f * aug[pr][j];
    }
    pivot_col.push_back(col);
    ++pr;
  }

  LinearSolution out;
  out.consistent = true;
  for (size_t i = pr; i < nrows; ++i)
    if (!aug[i][ncols].is_zero()) out.consistent = false;

  std::vector<bool> is_pivot(ncols, false);
  for (size_t c : pivot_col) is_pivot[c] = true;

  if (out.consistent) {
    out.particular.assign(ncols, Rational(0));
    for (size_t r = 0; r < pivot_col.size(); ++r) out.particular[pivot_col[r]] = aug[r][ncols];
  }

  for (size_t col = 0; col < ncols; ++col) {
    if (is_pivot[col]) continue;
    QVector v(ncols, Rational(0));
    v[col] = Rational(1);
    for (size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -aug[r][col];
    out.kernel.push_back(std::move(v));
  }
  return out;
}

int matrix_rank(QMatrix a) {
  const size_t nrows = a.size();
  const size_t ncols = nrows == 0 ? 0 : a[0].size();
  size_t pr = 0;
  for (size_t col = 0; col < ncols && pr < nrows; ++col) {
    size_t piv = pr;
    while (piv < nrows && a[piv][col].is_zero()) ++piv;
    if (piv == nrows) continue;
    std::swap(a[pr], a[piv]);
    for (size_t i = pr + 1; i < nrows; ++i) {
      if (a[i][col].is_zero()) continue;
      const Rational f = a[i][col] / a[pr][col];
      for (size_t j = col; j < ncols; ++j) a[i][j] -= f * a[pr][j];
    }
    ++pr;
  }
  return static_cast<int>(pr);
}

}  // namespace qrec
