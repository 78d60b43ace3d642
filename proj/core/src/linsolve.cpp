#include "qp/linsolve.hpp"

#include <utility>

#include "qp/errors.hpp"

namespace qp {

LinSolveResult linsolve(const RatMatrix& a, const RatVector& rhs) {
  const size_t m = a.size();
  if (rhs.size() != m) throw InputError("linsolve: rhs size mismatch");
  const size_t n = m == 0 ? 0 : a[0].size();
  for (const auto& row : a)
    if (row.size() != n) throw InputError("linsolve: ragged matrix");

  RatMatrix w(m, RatVector(n + 1));
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < n; ++j) w[i][j] = a[i][j];
    w[i][n] = rhs[i];
  }

  std::vector<size_t> pivot_col;
  size_t row = 0;
  for (size_t col = 0; col < n && row < m; ++col) {
    size_t best = m;
    Int best_h = 0;
    for (size_t i = row; i < m; ++i) {
      if (w[i][col].is_zero()) continue;
      Int h = w[i][col].height();
      if (best == m || h > best_h) {
        best = i;
        best_h = h;
      }
    }
    if (best == m) continue;
    std::swap(w[row], w[best]);
    const Rational inv = w[row][col].inverse();
    for (size_t j = col; j <= n; ++j) w[row][j] *= inv;
    for (size_t i = 0; i < m; ++i) {
      if (i == row || w[i][col].is_zero()) continue;
      const Rational f = w[i][col];
      for (size_t j = col; j <= n; ++j) w[i][j] -= f * w[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }

  for (size_t i = row; i < m; ++i)
    if (!w[i][n].is_zero()) return {SolveStatus::kNoSolution, {}};

  if (pivot_col.size() < n) return {SolveStatus::kUnderdetermined, {}};

  RatVector x(n);
  for (size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = w[i][n];
  return {SolveStatus::kSolved, std::move(x)};
}

RatVector RowSpan::reduce(RatVector v) const {
  if (v.size() != dim_) throw InputError("RowSpan: dimension mismatch");
  for (size_t i = 0; i < rows_.size(); ++i) {
    const Rational& c = v[pivots_[i]];
    if (c.is_zero()) continue;
    const Rational f = c;
    for (size_t j = pivots_[i]; j < dim_; ++j) v[j] -= f * rows_[i][j];
  }
  return v;
}

bool RowSpan::add(RatVector v) {
  v = reduce(std::move(v));
  size_t p = dim_;
  for (size_t j = 0; j < dim_; ++j) {
    if (!v[j].is_zero()) {
      p = j;
      break;
    }
  }
  if (p == dim_) return false;
  const Rational inv = v[p].inverse();
  for (size_t j = p; j < dim_; ++j) v[j] *= inv;
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

}  // namespace qp
