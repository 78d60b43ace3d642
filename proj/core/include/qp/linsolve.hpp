#ifndef QP_LINSOLVE_HPP
#define QP_LINSOLVE_HPP

#include <vector>

#include "qp/rational.hpp"

namespace qp {

using RatMatrix = std::vector<std::vector<Rational>>;
using RatVector = std::vector<Rational>;

enum class SolveStatus { kSolved, kNoSolution, kUnderdetermined };

struct LinSolveResult {
  SolveStatus status = SolveStatus::kNoSolution;
  RatVector solution;  // populated only when kSolved
};

// Exact Gaussian elimination on a rectangular system. Pivots are chosen by
// largest height within the column block to keep intermediate growth down.
LinSolveResult linsolve(const RatMatrix& a, const RatVector& rhs);

// Incremental exact row space: feeds vectors one at a time and tracks rank.
class RowSpan {
 public:
  explicit RowSpan(size_t dim) : dim_(dim) {}

  // True if the vector enlarged the span.
  bool add(RatVector v);
  // Reduces v against the current rows; zero result means dependence.
  RatVector reduce(RatVector v) const;
  size_t rank() const { return rows_.size(); }
  size_t dim() const { return dim_; }

 private:
  size_t dim_;
  std::vector<RatVector> rows_;   // each normalized with pivot 1
  std::vector<size_t> pivots_;    // pivot column of rows_[i]
};

}  // namespace qp

#endif
