#ifndef QP_POLYROOTS_HPP
#define QP_POLYROOTS_HPP

#include <vector>

#include "qp/bigcomplex.hpp"
#include "qp/ratpoly.hpp"

namespace qp {

// All complex roots of a squarefree rational polynomial, simultaneously
// refined by Durand-Kerner iteration at the requested precision and returned
// sorted by (Re, Im). Residuals are certified below
// 2^(-precision + deg * height_margin); throws NonConvergence past the
// iteration cap so callers can escalate precision.
std::vector<BigComplex> complex_roots(const RatPoly& poly, long precision);

// Same iteration for a polynomial already given by complex coefficients
// (used for the embedded images of number-field polynomials). Coefficients
// are highest precision wins; poly must be monic with coeffs.size() == deg+1,
// constant term first.
std::vector<BigComplex> complex_roots_monic(const std::vector<BigComplex>& coeffs,
                                            long precision);

}  // namespace qp

#endif
