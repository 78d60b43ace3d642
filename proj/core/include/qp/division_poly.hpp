#ifndef QP_DIVISION_POLY_HPP
#define QP_DIVISION_POLY_HPP

#include "qp/ratpoly.hpp"

namespace qp {

// Division polynomial psi_ell for y^2 = x^3 + a*x, ell in {3, 5, 7}: a
// polynomial in x of degree (ell^2 - 1)/2 whose roots are the x-coordinates
// of the nonzero ell-torsion. Throws UnsupportedPrime otherwise.
RatPoly division_poly(long a, long ell);

}  // namespace qp

#endif
