#ifndef QP_NF_MINPOLY_HPP
#define QP_NF_MINPOLY_HPP

#include "qp/quad_ext.hpp"

namespace qp {

// Monic minimal polynomial over Q, from exact linear algebra on powers in
// the ambient Q-vector space (dimension n, or 2n inside a relative
// quadratic extension). The degree always divides the ambient degree.
RatPoly min_poly(const FieldElement& e);
RatPoly min_poly(const RelElement& e);

// Degree over Q of the subfield Q(x, y) of the ambient field, computed as
// the rank of the exact span of the monomials x^i y^j. Only ranks are
// needed, so no primitive element is ever constructed.
int generated_degree(const RelElement& x, const RelElement& y);
int generated_degree(const FieldElement& x, const FieldElement& y);

}  // namespace qp

#endif
