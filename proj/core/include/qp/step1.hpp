#ifndef QP_STEP1_HPP
#define QP_STEP1_HPP

#include "qp/h3.hpp"
#include "qp/quad_point.hpp"

namespace qp {

// Step I of the parameter scan (t in K): every affine s-value drawn from the
// x-coordinates of E1(K) and E2(K) and the first coordinates of H3(K) is
// pushed through x^2 = 4s/(s^2+4), y^2 = (s^2-4)/(s^2+4), and the resulting
// point is placed in K or in the smallest quadratic extension. Values with
// s^2 + 4 = 0 admit no Fermat point and are skipped; points of degree 4
// over K fall outside the quadratic census and are discarded.
std::vector<QuadraticPointRecord> step1_scan(const FieldPtr& field,
                                             const TorsionTable& e1_torsion,
                                             const TorsionTable& e2_torsion);

}  // namespace qp

#endif
