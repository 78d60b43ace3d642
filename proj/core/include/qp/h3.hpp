#ifndef QP_H3_HPP
#define QP_H3_HPP

#include "qp/torsion.hpp"

namespace qp {

// Affine points of the quartic model H3: r^2 = (s^2 + 4)(s^2 - 4) over K,
// obtained from the full E1(K) list through the isomorphism
// (x, y) -> (2(x+2)/(x-2), 16y/(x-2)^2), with the identity landing on
// (2, 0). The two points of H3 at infinity correspond to trivial Fermat
// points and never enter the scan.
std::vector<std::pair<FieldElement, FieldElement>> h3_points(
    const FieldPtr& field, const TorsionTable& e1_torsion);

}  // namespace qp

#endif
