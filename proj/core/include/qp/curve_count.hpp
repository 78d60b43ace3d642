#ifndef QP_CURVE_COUNT_HPP
#define QP_CURVE_COUNT_HPP

#include "qp/residue_field.hpp"

namespace qp {

// #E(F_q) for E: y^2 = x^3 + a*x, counted by full enumeration with a
// precomputed square table; includes the point at infinity. Requires
// q <= 10^7 (enumeration cap) and a != 0 in F_q.
uint64_t ec_count_points(long a, const ResidueField& rf);

}  // namespace qp

#endif
