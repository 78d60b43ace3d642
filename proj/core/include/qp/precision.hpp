#ifndef QP_PRECISION_HPP
#define QP_PRECISION_HPP

#include <vector>

namespace qp {

// Working-precision policy. QP_PRECISION_BITS overrides the 256-bit start,
// QP_MAX_PRECISION_BITS caps escalation (default 4096).
long default_precision();
long max_precision();

// Escalation rungs: start, 2*start, 4*start, then the cap.
std::vector<long> precision_ladder();

}  // namespace qp

#endif
