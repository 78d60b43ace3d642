#ifndef QP_CF_ROUND_HPP
#define QP_CF_ROUND_HPP

#include <optional>

#include "qp/rational.hpp"

namespace qp {

// Best continued-fraction convergent p/q of an exactly-known rational value
// with q <= den_bound. Returns nothing when the best convergent still misses
// the input by more than 2^(-precision_bits/2); that residual test is what
// separates "this float encodes a small rational" from noise.
std::optional<Rational> cf_round(const Rational& approx, const Int& den_bound,
                                 long precision_bits);

}  // namespace qp

#endif
