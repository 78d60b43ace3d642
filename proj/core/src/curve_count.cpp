#include "qp/curve_count.hpp"

#include "qp/errors.hpp"

namespace qp {

uint64_t ec_count_points(long a, const ResidueField& rf) {
  if (!rf.q_fits_enumeration())
    throw InputError("residue field too large for enumeration");
  const uint64_t q = rf.q_small();

  ResidueField::Elem ae = a >= 0 ? rf.from_fp(static_cast<uint64_t>(a))
                                 : rf.neg(rf.from_fp(static_cast<uint64_t>(-a)));
  if (rf.is_zero(ae)) throw SingularReduction("curve coefficient vanishes");

  // Mark the nonzero squares of F_q.
  std::vector<uint8_t> sq(q, 0);
  {
    ResidueField::Elem y = rf.zero();
    for (uint64_t i = 0; i < q; ++i) {
      y = rf.from_index(i);
      if (!rf.is_zero(y)) sq[rf.index(rf.mul(y, y))] = 1;
    }
  }

  uint64_t count = 1;  // infinity
  for (uint64_t i = 0; i < q; ++i) {
    ResidueField::Elem x = rf.from_index(i);
    ResidueField::Elem rhs = rf.mul(x, rf.add(rf.mul(x, x), ae));  // x(x^2 + a)
    if (rf.is_zero(rhs)) {
      count += 1;
    } else if (sq[rf.index(rhs)]) {
      count += 2;
    }
  }
  return count;
}

}  // namespace qp
