#ifndef QP_TORSION_HPP
#define QP_TORSION_HPP

#include <cstdint>
#include <vector>

#include "qp/curve.hpp"

namespace qp {

struct ReductionCertificate {
  uint64_t p = 0;
  std::vector<uint64_t> counts;  // #E(F_q), one per residue field at p
};

struct TorsionTable {
  CurveSpec curve;
  std::vector<CurvePoint> points;       // the full torsion subgroup, sorted
  std::pair<long, long> structure;      // invariant factors (d1, d2), d1 | d2
  Int bound;                            // multiple of |points| from reductions
  std::vector<ReductionCertificate> certificate;

  size_t order() const { return points.size(); }
  bool contains(const CurvePoint& p) const;
};

// Multiple of the torsion order from reductions at the first good odd
// primes. Prime-to-p torsion injects into E(F_q) at every residue field of a
// good odd p, so each per-prime count constrains every prime factor except p
// itself; that gap is closed by inflating each count by a large power of its
// own p before taking the gcd across primes. Throws NoGoodPrimes when no
// usable primes exist.
Int torsion_bound(const CurveSpec& curve,
                  std::vector<ReductionCertificate>* cert_out = nullptr);

// All Q in E(K) with 2Q = P: the halving quartic is solved by root
// reconstruction, y recovered through the square test, and every candidate
// verified by doubling. For P = infinity this is the 2-torsion.
std::vector<CurvePoint> ec_halve(const CurveSpec& curve, const CurvePoint& p);

// The full torsion subgroup: 2-power part saturated by halving from the
// identity, odd part from division polynomials for the odd primes dividing
// the bound, then closure under addition. Verifies |T| divides the bound.
TorsionTable ec_torsion(const CurveSpec& curve);

}  // namespace qp

#endif
