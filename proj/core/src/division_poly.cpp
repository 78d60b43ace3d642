#include "qp/division_poly.hpp"

#include <map>

#include "qp/errors.hpp"

namespace qp {

namespace {

// psi_n split into its y-parity: even-index psi are y * (poly in x), odd are
// pure polynomials in x. We track the x-part and substitute y^2 = x^3 + a x
// whenever two y's meet.
struct Psi {
  RatPoly xpart;
  bool has_y = false;
};

Psi psi_mul(const Psi& u, const Psi& v, const RatPoly& y2) {
  Psi r;
  r.xpart = u.xpart * v.xpart;
  if (u.has_y && v.has_y) {
    r.xpart *= y2;
    r.has_y = false;
  } else {
    r.has_y = u.has_y || v.has_y;
  }
  return r;
}

Psi psi_pow3(const Psi& u, const RatPoly& y2) {
  return psi_mul(psi_mul(u, u, y2), u, y2);
}

}  // namespace

RatPoly division_poly(long a, long ell) {
  if (ell != 3 && ell != 5 && ell != 7)
    throw UnsupportedPrime("division polynomials provided for ell in {3,5,7}");

  const Rational ra(a);
  const RatPoly y2{Rational(0), ra, Rational(0), Rational(1)};  // x^3 + a x

  // Seeds for b = 0 (curve y^2 = x^3 + a x):
  //   psi_1 = 1
  //   psi_2 = 2y
  //   psi_3 = 3x^4 + 6a x^2 - a^2
  //   psi_4 = 4y (x^6 + 5a x^4 - 5a^2 x^2 - a^3)
  std::map<long, Psi> psi;
  psi[1] = Psi{RatPoly::constant(1), false};
  psi[2] = Psi{RatPoly::constant(2), true};
  psi[3] = Psi{RatPoly{-ra * ra, Rational(0), ra * Rational(6), Rational(0), Rational(3)}, false};
  psi[4] = Psi{RatPoly{-ra * ra * ra, Rational(0), -ra * ra * Rational(5),
                       Rational(0), ra * Rational(5), Rational(0), Rational(1)}
                   .scaled(Rational(4)),
               true};

  // psi_{2m+1} = psi_{m+2} psi_m^3 - psi_{m-1} psi_{m+1}^3
  auto odd_step = [&](long m) {
    Psi lhs = psi_mul(psi.at(m + 2), psi_pow3(psi.at(m), y2), y2);
    Psi rhs = psi_mul(psi.at(m - 1), psi_pow3(psi.at(m + 1), y2), y2);
    if (lhs.has_y != rhs.has_y) throw Error("division polynomial parity mismatch");
    psi[2 * m + 1] = Psi{lhs.xpart - rhs.xpart, lhs.has_y};
  };

  // psi_{2m} = (psi_m / 2y) (psi_{m+2} psi_{m-1}^2 - psi_{m-2} psi_{m+1}^2)
  auto even_step = [&](long m) {
    Psi t1 = psi_mul(psi.at(m + 2), psi_mul(psi.at(m - 1), psi.at(m - 1), y2), y2);
    Psi t2 = psi_mul(psi.at(m - 2), psi_mul(psi.at(m + 1), psi.at(m + 1), y2), y2);
    if (t1.has_y != t2.has_y) throw Error("division polynomial parity mismatch");
    Psi diff{t1.xpart - t2.xpart, t1.has_y};
    Psi prod = psi_mul(psi.at(m), diff, y2);
    // prod = 2y * psi_{2m}; psi_m and diff parities are opposite, so prod
    // carries y^2 already substituted out. Divide the x-part by 2*(x^3+ax).
    if (prod.has_y) throw Error("division polynomial parity mismatch");
    auto [q, r] = poly_div_rem(prod.xpart, y2.scaled(Rational(2)));
    if (!r.is_zero()) throw Error("division polynomial division not exact");
    psi[2 * m] = Psi{q, true};
  };

  if (ell >= 5) odd_step(2);             // psi_5
  if (ell >= 7) {
    even_step(3);                        // psi_6
    odd_step(3);                         // psi_7
  }

  const Psi& out = psi.at(ell);
  if (out.has_y) throw Error("odd division polynomial carries y");
  return out.xpart;
}

}  // namespace qp
