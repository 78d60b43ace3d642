#ifndef QP_FPPOLY_HPP
#define QP_FPPOLY_HPP

#include <cstdint>
#include <vector>

#include "qp/ratpoly.hpp"

namespace qp {

// Arithmetic mod a word-sized odd prime.
struct FpCtx {
  uint64_t p;
  uint64_t add(uint64_t a, uint64_t b) const { return (a + b) % p; }
  uint64_t sub(uint64_t a, uint64_t b) const { return (a + p - b) % p; }
  uint64_t mul(uint64_t a, uint64_t b) const {
    return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % p);
  }
  uint64_t neg(uint64_t a) const { return a == 0 ? 0 : p - a; }
  uint64_t pow(uint64_t a, uint64_t e) const;
  uint64_t inv(uint64_t a) const;  // DivisionByZero on 0
};

// Dense polynomial over F_p, coefficients lowest degree first, trimmed.
using FpPoly = std::vector<uint64_t>;

int fp_deg(const FpPoly& f);
void fp_trim(FpPoly& f);
FpPoly fp_add(const FpCtx& c, FpPoly a, const FpPoly& b);
FpPoly fp_sub(const FpCtx& c, FpPoly a, const FpPoly& b);
FpPoly fp_mul(const FpCtx& c, const FpPoly& a, const FpPoly& b);
FpPoly fp_scale(const FpCtx& c, FpPoly a, uint64_t s);
// num = den*q + r
std::pair<FpPoly, FpPoly> fp_divrem(const FpCtx& c, FpPoly num, const FpPoly& den);
FpPoly fp_mod(const FpCtx& c, FpPoly num, const FpPoly& den);
FpPoly fp_gcd(const FpCtx& c, FpPoly a, FpPoly b);  // monic
FpPoly fp_monic(const FpCtx& c, FpPoly a);
FpPoly fp_derivative(const FpCtx& c, const FpPoly& a);
// base^e mod m
FpPoly fp_powmod(const FpCtx& c, FpPoly base, const Int& e, const FpPoly& m);

// Reduction of a rational polynomial mod p. Throws BadPrime when p divides a
// coefficient denominator.
FpPoly fp_reduce(const RatPoly& f, uint64_t p);
uint64_t fp_reduce_rational(const Rational& r, uint64_t p);

// Complete factorization of minpoly mod p: distinct-degree splitting followed
// by fixed-seed Cantor-Zassenhaus. Throws BadPrime for p = 2, p dividing a
// denominator, or a non-squarefree reduction.
std::vector<std::pair<FpPoly, int>> split_minpoly_mod_p(const RatPoly& minpoly,
                                                        uint64_t p);

// Same, but factors any squarefree monic reduction (internal building block).
std::vector<FpPoly> fp_factor_squarefree(const FpCtx& c, const FpPoly& f);

}  // namespace qp

#endif
