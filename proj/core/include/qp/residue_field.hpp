#ifndef QP_RESIDUE_FIELD_HPP
#define QP_RESIDUE_FIELD_HPP

#include <cstdint>
#include <vector>

#include "qp/fppoly.hpp"

namespace qp {

// F_q = F_p[u]/(g) with g monic irreducible of degree k, q = p^k. Elements
// are coefficient vectors of length k (fixed size, not trimmed).
class ResidueField {
 public:
  using Elem = std::vector<uint64_t>;

  ResidueField(uint64_t p, FpPoly g);

  uint64_t p() const { return p_; }
  int ext_degree() const { return k_; }
  const FpPoly& modulus() const { return g_; }
  // p^k as arbitrary precision; q_fits tells whether it fits an enumeration.
  const Int& q() const { return q_; }
  bool q_fits_enumeration() const { return q_small_ != 0; }
  uint64_t q_small() const { return q_small_; }

  Elem zero() const { return Elem(static_cast<size_t>(k_), 0); }
  Elem one() const;
  Elem from_fp(uint64_t a) const;
  Elem from_poly(FpPoly f) const;  // reduces mod g

  bool is_zero(const Elem& a) const;
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;
  Elem pow(Elem a, const Int& e) const;

  // Euler criterion: a^((q-1)/2) == 1. Throws ZeroInput on zero.
  bool is_square(const Elem& a) const;

  // Mixed-radix index in [0, q) for enumeration workloads.
  uint64_t index(const Elem& a) const;
  Elem from_index(uint64_t idx) const;

  // ---- polynomials over F_q (coefficients lowest degree first) ----
  using Poly = std::vector<Elem>;
  int pdeg(const Poly& f) const;
  void ptrim(Poly& f) const;
  Poly pmul(const Poly& a, const Poly& b) const;
  Poly pmod(Poly num, const Poly& den) const;
  Poly pgcd(Poly a, Poly b) const;
  Poly pmonic(Poly a) const;
  Poly pderivative(const Poly& f) const;
  Poly ppowmod(Poly base, const Int& e, const Poly& m) const;
  bool psquarefree(const Poly& f) const;
  // Number of roots in F_q: deg gcd(x^q - x, f).
  int count_roots(const Poly& f) const;

 private:
  uint64_t p_;
  FpPoly g_;
  int k_;
  Int q_;
  uint64_t q_small_;
  FpCtx c_;
};

}  // namespace qp

#endif
