#ifndef QP_NFPOLY_HPP
#define QP_NFPOLY_HPP

#include <utility>
#include <vector>

#include "qp/field_element.hpp"

namespace qp {

// Dense polynomial with coefficients in a number field K, lowest degree
// first. Thin value type: the field is carried by the coefficients.
class NfPoly {
 public:
  NfPoly() = default;
  NfPoly(FieldPtr field, std::vector<FieldElement> coeffs);
  static NfPoly zero(const FieldPtr& field) { return NfPoly(field, {}); }
  static NfPoly from_ratpoly(const FieldPtr& field, const RatPoly& p);

  const FieldPtr& field() const { return field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const;
  const std::vector<FieldElement>& coeffs() const { return c_; }
  FieldElement coeff(size_t i) const;
  const FieldElement& leading() const;

  NfPoly operator-() const;
  friend NfPoly operator+(const NfPoly& a, const NfPoly& b);
  friend NfPoly operator-(const NfPoly& a, const NfPoly& b);
  friend NfPoly operator*(const NfPoly& a, const NfPoly& b);
  NfPoly scaled(const FieldElement& c) const;
  friend bool operator==(const NfPoly& a, const NfPoly& b);
  friend bool operator!=(const NfPoly& a, const NfPoly& b) { return !(a == b); }

  FieldElement eval(const FieldElement& x) const;
  NfPoly derivative() const;
  NfPoly monic() const;

  // sigma_i applied coefficientwise: the complex polynomial (constant first).
  std::vector<BigComplex> embed(const EmbeddingSet& emb, int i) const;

 private:
  void trim();
  FieldPtr field_;
  std::vector<FieldElement> c_;
};

std::pair<NfPoly, NfPoly> nf_poly_div_rem(const NfPoly& num, const NfPoly& den);
NfPoly nf_poly_gcd(NfPoly a, NfPoly b);  // monic
NfPoly nf_squarefree_part(const NfPoly& poly);

}  // namespace qp

#endif
