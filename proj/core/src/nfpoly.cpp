#include "qp/nfpoly.hpp"

#include "qp/errors.hpp"

namespace qp {

NfPoly::NfPoly(FieldPtr field, std::vector<FieldElement> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
  if (!field_) throw InputError("NfPoly without a field");
  trim();
}

NfPoly NfPoly::from_ratpoly(const FieldPtr& field, const RatPoly& p) {
  std::vector<FieldElement> c;
  c.reserve(p.coeffs().size());
  for (const auto& r : p.coeffs()) c.push_back(FieldElement::from_rational(field, r));
  return NfPoly(field, std::move(c));
}

void NfPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

bool NfPoly::is_monic() const {
  if (c_.empty()) return false;
  auto r = c_.back().as_rational();
  return r && r->is_one();
}

FieldElement NfPoly::coeff(size_t i) const {
  if (i < c_.size()) return c_[i];
  return FieldElement::zero(field_);
}

const FieldElement& NfPoly::leading() const {
  if (c_.empty()) throw InputError("leading coefficient of zero polynomial");
  return c_.back();
}

NfPoly NfPoly::operator-() const {
  NfPoly r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

NfPoly operator+(const NfPoly& a, const NfPoly& b) {
  std::vector<FieldElement> c = a.c_;
  if (b.c_.size() > c.size()) c.resize(b.c_.size(), FieldElement::zero(a.field_));
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return NfPoly(a.field_, std::move(c));
}

NfPoly operator-(const NfPoly& a, const NfPoly& b) {
  std::vector<FieldElement> c = a.c_;
  if (b.c_.size() > c.size()) c.resize(b.c_.size(), FieldElement::zero(a.field_));
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return NfPoly(a.field_, std::move(c));
}

NfPoly operator*(const NfPoly& a, const NfPoly& b) {
  if (a.is_zero() || b.is_zero()) return NfPoly::zero(a.field_ ? a.field_ : b.field_);
  std::vector<FieldElement> c(a.c_.size() + b.c_.size() - 1,
                              FieldElement::zero(a.field_));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return NfPoly(a.field_, std::move(c));
}

NfPoly NfPoly::scaled(const FieldElement& s) const {
  if (s.is_zero()) return NfPoly::zero(field_);
  NfPoly r(*this);
  for (auto& c : r.c_) c *= s;
  r.trim();
  return r;
}

bool operator==(const NfPoly& a, const NfPoly& b) {
  return a.c_ == b.c_;
}

FieldElement NfPoly::eval(const FieldElement& x) const {
  FieldElement acc = FieldElement::zero(field_);
  for (size_t i = c_.size(); i-- > 0;) {
    acc = acc * x + c_[i];
  }
  return acc;
}

NfPoly NfPoly::derivative() const {
  if (c_.size() <= 1) return NfPoly::zero(field_);
  std::vector<FieldElement> d;
  d.reserve(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i)
    d.push_back(c_[i].scaled(Rational(static_cast<long>(i))));
  return NfPoly(field_, std::move(d));
}

NfPoly NfPoly::monic() const {
  if (is_zero()) throw InputError("monic form of zero polynomial");
  return scaled(c_.back().inverse());
}

std::vector<BigComplex> NfPoly::embed(const EmbeddingSet& emb, int i) const {
  std::vector<BigComplex> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(c.embed(emb, i));
  return out;
}

std::pair<NfPoly, NfPoly> nf_poly_div_rem(const NfPoly& num, const NfPoly& den) {
  if (den.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (num.degree() < den.degree()) return {NfPoly::zero(num.field()), num};
  const FieldPtr& field = den.field();
  std::vector<FieldElement> rem = num.coeffs();
  const int dq = num.degree() - den.degree();
  std::vector<FieldElement> quot(static_cast<size_t>(dq) + 1,
                                 FieldElement::zero(field));
  const FieldElement lead_inv = den.leading().inverse();
  for (int k = dq; k >= 0; --k) {
    FieldElement c = rem[static_cast<size_t>(k + den.degree())] * lead_inv;
    quot[static_cast<size_t>(k)] = c;
    if (c.is_zero()) continue;
    for (int i = 0; i <= den.degree(); ++i)
      rem[static_cast<size_t>(k + i)] -= c * den.coeff(static_cast<size_t>(i));
  }
  return {NfPoly(field, std::move(quot)), NfPoly(field, std::move(rem))};
}

NfPoly nf_poly_gcd(NfPoly a, NfPoly b) {
  while (!b.is_zero()) {
    NfPoly r = nf_poly_div_rem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.monic();
}

NfPoly nf_squarefree_part(const NfPoly& poly) {
  if (poly.is_zero()) return poly;
  if (poly.degree() == 0) return NfPoly::from_ratpoly(poly.field(), RatPoly::constant(1));
  NfPoly g = nf_poly_gcd(poly, poly.derivative());
  return nf_poly_div_rem(poly, g).first;
}

}  // namespace qp
