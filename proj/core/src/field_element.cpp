#include "qp/field_element.hpp"

#include <sstream>

#include "qp/errors.hpp"

namespace qp {

FieldElement::FieldElement(FieldPtr field, std::vector<Rational> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
  if (!field_) throw InputError("element without a field");
  if (static_cast<int>(c_.size()) != field_->degree())
    throw InputError("element coordinate count must equal the field degree");
}

FieldElement FieldElement::zero(const FieldPtr& field) {
  return FieldElement(field, std::vector<Rational>(static_cast<size_t>(field->degree()), Rational(0)));
}

FieldElement FieldElement::one(const FieldPtr& field) {
  return from_rational(field, Rational(1));
}

FieldElement FieldElement::from_rational(const FieldPtr& field, const Rational& r) {
  std::vector<Rational> c(static_cast<size_t>(field->degree()), Rational(0));
  c[0] = r;
  return FieldElement(field, std::move(c));
}

FieldElement FieldElement::gen(const FieldPtr& field) {
  return from_poly(field, RatPoly::x());
}

FieldElement FieldElement::from_poly(const FieldPtr& field, const RatPoly& p) {
  RatPoly r = poly_div_rem(p, field->minpoly()).second;
  std::vector<Rational> c(static_cast<size_t>(field->degree()), Rational(0));
  for (size_t i = 0; i < r.coeffs().size(); ++i) c[i] = r.coeffs()[i];
  return FieldElement(field, std::move(c));
}

bool FieldElement::is_zero() const {
  for (const auto& v : c_)
    if (!v.is_zero()) return false;
  return true;
}

bool FieldElement::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return false;
  return true;
}

std::optional<Rational> FieldElement::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return c_[0];
}

void FieldElement::check_same(const FieldElement& o) const {
  if (!field_ || !o.field_ || !field_->same_field(*o.field_))
    throw InputError("elements of different fields");
}

FieldElement FieldElement::operator-() const {
  FieldElement r(*this);
  for (auto& v : r.c_) v = -v;
  return r;
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  a.check_same(b);
  FieldElement r(a);
  for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
  return r;
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  a.check_same(b);
  FieldElement r(a);
  for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= b.c_[i];
  return r;
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  a.check_same(b);
  return FieldElement::from_poly(a.field_, a.as_poly() * b.as_poly());
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  a.check_same(b);
  return a * b.inverse();
}

FieldElement FieldElement::scaled(const Rational& r) const {
  FieldElement out(*this);
  for (auto& v : out.c_) v *= r;
  return out;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero field element");
  // u*self + v*minpoly = 1 in Q[t]; u is the inverse mod minpoly.
  PolyXgcd x = poly_xgcd(as_poly(), field_->minpoly());
  if (x.g.degree() != 0)
    throw InputError("element not invertible; minimal polynomial reducible");
  return from_poly(field_, x.u.scaled(x.g[0].inverse()));
}

FieldElement FieldElement::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElement r = one(field_);
  FieldElement base(*this);
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  a.check_same(b);
  return a.c_ == b.c_;
}

bool operator<(const FieldElement& a, const FieldElement& b) {
  a.check_same(b);
  return a.c_ < b.c_;
}

BigComplex FieldElement::embed(const EmbeddingSet& emb, int i) const {
  const long prec = emb.precision();
  const BigComplex& root = emb.roots()[static_cast<size_t>(i)];
  BigComplex acc(prec);
  for (size_t k = c_.size(); k-- > 0;) {
    acc = acc * root + BigComplex::from(c_[k], prec);
  }
  return acc;
}

std::vector<std::string> FieldElement::to_strings() const {
  std::vector<std::string> out;
  out.reserve(c_.size());
  for (const auto& v : c_) out.push_back(v.str());
  return out;
}

std::optional<FieldElement> FieldElement::from_strings(
    const FieldPtr& field, const std::vector<std::string>& ss) {
  if (static_cast<int>(ss.size()) != field->degree()) return std::nullopt;
  std::vector<Rational> c;
  c.reserve(ss.size());
  for (const auto& s : ss) {
    auto r = Rational::parse(s);
    if (!r) return std::nullopt;
    c.push_back(*r);
  }
  return FieldElement(field, std::move(c));
}

std::string FieldElement::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ",";
    os << c_[i];
  }
  os << "]";
  return os.str();
}

}  // namespace qp
