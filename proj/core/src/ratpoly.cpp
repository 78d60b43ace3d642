#include "qp/ratpoly.hpp"

#include <sstream>

namespace qp {

RatPoly::RatPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) {
  trim();
}

RatPoly::RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  trim();
}

RatPoly RatPoly::constant(const Rational& c) {
  return RatPoly({c});
}

RatPoly RatPoly::x() {
  return RatPoly({Rational(0), Rational(1)});
}

RatPoly RatPoly::monomial(int degree, const Rational& c) {
  if (c.is_zero()) return RatPoly();
  std::vector<Rational> v(static_cast<size_t>(degree) + 1, Rational(0));
  v.back() = c;
  return RatPoly(std::move(v));
}

bool RatPoly::is_monic() const {
  return !c_.empty() && c_.back().is_one();
}

Rational RatPoly::operator[](size_t i) const {
  return i < c_.size() ? c_[i] : Rational(0);
}

const Rational& RatPoly::leading() const {
  if (c_.empty()) throw InputError("leading coefficient of zero polynomial");
  return c_.back();
}

void RatPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

RatPoly RatPoly::operator-() const {
  RatPoly r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return RatPoly();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return RatPoly(std::move(c));
}

RatPoly RatPoly::scaled(const Rational& c) const {
  if (c.is_zero()) return RatPoly();
  RatPoly r(*this);
  for (auto& v : r.c_) v *= c;
  return r;
}

Rational RatPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (size_t i = c_.size(); i-- > 0;) {
    acc *= x;
    acc += c_[i];
  }
  return acc;
}

RatPoly RatPoly::derivative() const {
  if (c_.size() <= 1) return RatPoly();
  std::vector<Rational> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return RatPoly(std::move(d));
}

RatPoly RatPoly::monic() const {
  if (is_zero()) throw InputError("monic form of zero polynomial");
  return scaled(c_.back().inverse());
}

Int RatPoly::height() const {
  Int h = 0;
  for (const auto& c : c_) {
    Int hc = c.height();
    if (hc > h) h = hc;
  }
  return h;
}

std::string RatPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    os << "(" << c_[i] << ")";
    if (i == 1) os << "*t";
    if (i > 1) os << "*t^" << i;
    first = false;
  }
  return os.str();
}

std::vector<std::string> RatPoly::to_strings() const {
  std::vector<std::string> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(c.str());
  return out;
}

std::optional<RatPoly> RatPoly::from_strings(const std::vector<std::string>& ss) {
  std::vector<Rational> c;
  c.reserve(ss.size());
  for (const auto& s : ss) {
    auto r = Rational::parse(s);
    if (!r) return std::nullopt;
    c.push_back(*r);
  }
  return RatPoly(std::move(c));
}

std::pair<RatPoly, RatPoly> poly_div_rem(const RatPoly& num, const RatPoly& den) {
  if (den.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (num.degree() < den.degree()) return {RatPoly(), num};
  std::vector<Rational> rem(num.coeffs());
  const int dq = num.degree() - den.degree();
  std::vector<Rational> quot(static_cast<size_t>(dq) + 1, Rational(0));
  const Rational lead_inv = den.leading().inverse();
  for (int k = dq; k >= 0; --k) {
    Rational c = rem[static_cast<size_t>(k + den.degree())] * lead_inv;
    quot[static_cast<size_t>(k)] = c;
    if (c.is_zero()) continue;
    for (int i = 0; i <= den.degree(); ++i)
      rem[static_cast<size_t>(k + i)] -= c * den[static_cast<size_t>(i)];
  }
  return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = poly_div_rem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.monic();
}

PolyXgcd poly_xgcd(const RatPoly& a, const RatPoly& b) {
  RatPoly r0 = a, r1 = b;
  RatPoly u0 = RatPoly::constant(1), u1;
  RatPoly v0, v1 = RatPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r2] = poly_div_rem(r0, r1);
    RatPoly u2 = u0 - q * u1;
    RatPoly v2 = v0 - q * v1;
    r0 = std::move(r1); r1 = std::move(r2);
    u0 = std::move(u1); u1 = std::move(u2);
    v0 = std::move(v1); v1 = std::move(v2);
  }
  if (r0.is_zero()) return {r0, u0, v0};
  Rational s = r0.leading().inverse();
  return {r0.scaled(s), u0.scaled(s), v0.scaled(s)};
}

RatPoly squarefree_part(const RatPoly& poly) {
  if (poly.is_zero()) return poly;
  if (poly.degree() == 0) return RatPoly::constant(1);
  RatPoly g = poly_gcd(poly, poly.derivative());
  return poly_div_rem(poly, g).first;
}

}  // namespace qp
