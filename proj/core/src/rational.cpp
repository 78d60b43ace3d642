#include "qp/rational.hpp"

#include <ostream>

namespace qp {

Rational::Rational(long num, long den) : v_() {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(const Int& num, const Int& den) : v_() {
  if (sgn(den) == 0) throw DivisionByZero("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Int Rational::height() const {
  Int n = ::abs(v_.get_num());
  const Int& d = v_.get_den();
  return n > d ? n : d;
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero("rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::abs() const {
  Rational r;
  r.v_ = ::abs(v_);
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  Rational r;
  r.v_ = 1 / v_;
  return r;
}

std::string Rational::str() const {
  return v_.get_str();
}

std::optional<Rational> Rational::parse(std::string_view s) {
  if (s.empty()) return std::nullopt;
  mpq_class q;
  if (q.set_str(std::string(s), 10) != 0) return std::nullopt;
  if (sgn(q.get_den()) == 0) return std::nullopt;
  q.canonicalize();
  Rational r;
  r.v_ = q;
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.v_;
}

}  // namespace qp
