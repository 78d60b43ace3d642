#ifndef QP_BIGCOMPLEX_HPP
#define QP_BIGCOMPLEX_HPP

#include "qp/bigfloat.hpp"

namespace qp {

struct BigComplex {
  BigFloat re, im;

  explicit BigComplex(long prec) : re(prec), im(prec) {}
  BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

  static BigComplex from(const Rational& r, long prec) {
    return BigComplex(BigFloat::from(r, prec), BigFloat(prec));
  }

  long prec() const { return re.prec(); }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  BigComplex conj() const { return BigComplex(re, -im); }
  BigComplex operator-() const { return BigComplex(-re, -im); }

  friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
    return BigComplex(a.re + b.re, a.im + b.im);
  }
  friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
    return BigComplex(a.re - b.re, a.im - b.im);
  }
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return BigComplex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  friend BigComplex operator/(const BigComplex& a, const BigComplex& b);

  BigComplex& operator+=(const BigComplex& o) { re += o.re; im += o.im; return *this; }
  BigComplex& operator-=(const BigComplex& o) { re -= o.re; im -= o.im; return *this; }

  // *this -= a*b without temporaries beyond two mpfr ops per component.
  void submul(const BigComplex& a, const BigComplex& b);

  BigFloat norm() const { return re * re + im * im; }  // |z|^2
  BigFloat abs() const { return norm().sqrt(); }

  std::string str() const { return re.str() + (im.sign() < 0 ? "" : "+") + im.str() + "i"; }
};

}  // namespace qp

#endif
