#include "qp/bigcomplex.hpp"

#include "qp/errors.hpp"

namespace qp {

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
  BigFloat n = b.norm();
  if (n.is_zero()) throw DivisionByZero("complex division by zero");
  BigComplex num = a * b.conj();
  return BigComplex(num.re / n, num.im / n);
}

void BigComplex::submul(const BigComplex& a, const BigComplex& b) {
  // re -= a.re*b.re - a.im*b.im ; im -= a.re*b.im + a.im*b.re
  mpfr_t t;
  mpfr_init2(t, re.prec());
  mpfr_mul(t, a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_sub(re.get(), re.get(), t, MPFR_RNDN);
  mpfr_mul(t, a.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_add(re.get(), re.get(), t, MPFR_RNDN);
  mpfr_mul(t, a.re.get(), b.im.get(), MPFR_RNDN);
  mpfr_sub(im.get(), im.get(), t, MPFR_RNDN);
  mpfr_mul(t, a.im.get(), b.re.get(), MPFR_RNDN);
  mpfr_sub(im.get(), im.get(), t, MPFR_RNDN);
  mpfr_clear(t);
}

}  // namespace qp
