#include "qp/bigfloat.hpp"

#include <algorithm>

#include "qp/errors.hpp"

namespace qp {

BigFloat::BigFloat(long prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  if (this != &o) mpfr_swap(v_, o.v_);
  return *this;
}

BigFloat::~BigFloat() {
  mpfr_clear(v_);
}

BigFloat BigFloat::from(const Rational& r, long prec) {
  BigFloat x(prec);
  mpfr_set_q(x.v_, r.mpq().get_mpq_t(), MPFR_RNDN);
  return x;
}

BigFloat BigFloat::from_long(long v, long prec) {
  BigFloat x(prec);
  mpfr_set_si(x.v_, v, MPFR_RNDN);
  return x;
}

BigFloat BigFloat::from_double(double v, long prec) {
  BigFloat x(prec);
  mpfr_set_d(x.v_, v, MPFR_RNDN);
  return x;
}

BigFloat BigFloat::pow2(long e, long prec) {
  BigFloat x(prec);
  mpfr_set_ui_2exp(x.v_, 1, e, MPFR_RNDN);
  return x;
}

BigFloat BigFloat::pi(long prec) {
  BigFloat x(prec);
  mpfr_const_pi(x.v_, MPFR_RNDN);
  return x;
}

namespace {
long min_prec(const BigFloat& a, const BigFloat& b) {
  return std::min(a.prec(), b.prec());
}
}  // namespace

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(min_prec(a, b));
  mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(min_prec(a, b));
  mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(min_prec(a, b));
  mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat r(min_prec(a, b));
  mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(prec());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::abs() const {
  BigFloat r(prec());
  mpfr_abs(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::sqrt() const {
  if (sign() < 0) throw InputError("BigFloat::sqrt of negative value");
  BigFloat r(prec());
  mpfr_sqrt(r.v_, v_, MPFR_RNDN);
  return r;
}

Rational BigFloat::to_rational() const {
  if (is_zero()) return Rational(0);
  Int mant;
  mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), v_);
  Int num = mant, den = 1;
  if (e >= 0) {
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(-e));
  }
  return Rational(num, den);
}

std::string BigFloat::str(size_t digits) const {
  char* s = nullptr;
  // mpfr_asprintf handles formatting and allocation
  if (mpfr_asprintf(&s, "%.*Rg", static_cast<int>(digits), v_) < 0)
    return "<mpfr-error>";
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

}  // namespace qp
