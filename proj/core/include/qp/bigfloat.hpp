#ifndef QP_BIGFLOAT_HPP
#define QP_BIGFLOAT_HPP

#include <mpfr.h>

#include <string>

#include "qp/rational.hpp"

namespace qp {

// RAII wrapper around mpfr_t. Every value carries an explicit precision;
// binary operations round to the smaller of the two operand precisions.
class BigFloat {
 public:
  explicit BigFloat(long prec);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  static BigFloat from(const Rational& r, long prec);
  static BigFloat from_long(long v, long prec);
  static BigFloat from_double(double v, long prec);
  // 2^e at the given precision (exact).
  static BigFloat pow2(long e, long prec);
  static BigFloat pi(long prec);

  long prec() const { return mpfr_get_prec(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  BigFloat operator-() const;

  BigFloat& operator+=(const BigFloat& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigFloat& operator-=(const BigFloat& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigFloat& operator*=(const BigFloat& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

  BigFloat abs() const;
  BigFloat sqrt() const;  // of a nonnegative value

  // Exact dyadic value as a rational; no rounding involved.
  Rational to_rational() const;
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  std::string str(size_t digits = 20) const;

 private:
  mpfr_t v_;
};

}  // namespace qp

#endif
