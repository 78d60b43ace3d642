#ifndef QP_RATPOLY_HPP
#define QP_RATPOLY_HPP

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qp/rational.hpp"

namespace qp {

// Dense univariate polynomial over the rationals, coefficients stored
// lowest degree first. The zero polynomial has no coefficients; otherwise
// the leading coefficient is nonzero.
class RatPoly {
 public:
  RatPoly() = default;
  RatPoly(std::initializer_list<Rational> coeffs);
  explicit RatPoly(std::vector<Rational> coeffs);

  static RatPoly zero() { return RatPoly(); }
  static RatPoly constant(const Rational& c);
  static RatPoly x();  // the monomial t
  static RatPoly monomial(int degree, const Rational& c);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const;
  const std::vector<Rational>& coeffs() const { return c_; }

  // Coefficient of t^i, zero beyond the degree.
  Rational operator[](size_t i) const;
  const Rational& leading() const;

  RatPoly operator-() const;
  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);
  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  RatPoly& operator*=(const RatPoly& o) { return *this = *this * o; }
  RatPoly scaled(const Rational& c) const;

  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const RatPoly& a, const RatPoly& b) { return !(a == b); }

  Rational eval(const Rational& x) const;
  RatPoly derivative() const;
  RatPoly monic() const;

  // Max coefficient height.
  Int height() const;

  std::string str() const;  // human-readable, for messages

  std::vector<std::string> to_strings() const;
  static std::optional<RatPoly> from_strings(const std::vector<std::string>& ss);

 private:
  void trim();
  std::vector<Rational> c_;
};

// Exact division with remainder: num = den*q + r with deg r < deg den.
std::pair<RatPoly, RatPoly> poly_div_rem(const RatPoly& num, const RatPoly& den);

// Monic gcd by the Euclidean algorithm.
RatPoly poly_gcd(RatPoly a, RatPoly b);

// Extended gcd: returns (g, u, v) with u*a + v*b = g, g monic (or zero).
struct PolyXgcd {
  RatPoly g, u, v;
};
PolyXgcd poly_xgcd(const RatPoly& a, const RatPoly& b);

// poly divided by gcd(poly, poly'): same roots, all simple.
RatPoly squarefree_part(const RatPoly& poly);

}  // namespace qp

#endif
