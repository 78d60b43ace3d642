#ifndef QP_FIELD_ELEMENT_HPP
#define QP_FIELD_ELEMENT_HPP

#include <optional>
#include <string>
#include <vector>

#include "qp/number_field.hpp"

namespace qp {

// An element of K in the power basis 1, t, ..., t^(n-1); exactly n rational
// coordinates. Values are immutable in spirit: all operations return new
// elements.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(FieldPtr field, std::vector<Rational> coeffs);

  static FieldElement zero(const FieldPtr& field);
  static FieldElement one(const FieldPtr& field);
  static FieldElement from_rational(const FieldPtr& field, const Rational& r);
  static FieldElement gen(const FieldPtr& field);  // the class of t
  // Reduction of an arbitrary rational polynomial in t.
  static FieldElement from_poly(const FieldPtr& field, const RatPoly& p);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  RatPoly as_poly() const { return RatPoly(c_); }

  bool is_zero() const;
  bool is_rational() const;
  std::optional<Rational> as_rational() const;

  FieldElement operator-() const;
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

  FieldElement scaled(const Rational& r) const;
  FieldElement inverse() const;
  FieldElement pow(long e) const;

  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }
  // Lexicographic on coordinates; the canonical deterministic order.
  friend bool operator<(const FieldElement& a, const FieldElement& b);

  // sigma_i(x) at the given precision.
  BigComplex embed(const EmbeddingSet& emb, int i) const;

  std::vector<std::string> to_strings() const;
  static std::optional<FieldElement> from_strings(const FieldPtr& field,
                                                  const std::vector<std::string>& ss);
  std::string str() const;

 private:
  void check_same(const FieldElement& o) const;

  FieldPtr field_;
  std::vector<Rational> c_;
};

}  // namespace qp

#endif
