#ifndef QP_CURVE_HPP
#define QP_CURVE_HPP

#include "qp/field_element.hpp"

namespace qp {

// y^2 = x^3 + a*x over K, a in {4, -4}: the two bielliptic quotients of the
// Fermat quartic.
struct CurveSpec {
  FieldPtr field;
  long a = 4;

  FieldElement a_elem() const {
    return FieldElement::from_rational(field, Rational(a));
  }
};

CurveSpec curve_e1(const FieldPtr& field);  // a = +4
CurveSpec curve_e2(const FieldPtr& field);  // a = -4

class CurvePoint {
 public:
  CurvePoint() : infinity_(true) {}
  CurvePoint(FieldElement x, FieldElement y)
      : infinity_(false), x_(std::move(x)), y_(std::move(y)) {}

  static CurvePoint infinity() { return CurvePoint(); }

  bool is_infinity() const { return infinity_; }
  const FieldElement& x() const;
  const FieldElement& y() const;

  friend bool operator==(const CurvePoint& a, const CurvePoint& b);
  friend bool operator!=(const CurvePoint& a, const CurvePoint& b) { return !(a == b); }
  friend bool operator<(const CurvePoint& a, const CurvePoint& b);

  std::string str() const;

 private:
  bool infinity_;
  FieldElement x_, y_;
};

bool on_curve(const CurveSpec& curve, const CurvePoint& p);

CurvePoint ec_neg(const CurvePoint& p);
CurvePoint ec_add(const CurveSpec& curve, const CurvePoint& p, const CurvePoint& q);
CurvePoint ec_mul(const CurveSpec& curve, long n, const CurvePoint& p);

// Order of a point known to be torsion (bounded search up to `cap`).
long ec_order(const CurveSpec& curve, const CurvePoint& p, long cap = 64);

}  // namespace qp

#endif
