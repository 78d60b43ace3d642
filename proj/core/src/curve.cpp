#include "qp/curve.hpp"

#include "qp/errors.hpp"

namespace qp {

CurveSpec curve_e1(const FieldPtr& field) { return CurveSpec{field, 4}; }
CurveSpec curve_e2(const FieldPtr& field) { return CurveSpec{field, -4}; }

const FieldElement& CurvePoint::x() const {
  if (infinity_) throw InputError("coordinate of the point at infinity");
  return x_;
}

const FieldElement& CurvePoint::y() const {
  if (infinity_) throw InputError("coordinate of the point at infinity");
  return y_;
}

bool operator==(const CurvePoint& a, const CurvePoint& b) {
  if (a.infinity_ || b.infinity_) return a.infinity_ == b.infinity_;
  return a.x_ == b.x_ && a.y_ == b.y_;
}

bool operator<(const CurvePoint& a, const CurvePoint& b) {
  if (a.infinity_ != b.infinity_) return a.infinity_;  // infinity sorts first
  if (a.infinity_) return false;
  if (a.x_ < b.x_) return true;
  if (b.x_ < a.x_) return false;
  return a.y_ < b.y_;
}

std::string CurvePoint::str() const {
  if (infinity_) return "infinity";
  return "(" + x_.str() + ", " + y_.str() + ")";
}

bool on_curve(const CurveSpec& curve, const CurvePoint& p) {
  if (p.is_infinity()) return true;
  const FieldElement& x = p.x();
  const FieldElement& y = p.y();
  return y * y == x * x * x + curve.a_elem() * x;
}

CurvePoint ec_neg(const CurvePoint& p) {
  if (p.is_infinity()) return p;
  return CurvePoint(p.x(), -p.y());
}

CurvePoint ec_add(const CurveSpec& curve, const CurvePoint& p, const CurvePoint& q) {
  if (p.is_infinity()) return q;
  if (q.is_infinity()) return p;
  const FieldElement& x1 = p.x();
  const FieldElement& y1 = p.y();
  const FieldElement& x2 = q.x();
  const FieldElement& y2 = q.y();

  FieldElement lambda = FieldElement::zero(curve.field);
  if (x1 == x2) {
    if (y1 == -y2) return CurvePoint::infinity();  // includes y1 = y2 = 0
    // tangent: (3x^2 + a) / (2y)
    lambda = (x1 * x1).scaled(Rational(3)) + curve.a_elem();
    lambda = lambda / y1.scaled(Rational(2));
  } else {
    lambda = (y2 - y1) / (x2 - x1);
  }
  FieldElement x3 = lambda * lambda - x1 - x2;
  FieldElement y3 = lambda * (x1 - x3) - y1;
  return CurvePoint(std::move(x3), std::move(y3));
}

CurvePoint ec_mul(const CurveSpec& curve, long n, const CurvePoint& p) {
  if (n < 0) return ec_mul(curve, -n, ec_neg(p));
  CurvePoint acc = CurvePoint::infinity();
  CurvePoint base = p;
  while (n) {
    if (n & 1) acc = ec_add(curve, acc, base);
    base = ec_add(curve, base, base);
    n >>= 1;
  }
  return acc;
}

long ec_order(const CurveSpec& curve, const CurvePoint& p, long cap) {
  CurvePoint acc = p;
  for (long k = 1; k <= cap; ++k) {
    if (acc.is_infinity()) return k;
    acc = ec_add(curve, acc, p);
  }
  throw Error("point order exceeds cap; not torsion at this scale");
}

}  // namespace qp
