#include "qp/h3.hpp"

#include <algorithm>

#include "qp/errors.hpp"

namespace qp {

std::vector<std::pair<FieldElement, FieldElement>> h3_points(
    const FieldPtr& field, const TorsionTable& e1_torsion) {
  std::vector<std::pair<FieldElement, FieldElement>> out;
  const FieldElement two = FieldElement::from_rational(field, Rational(2));
  const FieldElement sixteen = FieldElement::from_rational(field, Rational(16));

  out.emplace_back(two, FieldElement::zero(field));  // image of the identity

  for (const auto& p : e1_torsion.points) {
    if (p.is_infinity()) continue;
    if (p.x() == two) continue;  // maps to the points at infinity of H3
    FieldElement den = p.x() - two;
    FieldElement s = (p.x() + two).scaled(Rational(2)) / den;
    FieldElement r = sixteen * p.y() / (den * den);
    // r^2 = (s^2+4)(s^2-4) must hold exactly
    FieldElement s2 = s * s;
    FieldElement four = FieldElement::from_rational(field, Rational(4));
    if (r * r != (s2 + four) * (s2 - four))
      throw Error("H3 image fails the model equation");
    out.emplace_back(std::move(s), std::move(r));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace qp
