#include "qp/step1.hpp"

#include <map>

#include "qp/errors.hpp"

namespace qp {

namespace {

// Square test that treats zero as square with root zero.
struct SqrtOutcome {
  bool square = false;
  FieldElement root;
};

SqrtOutcome sqrt_or_none(const FieldElement& v) {
  if (v.is_zero()) return {true, v};
  SquareResult sq = is_square(v);
  if (sq.kind == SquareResult::Kind::kInconclusive)
    throw Inconclusive("square test inconclusive in the parameter scan");
  if (sq.is_square()) return {true, *sq.root};
  return {false, v};
}

ExtPtr sqrt_extension(const FieldPtr& field, const FieldElement& d) {
  auto made = RelQuadExt::make_sqrt(field, d);
  if (std::holds_alternative<RelQuadExt::Reducible>(made))
    throw Error("square test disagreement while building an extension");
  return std::get<ExtPtr>(made);
}

const char* source_name(PointSource s) {
  switch (s) {
    case PointSource::kStepIFromE1: return "E1";
    case PointSource::kStepIFromE2: return "E2";
    case PointSource::kStepIFromH3: return "H3";
    default: return "stepII";
  }
}

}  // namespace

std::vector<QuadraticPointRecord> step1_scan(const FieldPtr& field,
                                             const TorsionTable& e1_torsion,
                                             const TorsionTable& e2_torsion) {
  // s-candidates with a deterministic source priority E1 < E2 < H3.
  std::map<FieldElement, PointSource> candidates;
  for (const auto& p : e1_torsion.points)
    if (!p.is_infinity()) candidates.emplace(p.x(), PointSource::kStepIFromE1);
  for (const auto& p : e2_torsion.points)
    if (!p.is_infinity()) candidates.emplace(p.x(), PointSource::kStepIFromE2);
  for (const auto& [s, r] : h3_points(field, e1_torsion))
    candidates.emplace(s, PointSource::kStepIFromH3);

  const FieldElement four = FieldElement::from_rational(field, Rational(4));
  std::vector<QuadraticPointRecord> out;

  for (const auto& [s, source] : candidates) {
    FieldElement s2p4 = s * s + four;
    if (s2p4.is_zero()) continue;  // t = ±sqrt(-1): no Fermat point here
    FieldElement xsq = s.scaled(Rational(4)) / s2p4;
    FieldElement ysq = (s * s - four) / s2p4;

    const std::string prov =
        std::string("step1 ") + source_name(source) + " s=" + s.str();

    SqrtOutcome rx = sqrt_or_none(xsq);
    SqrtOutcome ry = sqrt_or_none(ysq);

    if (rx.square && ry.square) {
      out.push_back(make_record(
          field, nullptr,
          PointCoords{rx.root, FieldElement::zero(field), ry.root,
                      FieldElement::zero(field)},
          source, prov));
      continue;
    }
    if (rx.square) {
      // x in K, y generates L = K(sqrt(ysq))
      ExtPtr ext = sqrt_extension(field, ysq);
      out.push_back(make_record(
          field, ext,
          PointCoords{rx.root, FieldElement::zero(field),
                      FieldElement::zero(field), FieldElement::one(field)},
          source, prov));
      continue;
    }
    if (ry.square) {
      ExtPtr ext = sqrt_extension(field, xsq);
      out.push_back(make_record(
          field, ext,
          PointCoords{FieldElement::zero(field), FieldElement::one(field),
                      ry.root, FieldElement::zero(field)},
          source, prov));
      continue;
    }
    // Neither is a square; the point is quadratic over K exactly when the
    // product is. Then L = K(sqrt(xsq)), x = s_gen, y = c/x = (c/xsq) x.
    SqrtOutcome rp = sqrt_or_none(xsq * ysq);
    if (!rp.square) continue;  // degree 4 over K; outside the census
    ExtPtr ext = sqrt_extension(field, xsq);
    FieldElement y1 = rp.root / xsq;
    out.push_back(make_record(
        field, ext,
        PointCoords{FieldElement::zero(field), FieldElement::one(field),
                    FieldElement::zero(field), y1},
        source, prov));
  }
  return out;
}

}  // namespace qp
