#include "qp/step2.hpp"

#include <algorithm>

#include "qp/errors.hpp"
#include "qp/nf_roots.hpp"

namespace qp {

namespace {

// Q_b1(T) = T^2 + (x1 - b1^2) T + (x1^2 + x1 b1^2 - 2 y1 b1 + 4)
// Q_b2(T) = T^2 + (x2 - b2^2) T + (x2^2 + x2 b2^2 - 2 y2 b2 - 4)
// Closed forms verified against the defining cubic identities by exact
// polynomial division in the test suite, and re-verified per solution below.
NfPoly q_poly(const FieldPtr& field, const FieldElement& x, const FieldElement& y,
              const FieldElement& beta, long curve_a) {
  FieldElement b2 = beta * beta;
  FieldElement lin = x - b2;
  FieldElement cst = x * x + x * b2 - (y * beta).scaled(Rational(2)) +
                     FieldElement::from_rational(field, Rational(curve_a));
  return NfPoly(field, {cst, lin, FieldElement::one(field)});
}

// T^3 + aT - (alpha + beta T)^2 == Q(T) (T - x) must hold exactly.
bool identity_holds(const FieldPtr& field, const FieldElement& alpha,
                    const FieldElement& beta, const FieldElement& x,
                    const NfPoly& q, long curve_a) {
  NfPoly t = NfPoly(field, {FieldElement::zero(field), FieldElement::one(field)});
  NfPoly lhs = t * t * t +
               t.scaled(FieldElement::from_rational(field, Rational(curve_a)));
  NfPoly sq = NfPoly(field, {alpha, beta});
  lhs = lhs - sq * sq;
  NfPoly rhs = q * NfPoly(field, {-x, FieldElement::one(field)});
  return lhs == rhs;
}

struct PairSolution {
  FieldElement beta1, beta2;
};

}  // namespace

CurvePoint pm_canonical(const CurvePoint& p) {
  if (p.is_infinity()) return p;
  CurvePoint n = ec_neg(p);
  return p < n ? p : n;
}

StepTwoCell step2_pair(const FieldPtr& field, const CurvePoint& p1,
                       const CurvePoint& p2) {
  if (p1.is_infinity() || p2.is_infinity())
    throw InputError("step2 pairs are affine");
  StepTwoCell cell;
  cell.p1 = p1;
  cell.p2 = p2;

  const FieldElement& x1 = p1.x();
  const FieldElement& y1 = p1.y();
  const FieldElement& x2 = p2.x();
  const FieldElement& y2 = p2.y();
  const FieldElement two = FieldElement::from_rational(field, Rational(2));
  const FieldElement four = FieldElement::from_rational(field, Rational(4));
  const FieldElement eight = FieldElement::from_rational(field, Rational(8));

  std::vector<PairSolution> solutions;

  if (!y2.is_zero()) {
    // Coefficient matching: beta2 = ((x2-x1) b1^2 + 2 y1 b1 + c) / (2 y2)
    // with c = 2 x2^2 - x1 x2 - x1^2 - 8, then (A) b1^2 - b2^2 = x1 - x2
    // becomes a quartic in b1.
    FieldElement dx = x2 - x1;
    FieldElement c = (x2 * x2).scaled(Rational(2)) - x1 * x2 - x1 * x1 - eight;
    // ((dx) b^2 + 2 y1 b + c)^2 - 4 y2^2 (b^2 + dx) = 0
    FieldElement zero = FieldElement::zero(field);
    NfPoly inner(field, {c, y1.scaled(Rational(2)), dx});
    NfPoly quartic = inner * inner -
                     NfPoly(field, {dx, zero, FieldElement::one(field)})
                         .scaled((y2 * y2).scaled(Rational(4)));
    for (const auto& b1 : roots_in_field(quartic)) {
      FieldElement num = dx * b1 * b1 + (y1 * b1).scaled(Rational(2)) + c;
      FieldElement b2 = num / (y2.scaled(Rational(2)));
      solutions.push_back({b1, b2});
    }
  } else if (!y1.is_zero()) {
    FieldElement dx = x1 - x2;
    FieldElement c = (x1 * x1).scaled(Rational(2)) - x1 * x2 - x2 * x2 + eight;
    FieldElement zero = FieldElement::zero(field);
    NfPoly inner(field, {c, y2.scaled(Rational(2)), dx});
    NfPoly quartic = inner * inner -
                     NfPoly(field, {dx, zero, FieldElement::one(field)})
                         .scaled((y1 * y1).scaled(Rational(4)));
    for (const auto& b2 : roots_in_field(quartic)) {
      FieldElement num = dx * b2 * b2 + (y2 * b2).scaled(Rational(2)) + c;
      FieldElement b1 = num / (y1.scaled(Rational(2)));
      solutions.push_back({b1, b2});
    }
  } else {
    // Both partners are 2-torsion. (B) collapses to a pure square condition.
    if (x1 == x2) {
      cell.outcome = StepTwoOutcome::kNoSolution;
      return cell;
    }
    FieldElement b1sq = ((x2 * x2).scaled(Rational(2)) - x1 * x2 - x1 * x1 - eight) /
                        (x1 - x2);
    std::vector<FieldElement> b1s;
    if (b1sq.is_zero()) {
      b1s.push_back(FieldElement::zero(field));
    } else {
      SquareResult sq = is_square(b1sq);
      if (sq.kind == SquareResult::Kind::kInconclusive)
        throw Inconclusive("square test inconclusive in step2");
      if (sq.is_square()) {
        b1s.push_back(*sq.root);
        b1s.push_back(-*sq.root);
      }
    }
    for (const auto& b1 : b1s) {
      FieldElement b2sq = b1 * b1 - x1 + x2;
      if (b2sq.is_zero()) {
        solutions.push_back({b1, FieldElement::zero(field)});
        continue;
      }
      SquareResult sq = is_square(b2sq);
      if (sq.kind == SquareResult::Kind::kInconclusive)
        throw Inconclusive("square test inconclusive in step2");
      if (!sq.is_square()) continue;
      solutions.push_back({b1, *sq.root});
      solutions.push_back({b1, -*sq.root});
    }
  }

  if (solutions.empty()) {
    cell.outcome = StepTwoOutcome::kNoSolution;
    return cell;
  }

  bool saw_reducible = false, saw_excluded = false;
  const NfPoly t_sq_plus_4(field, {four, FieldElement::zero(field),
                                   FieldElement::one(field)});

  for (const auto& sol : solutions) {
    NfPoly q1 = q_poly(field, x1, y1, sol.beta1, 4);
    NfPoly q2 = q_poly(field, x2, y2, sol.beta2, -4);
    if (q1 != q2) continue;  // spurious root of the elimination polynomial

    FieldElement alpha1 = y1 - sol.beta1 * x1;
    FieldElement alpha2 = y2 - sol.beta2 * x2;
    if (!identity_holds(field, alpha1, sol.beta1, x1, q1, 4) ||
        !identity_holds(field, alpha2, sol.beta2, x2, q1, -4))
      throw Error("step2 closed form failed the defining identity");

    if (q1 == t_sq_plus_4) {
      saw_excluded = true;  // s^2 = -4, t = ±sqrt(-1)
      continue;
    }

    auto made = RelQuadExt::make(field, q1.coeff(1), q1.coeff(0));
    if (std::holds_alternative<RelQuadExt::Reducible>(made)) {
      saw_reducible = true;
      continue;
    }
    ExtPtr ext = std::get<ExtPtr>(made);

    // s generates L; u = alpha1 + beta1 s is nonzero since u^2 = s(s^2+4).
    RelElement s = RelElement::gen(ext);
    RelElement u = RelElement(ext, alpha1, sol.beta1);
    RelElement v = RelElement(ext, alpha2, sol.beta2);
    RelElement s2p4 = s * s + RelElement::from_base(ext, four);
    RelElement x = (u + u) / s2p4;
    RelElement y = v / u;

    QuadraticPointRecord rec = make_record(
        field, ext, PointCoords{x.c0(), x.c1(), y.c0(), y.c1()},
        PointSource::kStepII,
        "step2 P1=" + p1.str() + " P2=" + p2.str());
    bool new_q = true;
    for (const auto& q : cell.qs)
      if (q == q1) new_q = false;
    if (new_q) cell.qs.push_back(q1);
    cell.points.push_back(std::move(rec));
  }

  if (!cell.points.empty())
    cell.outcome = StepTwoOutcome::kPoints;
  else if (saw_excluded)
    cell.outcome = StepTwoOutcome::kExcludedT;
  else if (saw_reducible)
    cell.outcome = StepTwoOutcome::kReducible;
  else
    cell.outcome = StepTwoOutcome::kNoSolution;
  return cell;
}

StepTwoGrid step2_grid(const FieldPtr& field, const TorsionTable& e1_torsion,
                       const TorsionTable& e2_torsion) {
  StepTwoGrid grid;
  auto reps = [](const TorsionTable& t) {
    std::vector<CurvePoint> out;
    for (const auto& p : t.points) {
      if (p.is_infinity()) continue;
      CurvePoint c = pm_canonical(p);
      if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  grid.e1_reps = reps(e1_torsion);
  grid.e2_reps = reps(e2_torsion);
  for (const auto& p2 : grid.e2_reps) {
    std::vector<StepTwoCell> row;
    row.reserve(grid.e1_reps.size());
    for (const auto& p1 : grid.e1_reps) row.push_back(step2_pair(field, p1, p2));
    grid.cells.push_back(std::move(row));
  }
  return grid;
}

}  // namespace qp
