#ifndef QP_STEP2_HPP
#define QP_STEP2_HPP

#include "qp/quad_point.hpp"
#include "qp/torsion.hpp"

namespace qp {

enum class StepTwoOutcome { kNoSolution, kReducible, kExcludedT, kPoints };

// One cell of the Step II pair grid: the outcome for a fixed pair
// (P1, P2) in E1(K) x E2(K), one representative per {±P}.
struct StepTwoCell {
  CurvePoint p1, p2;
  StepTwoOutcome outcome = StepTwoOutcome::kNoSolution;
  std::vector<NfPoly> qs;                    // distinct irreducible Q(T)
  std::vector<QuadraticPointRecord> points;  // assembled Fermat points
};

struct StepTwoGrid {
  std::vector<CurvePoint> e1_reps, e2_reps;   // sorted canonical representatives
  std::vector<std::vector<StepTwoCell>> cells;  // cells[i2][i1]
};

// The canonical representative of {P, -P}: the lexicographically smaller.
CurvePoint pm_canonical(const CurvePoint& p);

// Step II for one pair (t not in K): solve the coefficient-matching system
// between Q_b1(T) and Q_b2(T) for (beta1, beta2) in K^2, form Q(T), and
// assemble the Fermat point over L = K[T]/Q(T) unless Q is reducible
// (Step I's business) or forces t in {0, ±1, ±sqrt(-1)}.
StepTwoCell step2_pair(const FieldPtr& field, const CurvePoint& p1,
                       const CurvePoint& p2);

StepTwoGrid step2_grid(const FieldPtr& field, const TorsionTable& e1_torsion,
                       const TorsionTable& e2_torsion);

}  // namespace qp

#endif
