#ifndef QP_GAMMA2_HPP
#define QP_GAMMA2_HPP

#include "qp/dedupe.hpp"
#include "qp/step1.hpp"
#include "qp/step2.hpp"

namespace qp {

// A deduplicated set of quadratic points in one extension presentation.
struct ExpandedSet {
  ExtPtr ext;  // null for K-rational points
  std::vector<PointCoords> points;  // sorted, exact
};

size_t total_points(const std::vector<ExpandedSet>& sets);

// Exact equality of two expanded point collections over the same base field,
// matching groups through extension isomorphisms.
bool same_point_sets(const std::vector<ExpandedSet>& a,
                     const std::vector<ExpandedSet>& b);

struct TrivialCounts {
  int affine = 8;    // (0,±1), (±1,0), (0,±i), (±i,0): degree <= 2 over any K
  int infinity = 0;  // the four points at infinity, when [K(zeta8):K] <= 2
};

struct Gamma2Report {
  FieldPtr field;
  std::string identified_l;
  std::vector<std::string> assumptions;  // rank-zero declarations
  TorsionTable e1_torsion, e2_torsion;
  std::vector<QuadraticPointRecord> step1_records;
  StepTwoGrid grid;
  // Nontrivial points after global dedupe and orbit expansion.
  std::vector<ExpandedSet> expanded;
  std::vector<ExpandedSet> expanded_primitive;
  // One canonical representative per sign/swap orbit of the primitive set.
  std::vector<QuadraticPointRecord> s0;
  TrivialCounts trivial;
  long nontrivial_count = 0;
  long gamma2_count = 0;
  std::vector<std::string> notes;
};

// Whether the four points at infinity are quadratic over K: the degree
// criterion [K(zeta8):K] <= 2, equivalently -1, 2 or -2 a square in K.
bool infinity_points_quadratic(const FieldPtr& field, std::string* note = nullptr);

// Dedupe + orbit expansion of an arbitrary record list (nontrivial records
// only; optionally restricted to primitive ones).
std::vector<ExpandedSet> expand_records(const std::vector<QuadraticPointRecord>& records,
                                        bool primitive_only);

// The full pipeline under the declared rank-zero assumption: torsion of both
// curves, Step I scan, Step II grid, dedupe, orbit expansion, S0 selection
// and the census count.
Gamma2Report compute_gamma2(const FieldPtr& field);

// Largest preset field embeddable in K, probed in the order Qzeta8, Qalpha,
// Qsqrt2, Qi, Q.
std::string identify_l(const FieldPtr& field);

}  // namespace qp

#endif
