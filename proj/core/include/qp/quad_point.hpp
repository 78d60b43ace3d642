#ifndef QP_QUAD_POINT_HPP
#define QP_QUAD_POINT_HPP

#include <string>
#include <vector>

#include "qp/nf_minpoly.hpp"
#include "qp/quad_ext.hpp"

namespace qp {

// Affine coordinates of a Fermat-quartic point over K or over a quadratic
// extension L = K[s]/(ext): x = x0 + x1 s, y = y0 + y1 s. For K-rational
// points x1 = y1 = 0 and no extension is attached.
struct PointCoords {
  FieldElement x0, x1, y0, y1;

  friend bool operator==(const PointCoords& a, const PointCoords& b) {
    return a.x0 == b.x0 && a.x1 == b.x1 && a.y0 == b.y0 && a.y1 == b.y1;
  }
  friend bool operator<(const PointCoords& a, const PointCoords& b);
};

enum class PointSource { kStepIFromE1, kStepIFromE2, kStepIFromH3, kStepII };

// One quadratic point with its classification flags and provenance.
struct QuadraticPointRecord {
  FieldPtr base;
  ExtPtr ext;           // null for K-rational points
  PointCoords coords;
  bool trivial = false;
  int degree_over_q = 0;
  bool primitive = false;
  PointSource source = PointSource::kStepII;
  std::string provenance;

  RelElement x_rel() const;  // requires ext
  RelElement y_rel() const;
};

// Builds a record, normalizing K-rational coordinates out of a redundant
// extension presentation and verifying x^4 + y^4 = 1 exactly.
QuadraticPointRecord make_record(const FieldPtr& base, ExtPtr ext,
                                 PointCoords coords, PointSource source,
                                 std::string provenance);

// The sign/swap images {(+-x, +-y), (+-y, +-x)} of a point, deduplicated.
std::vector<PointCoords> sign_swap_orbit(const PointCoords& p);

// Closure under the eight sign/swap symmetries and, when an extension is
// present, the nontrivial K-automorphism of L. Size divides 16.
std::vector<PointCoords> assemble_orbit(const ExtPtr& ext, const PointCoords& p);

// Recomputes the parameter chain t = (1+y^2)/x^2, s = 2t, u = x(s^2+4)/2,
// v = xy(s^2+4)/2 and checks u^2 = s^3+4s, v^2 = s^3-4s exactly. Throws
// DivisionByZero when x = 0.
bool verify_bielliptic(const QuadraticPointRecord& record);

}  // namespace qp

#endif
