#ifndef QP_REFERENCE_HPP
#define QP_REFERENCE_HPP

#include <string>
#include <vector>

#include "qp/gamma2.hpp"

namespace qp {

// Reference data for the five built-in fields: census cardinalities, torsion
// tables of both curves, the S0 orbit sets, and the Step II pair grids for
// Q, Qi and Qzeta8. Everything is exact; checks compare expanded point sets
// rather than representative spellings.
namespace reference {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

long expected_count(const std::string& label);
size_t expected_s0_orbits(const std::string& label);

// Golden torsion tables (point-for-point).
std::vector<CurvePoint> expected_torsion_points(const std::string& label,
                                                int which_curve /* 1 or 2 */);
std::pair<long, long> expected_structure(const std::string& label, int which_curve);

// Golden S0 representatives as verified records.
std::vector<QuadraticPointRecord> expected_s0(const FieldPtr& field);

// One expected non-x cell of a Step II grid.
struct GridCell {
  CurvePoint p1, p2;
  std::vector<NfPoly> qs;
  std::vector<QuadraticPointRecord> points;
};
std::vector<GridCell> expected_grid_cells(const FieldPtr& field);
bool grid_available(const std::string& label);

// Every reference check against a computed report; used by verify-paper and
// the acceptance suite.
std::vector<CheckResult> check_report(const Gamma2Report& report);

// Convenience: run all five built-in fields.
std::vector<CheckResult> run_all_checks();

}  // namespace reference
}  // namespace qp

#endif
