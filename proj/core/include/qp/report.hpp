#ifndef QP_REPORT_HPP
#define QP_REPORT_HPP

#include <json.hpp>

#include "qp/gamma2.hpp"

namespace qp {

using Json = nlohmann::json;

// Serialization of the wire formats. Rationals are "p/q" (or "p"),
// field elements arrays of rational strings (constant coordinate first),
// relative elements {"c0": [...], "c1": [...]}, polynomials arrays of
// coefficients lowest degree first.
Json field_to_json(const NumberField& field);
std::shared_ptr<const NumberField> field_from_json(const Json& j);

Json element_to_json(const FieldElement& e);
Json nfpoly_to_json(const NfPoly& p);
Json curve_point_to_json(const CurvePoint& p);
Json record_to_json(const QuadraticPointRecord& r);
Json torsion_to_json(const TorsionTable& t);
Json grid_to_json(const StepTwoGrid& g);
Json report_to_json(const Gamma2Report& r);

std::string report_to_text(const Gamma2Report& r);
std::string torsion_pair_to_text(const TorsionTable& e1, const TorsionTable& e2);

}  // namespace qp

#endif
