#include "qp/report.hpp"

#include <sstream>

#include "qp/errors.hpp"

namespace qp {

Json field_to_json(const NumberField& field) {
  Json j;
  j["minpoly"] = field.minpoly().to_strings();
  if (!field.label().empty()) j["label"] = field.label();
  return j;
}

std::shared_ptr<const NumberField> field_from_json(const Json& j) {
  if (!j.contains("minpoly") || !j["minpoly"].is_array())
    throw InputError("field spec needs a minpoly array");
  std::vector<std::string> ss = j["minpoly"].get<std::vector<std::string>>();
  auto poly = RatPoly::from_strings(ss);
  if (!poly) throw InputError("field spec has an unparsable coefficient");
  std::string label = j.value("label", std::string());
  return NumberField::create(std::move(*poly), std::move(label));
}

Json element_to_json(const FieldElement& e) {
  return Json(e.to_strings());
}

Json nfpoly_to_json(const NfPoly& p) {
  Json j = Json::array();
  for (const auto& c : p.coeffs()) j.push_back(element_to_json(c));
  return j;
}

Json curve_point_to_json(const CurvePoint& p) {
  if (p.is_infinity()) return Json("infinity");
  return Json::array({element_to_json(p.x()), element_to_json(p.y())});
}

Json record_to_json(const QuadraticPointRecord& r) {
  Json j;
  j["x"] = {{"c0", element_to_json(r.coords.x0)}, {"c1", element_to_json(r.coords.x1)}};
  j["y"] = {{"c0", element_to_json(r.coords.y0)}, {"c1", element_to_json(r.coords.y1)}};
  if (r.ext) {
    j["ext_poly"] = nfpoly_to_json(r.ext->ext_poly());
  } else {
    j["ext_poly"] = nullptr;
  }
  j["trivial"] = r.trivial;
  j["primitive"] = r.primitive;
  j["degree_over_Q"] = r.degree_over_q;
  j["provenance"] = r.provenance;
  return j;
}

Json torsion_to_json(const TorsionTable& t) {
  Json j;
  j["structure"] = {t.structure.first, t.structure.second};
  Json pts = Json::array();
  for (const auto& p : t.points) pts.push_back(curve_point_to_json(p));
  j["points"] = std::move(pts);
  j["bound"] = t.bound.get_str();
  Json certs = Json::array();
  for (const auto& c : t.certificate) {
    Json jc;
    jc["p"] = c.p;
    jc["counts"] = c.counts;
    certs.push_back(std::move(jc));
  }
  j["certificate"] = std::move(certs);
  return j;
}

Json grid_to_json(const StepTwoGrid& g) {
  Json j;
  Json cols = Json::array(), rows = Json::array();
  for (const auto& p : g.e1_reps) cols.push_back(curve_point_to_json(p));
  for (const auto& p : g.e2_reps) rows.push_back(curve_point_to_json(p));
  j["cols_P1"] = std::move(cols);
  j["rows_P2"] = std::move(rows);
  Json cells = Json::array();
  for (const auto& row : g.cells) {
    Json jrow = Json::array();
    for (const auto& cell : row) {
      if (cell.outcome != StepTwoOutcome::kPoints) {
        jrow.push_back(Json("x"));
        continue;
      }
      Json jc;
      Json qs = Json::array();
      for (const auto& q : cell.qs) qs.push_back(nfpoly_to_json(q));
      jc["Q"] = std::move(qs);
      Json pts = Json::array();
      for (const auto& r : cell.points) pts.push_back(record_to_json(r));
      jc["points"] = std::move(pts);
      jrow.push_back(std::move(jc));
    }
    cells.push_back(std::move(jrow));
  }
  j["cells"] = std::move(cells);
  return j;
}

Json report_to_json(const Gamma2Report& r) {
  Json j;
  j["field"] = field_to_json(*r.field);
  j["identified_L"] = r.identified_l;
  j["assumptions"] = r.assumptions;
  j["torsion"] = {{"E1", torsion_to_json(r.e1_torsion)},
                  {"E2", torsion_to_json(r.e2_torsion)}};
  Json s0 = Json::array();
  for (const auto& rec : r.s0) s0.push_back(record_to_json(rec));
  j["s0"] = std::move(s0);
  j["gamma2_count"] = r.gamma2_count;
  j["nontrivial_count"] = r.nontrivial_count;
  j["trivial"] = {{"affine", r.trivial.affine}, {"infinity", r.trivial.infinity}};
  j["table"] = grid_to_json(r.grid);
  j["notes"] = r.notes;
  return j;
}

namespace {

std::string coords_text(const PointCoords& c, bool has_ext) {
  std::ostringstream os;
  auto one = [&](const FieldElement& a0, const FieldElement& a1) {
    os << a0.str();
    if (has_ext) os << " + " << a1.str() << "*s";
  };
  os << "(";
  one(c.x0, c.x1);
  os << ", ";
  one(c.y0, c.y1);
  os << ")";
  return os.str();
}

}  // namespace

std::string torsion_pair_to_text(const TorsionTable& e1, const TorsionTable& e2) {
  std::ostringstream os;
  auto dump = [&](const char* name, const TorsionTable& t) {
    os << name << ": Z/" << t.structure.first << " x Z/" << t.structure.second
       << "  (order " << t.order() << ", reduction bound " << t.bound.get_str()
       << ")\n";
    for (const auto& p : t.points) os << "  " << p.str() << "\n";
  };
  dump("E1: y^2 = x^3 + 4x", e1);
  dump("E2: y^2 = x^3 - 4x", e2);
  return os.str();
}

std::string report_to_text(const Gamma2Report& r) {
  std::ostringstream os;
  os << "field: " << (r.field->label().empty() ? r.field->minpoly().str()
                                               : r.field->label())
     << "\n";
  os << "identified L: " << r.identified_l << "\n";
  os << "assumptions:";
  for (const auto& a : r.assumptions) os << " " << a;
  os << "\n\n";
  os << torsion_pair_to_text(r.e1_torsion, r.e2_torsion) << "\n";

  os << "S0 (primitive quadratic points, one representative per sign/swap orbit):\n";
  if (r.s0.empty()) os << "  (none)\n";
  for (const auto& rec : r.s0) {
    os << "  " << coords_text(rec.coords, rec.ext != nullptr);
    if (rec.ext)
      os << "   with s^2 + (" << rec.ext->lin_coeff().str() << ")*s + ("
         << rec.ext->const_coeff().str() << ") = 0";
    os << "\n";
  }
  os << "\n";
  os << "trivial points: " << r.trivial.affine << " affine, " << r.trivial.infinity
     << " at infinity\n";
  os << "nontrivial quadratic points: " << r.nontrivial_count << "\n";
  os << "|Gamma_2| = " << r.gamma2_count << "\n";
  for (const auto& n : r.notes) os << "note: " << n << "\n";
  return os.str();
}

}  // namespace qp
