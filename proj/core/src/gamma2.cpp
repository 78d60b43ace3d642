#include "qp/gamma2.hpp"

#include <algorithm>
#include <set>

#include "qp/errors.hpp"

namespace qp {

size_t total_points(const std::vector<ExpandedSet>& sets) {
  size_t n = 0;
  for (const auto& s : sets) n += s.points.size();
  return n;
}

bool same_point_sets(const std::vector<ExpandedSet>& a,
                     const std::vector<ExpandedSet>& b) {
  if (total_points(a) != total_points(b)) return false;
  std::vector<bool> used(b.size(), false);
  for (const auto& ga : a) {
    bool matched = false;
    for (size_t j = 0; j < b.size() && !matched; ++j) {
      if (used[j]) continue;
      const auto& gb = b[j];
      if (!ga.ext != !gb.ext) continue;
      if (ga.points.size() != gb.points.size()) continue;
      if (!ga.ext) {
        if (ga.points == gb.points) {
          used[j] = true;
          matched = true;
        }
        continue;
      }
      if (ga.ext->same_ext(*gb.ext)) {
        if (ga.points == gb.points) {
          used[j] = true;
          matched = true;
        }
        continue;
      }
      auto img = embed_extension(*ga.ext, gb.ext);
      if (!img) continue;
      std::set<PointCoords> mapped;
      for (const auto& p : ga.points) {
        RelElement x = RelElement::from_base(gb.ext, p.x0) +
                       *img * RelElement::from_base(gb.ext, p.x1);
        RelElement y = RelElement::from_base(gb.ext, p.y0) +
                       *img * RelElement::from_base(gb.ext, p.y1);
        mapped.insert(PointCoords{x.c0(), x.c1(), y.c0(), y.c1()});
      }
      std::vector<PointCoords> mv(mapped.begin(), mapped.end());
      if (mv == gb.points) {
        used[j] = true;
        matched = true;
      }
    }
    if (!matched) return false;
  }
  return true;
}

bool infinity_points_quadratic(const FieldPtr& field, std::string* note) {
  bool minus_one = false, two = false, minus_two = false;
  for (long v : {-1L, 2L, -2L}) {
    SquareResult sq = is_square(FieldElement::from_rational(field, Rational(v)));
    if (sq.kind == SquareResult::Kind::kInconclusive)
      throw Inconclusive("square test inconclusive on the infinity criterion");
    if (sq.is_square()) {
      if (v == -1) minus_one = true;
      if (v == 2) two = true;
      if (v == -2) minus_two = true;
    }
  }
  const bool quadratic = minus_one || two || minus_two;
  if (note && quadratic && !minus_one && !two && minus_two) {
    *note =
        "points at infinity counted via [K(zeta8):K] <= 2, which holds here "
        "only because -2 is a square in K (neither -1 nor 2 is)";
  }
  return quadratic;
}

namespace {

// Orbit-expanded union per dedupe group, with an optional primitivity filter.
std::vector<ExpandedSet> expand_groups(const std::vector<DedupeGroup>& groups,
                                       bool primitive_only) {
  std::vector<ExpandedSet> out;
  for (const auto& g : groups) {
    std::set<PointCoords> acc;
    for (const auto& rec : g.records) {
      if (rec.trivial) continue;
      if (primitive_only && !rec.primitive) continue;
      for (auto& p : assemble_orbit(g.ext, rec.coords)) acc.insert(std::move(p));
    }
    if (acc.empty()) continue;
    ExpandedSet s;
    s.ext = g.ext;
    s.points.assign(acc.begin(), acc.end());
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

std::vector<ExpandedSet> expand_records(const std::vector<QuadraticPointRecord>& records,
                                        bool primitive_only) {
  return expand_groups(dedupe_points(records), primitive_only);
}

Gamma2Report compute_gamma2(const FieldPtr& field) {
  Gamma2Report report;
  report.field = field;
  report.assumptions = {"rank_zero_E1", "rank_zero_E2"};

  report.e1_torsion = ec_torsion(curve_e1(field));
  report.e2_torsion = ec_torsion(curve_e2(field));

  report.step1_records = step1_scan(field, report.e1_torsion, report.e2_torsion);
  report.grid = step2_grid(field, report.e1_torsion, report.e2_torsion);

  std::vector<QuadraticPointRecord> all = report.step1_records;
  for (const auto& row : report.grid.cells)
    for (const auto& cell : row)
      for (const auto& rec : cell.points) all.push_back(rec);

  std::vector<DedupeGroup> groups = dedupe_points(all);
  report.expanded = expand_groups(groups, false);
  report.expanded_primitive = expand_groups(groups, true);
  report.nontrivial_count = static_cast<long>(total_points(report.expanded));

  // S0: one representative per sign/swap orbit of the primitive points, the
  // lexicographically least serialized form in each orbit.
  for (const auto& s : report.expanded_primitive) {
    std::set<PointCoords> remaining(s.points.begin(), s.points.end());
    while (!remaining.empty()) {
      PointCoords rep = *remaining.begin();
      for (const auto& q : sign_swap_orbit(rep)) remaining.erase(q);
      report.s0.push_back(make_record(field, s.ext, rep, PointSource::kStepII,
                                      "s0 representative"));
    }
  }
  std::sort(report.s0.begin(), report.s0.end(),
            [](const QuadraticPointRecord& a, const QuadraticPointRecord& b) {
              return a.coords < b.coords;
            });

  std::string note;
  report.trivial.affine = 8;
  report.trivial.infinity = infinity_points_quadratic(field, &note) ? 4 : 0;
  if (!note.empty()) report.notes.push_back(note);
  report.gamma2_count =
      report.trivial.affine + report.trivial.infinity + report.nontrivial_count;

  report.identified_l = identify_l(field);
  return report;
}

}  // namespace qp
