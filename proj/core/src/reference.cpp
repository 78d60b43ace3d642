#include "qp/reference.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "qp/errors.hpp"

namespace qp {
namespace reference {

namespace {

// Small builders for golden data in the power basis of each field.
struct Builder {
  FieldPtr field;

  FieldElement el(std::vector<Rational> v) const {
    v.resize(static_cast<size_t>(field->degree()), Rational(0));
    return FieldElement(field, std::move(v));
  }
  FieldElement el0() const { return FieldElement::zero(field); }

  CurvePoint pt(std::vector<Rational> x, std::vector<Rational> y) const {
    return CurvePoint(el(std::move(x)), el(std::move(y)));
  }

  ExtPtr ext(std::vector<Rational> b, std::vector<Rational> c) const {
    auto made = RelQuadExt::make(field, el(std::move(b)), el(std::move(c)));
    if (!std::holds_alternative<ExtPtr>(made))
      throw Error("reference extension is reducible; transcription bug");
    return std::get<ExtPtr>(made);
  }

  QuadraticPointRecord rec(const ExtPtr& e, std::vector<Rational> x0,
                           std::vector<Rational> x1, std::vector<Rational> y0,
                           std::vector<Rational> y1) const {
    return make_record(field, e,
                       PointCoords{el(std::move(x0)), el(std::move(x1)),
                                   el(std::move(y0)), el(std::move(y1))},
                       PointSource::kStepII, "reference");
  }
};

Rational rq(long n, long d = 1) { return Rational(n, d); }

}  // namespace

long expected_count(const std::string& label) {
  if (label == "Q") return 16;
  if (label == "Qi") return 44;
  if (label == "Qsqrt2") return 28;
  if (label == "Qalpha") return 44;
  if (label == "Qzeta8") return 188;
  throw InputError("no reference count for " + label);
}

size_t expected_s0_orbits(const std::string& label) {
  if (label == "Q") return 1;
  if (label == "Qi") return 3;
  if (label == "Qsqrt2") return 2;
  if (label == "Qalpha") return 2;
  if (label == "Qzeta8") return 17;
  throw InputError("no reference S0 size for " + label);
}

std::pair<long, long> expected_structure(const std::string& label, int which) {
  if (label == "Q") return which == 1 ? std::pair{1L, 4L} : std::pair{2L, 2L};
  if (label == "Qi") return which == 1 ? std::pair{2L, 4L} : std::pair{2L, 2L};
  if (label == "Qsqrt2") return which == 1 ? std::pair{1L, 4L} : std::pair{2L, 4L};
  if (label == "Qalpha") return which == 1 ? std::pair{1L, 8L} : std::pair{2L, 4L};
  if (label == "Qzeta8") return std::pair{4L, 4L};
  throw InputError("no reference torsion structure for " + label);
}

std::vector<CurvePoint> expected_torsion_points(const std::string& label, int which) {
  Builder b{NumberField::preset(label)};
  std::vector<CurvePoint> pts;
  pts.push_back(CurvePoint::infinity());
  pts.push_back(b.pt({rq(0)}, {rq(0)}));

  if (which == 1) {
    pts.push_back(b.pt({rq(2)}, {rq(4)}));
    pts.push_back(b.pt({rq(2)}, {rq(-4)}));
    if (label == "Qi" || label == "Qzeta8") {
      // i = t over Qi, i = t^2 over Qzeta8
      std::vector<Rational> i4 =
          label == "Qi" ? std::vector<Rational>{rq(0), rq(4)}
                        : std::vector<Rational>{rq(0), rq(0), rq(4), rq(0)};
      std::vector<Rational> i2 =
          label == "Qi" ? std::vector<Rational>{rq(0), rq(2)}
                        : std::vector<Rational>{rq(0), rq(0), rq(2), rq(0)};
      auto neg = [](std::vector<Rational> v) {
        for (auto& c : v) c = -c;
        return v;
      };
      pts.push_back(b.pt({rq(-2)}, i4));
      pts.push_back(b.pt({rq(-2)}, neg(i4)));
      pts.push_back(b.pt(i2, {rq(0)}));
      pts.push_back(b.pt(neg(i2), {rq(0)}));
    }
    if (label == "Qalpha") {
      // S_{1,1} = (2(a^3+a^2-a), 4(a^3+a^2+1)), S_{1,2} = (2(-a^3+a^2+a), 4(a^3-a^2-1))
      pts.push_back(b.pt({rq(0), rq(-2), rq(2), rq(2)}, {rq(4), rq(0), rq(4), rq(4)}));
      pts.push_back(b.pt({rq(0), rq(-2), rq(2), rq(2)}, {rq(-4), rq(0), rq(-4), rq(-4)}));
      pts.push_back(b.pt({rq(0), rq(2), rq(2), rq(-2)}, {rq(-4), rq(0), rq(-4), rq(4)}));
      pts.push_back(b.pt({rq(0), rq(2), rq(2), rq(-2)}, {rq(4), rq(0), rq(4), rq(-4)}));
    }
    if (label == "Qzeta8") {
      // R_{1,1} = (2(t^3+t^2+t), 4(t^3+t^2-1)), R_{1,2} = -x of it with y = 4(t^2+t+1),
      // R_{1,3} = (2(-t^3+t^2-t), 4(t^3-t^2+1)), R_{1,4} = (2(t^3-t^2+t), 4(t^2-t+1)).
      auto add_pm = [&](std::vector<Rational> x, std::vector<Rational> y) {
        auto yneg = y;
        for (auto& c : yneg) c = -c;
        pts.push_back(b.pt(x, y));
        pts.push_back(b.pt(std::move(x), std::move(yneg)));
      };
      add_pm({rq(0), rq(2), rq(2), rq(2)}, {rq(-4), rq(0), rq(4), rq(4)});
      add_pm({rq(0), rq(-2), rq(-2), rq(-2)}, {rq(4), rq(4), rq(4), rq(0)});
      add_pm({rq(0), rq(-2), rq(2), rq(-2)}, {rq(4), rq(0), rq(-4), rq(4)});
      add_pm({rq(0), rq(2), rq(-2), rq(2)}, {rq(4), rq(-4), rq(4), rq(0)});
    }
  } else {
    pts.push_back(b.pt({rq(2)}, {rq(0)}));
    pts.push_back(b.pt({rq(-2)}, {rq(0)}));
    if (label == "Qsqrt2" || label == "Qalpha") {
      // over Qsqrt2: sqrt2 = t; over Qalpha: sqrt2 = t^2 - 1
      auto add_pm = [&](std::vector<Rational> x, std::vector<Rational> y) {
        auto yneg = y;
        for (auto& c : yneg) c = -c;
        pts.push_back(b.pt(x, y));
        pts.push_back(b.pt(std::move(x), std::move(yneg)));
      };
      if (label == "Qsqrt2") {
        add_pm({rq(2), rq(2)}, {rq(4), rq(4)});    // (2(sqrt2+1), 4(sqrt2+1))
        add_pm({rq(2), rq(-2)}, {rq(-4), rq(4)});  // (2(1-sqrt2), 4(sqrt2-1))
      } else {
        add_pm({rq(0), rq(0), rq(2), rq(0)}, {rq(0), rq(0), rq(4), rq(0)});
        add_pm({rq(4), rq(0), rq(-2), rq(0)}, {rq(-8), rq(0), rq(4), rq(0)});
      }
    }
    if (label == "Qzeta8") {
      auto add_pm = [&](std::vector<Rational> x, std::vector<Rational> y) {
        auto yneg = y;
        for (auto& c : yneg) c = -c;
        pts.push_back(b.pt(x, y));
        pts.push_back(b.pt(std::move(x), std::move(yneg)));
      };
      add_pm({rq(0), rq(0), rq(2), rq(0)}, {rq(0), rq(0), rq(0), rq(4)});   // R_{2,1}
      add_pm({rq(0), rq(0), rq(-2), rq(0)}, {rq(0), rq(4), rq(0), rq(0)});  // R_{2,2}
      add_pm({rq(-2), rq(-2), rq(0), rq(2)}, {rq(0), rq(4), rq(4), rq(4)}); // R_{2,3}
      add_pm({rq(-2), rq(2), rq(0), rq(-2)}, {rq(0), rq(4), rq(-4), rq(4)});// R_{2,4}
      add_pm({rq(2), rq(-2), rq(0), rq(2)}, {rq(4), rq(-4), rq(0), rq(4)}); // R_{2,5}
      add_pm({rq(2), rq(2), rq(0), rq(-2)}, {rq(-4), rq(-4), rq(0), rq(4)});// R_{2,6}
    }
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

std::vector<QuadraticPointRecord> expected_s0(const FieldPtr& field) {
  Builder b{field};
  const std::string& label = field->label();
  std::vector<QuadraticPointRecord> out;

  if (label == "Q") {
    // (-s-1, -s) with s^2 + s + 2 = 0: the classical sqrt(-7) orbit.
    auto e = b.ext({rq(1)}, {rq(2)});
    out.push_back(b.rec(e, {rq(-1)}, {rq(-1)}, {rq(0)}, {rq(-1)}));
    return out;
  }
  if (label == "Qi") {
    auto e1 = b.ext({rq(-2)}, {rq(8)});
    out.push_back(b.rec(e1, {}, {rq(0), rq(-1, 2)}, {rq(0), rq(1)}, {rq(0), rq(-1, 2)}));
    auto e2 = b.ext({rq(2)}, {rq(8)});
    out.push_back(b.rec(e2, {}, {rq(-1, 2)}, {rq(0), rq(-1)}, {rq(0), rq(-1, 2)}));
    auto e3 = b.ext({rq(-1)}, {rq(2)});
    out.push_back(b.rec(e3, {rq(0), rq(1)}, {rq(0), rq(-1)}, {}, {rq(-1)}));
    return out;
  }
  if (label == "Qsqrt2") {
    // (g, g) with g^2 = sqrt2/2 and with g^2 = -sqrt2/2
    auto e1 = b.ext({}, {rq(0), rq(-1, 2)});
    out.push_back(b.rec(e1, {}, {rq(1)}, {}, {rq(1)}));
    auto e2 = b.ext({}, {rq(0), rq(1, 2)});
    out.push_back(b.rec(e2, {}, {rq(1)}, {}, {rq(1)}));
    return out;
  }
  if (label == "Qalpha") {
    // (delta, -a^3 + 2a) with delta^2 = a^3 - 3a, and the sqrt(-1)-twist
    auto e1 = b.ext({}, {rq(0), rq(3), rq(0), rq(-1)});
    out.push_back(b.rec(e1, {}, {rq(1)}, {rq(0), rq(2), rq(0), rq(-1)}, {}));
    auto e2 = b.ext({}, {rq(0), rq(-3), rq(0), rq(1)});
    out.push_back(b.rec(e2, {}, {rq(1)}, {rq(0), rq(2), rq(0), rq(-1)}, {}));
    return out;
  }
  if (label == "Qzeta8") {
    // Step I: five orbits through the fourth root of 2.
    auto eA = b.ext({}, {rq(0), rq(-1), rq(0), rq(1)});  // g^2 = t - t^3
    auto eB = b.ext({}, {rq(0), rq(1), rq(0), rq(-1)});  // g^2 = t^3 - t
    out.push_back(b.rec(eA, {}, {rq(1)}, {rq(0), rq(1)}, {}));             // (g, t)
    out.push_back(b.rec(eB, {}, {rq(1)}, {rq(0), rq(1)}, {}));
    out.push_back(b.rec(eA, {}, {rq(1)}, {rq(0), rq(0), rq(0), rq(1)}, {}));  // (g, t^3)
    out.push_back(b.rec(eB, {}, {rq(1)}, {rq(0), rq(0), rq(0), rq(1)}, {}));
    auto eC = b.ext({}, {rq(0), rq(1, 2), rq(0), rq(-1, 2)});  // g^2 = (t^3 - t)/2
    out.push_back(b.rec(eC, {}, {rq(1)}, {}, {rq(0), rq(0), rq(-1), rq(0)}));  // (g, -t^2 g)

    // Step II: the twelve primitive grid orbits.
    for (auto& cell : expected_grid_cells(field)) {
      for (auto& rec : cell.points)
        if (rec.primitive) out.push_back(rec);
    }
    return out;
  }
  throw InputError("no reference S0 for " + field->label());
}

bool grid_available(const std::string& label) {
  return label == "Q" || label == "Qi" || label == "Qsqrt2" ||
         label == "Qalpha" || label == "Qzeta8";
}

std::vector<GridCell> expected_grid_cells(const FieldPtr& field) {
  Builder b{field};
  const std::string& label = field->label();
  std::vector<GridCell> cells;

  auto mk_q = [&](std::vector<Rational> lin, std::vector<Rational> cst) {
    return NfPoly(field, {b.el(std::move(cst)), b.el(std::move(lin)),
                          FieldElement::one(field)});
  };
  auto add = [&](CurvePoint p1, CurvePoint p2, NfPoly q,
                 QuadraticPointRecord rec) {
    GridCell c;
    c.p1 = std::move(p1);
    c.p2 = std::move(p2);
    c.qs.push_back(std::move(q));
    c.points.push_back(std::move(rec));
    cells.push_back(std::move(c));
  };

  // The rational cell (P1 = (2,4), P2 = (2,0)) -> T^2+T+2, (-s-1, -s) is
  // common to every one of these fields.
  {
    auto e = b.ext({rq(1)}, {rq(2)});
    add(b.pt({rq(2)}, {rq(4)}), b.pt({rq(2)}, {rq(0)}), mk_q({rq(1)}, {rq(2)}),
        b.rec(e, {rq(-1)}, {rq(-1)}, {rq(0)}, {rq(-1)}));
  }
  if (label == "Q" || label == "Qsqrt2" || label == "Qalpha") return cells;

  // i = t over Qi, t^2 over Qzeta8.
  const bool zeta = label == "Qzeta8";
  std::vector<Rational> iv = zeta ? std::vector<Rational>{rq(0), rq(0), rq(1), rq(0)}
                                  : std::vector<Rational>{rq(0), rq(1)};
  auto scale = [&](const std::vector<Rational>& v, const Rational& s) {
    std::vector<Rational> out = v;
    for (auto& c : out) c *= s;
    return out;
  };
  const std::vector<Rational> i2 = scale(iv, rq(2));
  const std::vector<Rational> i4 = scale(iv, rq(4));
  const std::vector<Rational> im2 = scale(iv, rq(-2));
  const std::vector<Rational> neg_half_i = scale(iv, rq(-1, 2));

  // (P1 = (-2, 4i), P2 = (2,0)) -> x^2 - 2x + 8, (-i s/2, -i s/2 + i)
  {
    auto e = b.ext({rq(-2)}, {rq(8)});
    add(b.pt({rq(-2)}, i4), b.pt({rq(2)}, {rq(0)}), mk_q({rq(-2)}, {rq(8)}),
        b.rec(e, {}, neg_half_i, iv, neg_half_i));
  }
  // (P1 = (2,4), P2 = (-2,0)) -> x^2 + 2x + 8, (-s/2, -i s/2 - i)
  {
    auto e = b.ext({rq(2)}, {rq(8)});
    add(b.pt({rq(2)}, {rq(4)}), b.pt({rq(-2)}, {rq(0)}), mk_q({rq(2)}, {rq(8)}),
        b.rec(e, {}, {rq(-1, 2)}, scale(iv, rq(-1)), neg_half_i));
  }
  // (P1 = (-2, 4i), P2 = (-2,0)) -> x^2 - x + 2, (-i s + i, -s)
  {
    auto e = b.ext({rq(-1)}, {rq(2)});
    add(b.pt({rq(-2)}, i4), b.pt({rq(-2)}, {rq(0)}), mk_q({rq(-1)}, {rq(2)}),
        b.rec(e, iv, scale(iv, rq(-1)), {}, {rq(-1)}));
  }
  if (label == "Qi") return cells;

  // Qzeta8 only below; s2 = t^3 - t plays sqrt2.
  const std::vector<Rational> t{rq(0), rq(1), rq(0), rq(0)};
  const std::vector<Rational> t3{rq(0), rq(0), rq(0), rq(1)};
  auto lin_comb = [&](const Rational& a, const Rational& c) {
    // a*t + c*t^3
    return std::vector<Rational>{rq(0), a, rq(0), c};
  };
  const CurvePoint p_2i0 = b.pt(i2, {rq(0)});
  const CurvePoint p_m2i0 = b.pt(im2, {rq(0)});
  const CurvePoint p_24 = b.pt({rq(2)}, {rq(4)});
  const CurvePoint p_m2_4i = b.pt({rq(-2)}, i4);
  const CurvePoint p_20 = b.pt({rq(2)}, {rq(0)});
  const CurvePoint p_m20 = b.pt({rq(-2)}, {rq(0)});
  const CurvePoint r21 = b.pt(i2, {rq(0), rq(0), rq(0), rq(4)});
  const CurvePoint r22 = b.pt(im2, {rq(0), rq(4), rq(0), rq(0)});

  // Row (2,0), columns (2i, 0) and (-2i, 0).
  {
    auto e = b.ext({rq(2), rq(0), rq(2), rq(0)}, {rq(0), rq(0), rq(-4), rq(0)});
    add(p_2i0, p_20, mk_q({rq(2), rq(0), rq(2), rq(0)}, {rq(0), rq(0), rq(-4), rq(0)}),
        b.rec(e, lin_comb(rq(1, 2), rq(-1, 2)), lin_comb(rq(1, 4), rq(-1, 4)),
              lin_comb(rq(1, 2), rq(1, 2)), lin_comb(rq(1, 4), rq(-1, 4))));
  }
  {
    auto e = b.ext({rq(2), rq(0), rq(-2), rq(0)}, {rq(0), rq(0), rq(4), rq(0)});
    add(p_m2i0, p_20, mk_q({rq(2), rq(0), rq(-2), rq(0)}, {rq(0), rq(0), rq(4), rq(0)}),
        b.rec(e, lin_comb(rq(1, 2), rq(-1, 2)), lin_comb(rq(1, 4), rq(-1, 4)),
              lin_comb(rq(-1, 2), rq(-1, 2)), lin_comb(rq(1, 4), rq(-1, 4))));
  }
  // Row (-2,0), columns (2i,0) and (-2i,0).
  {
    auto e = b.ext({rq(-2), rq(0), rq(2), rq(0)}, {rq(0), rq(0), rq(4), rq(0)});
    add(p_2i0, p_m20, mk_q({rq(-2), rq(0), rq(2), rq(0)}, {rq(0), rq(0), rq(4), rq(0)}),
        b.rec(e, lin_comb(rq(1, 2), rq(1, 2)), lin_comb(rq(-1, 4), rq(-1, 4)),
              lin_comb(rq(1, 2), rq(1, 2)), lin_comb(rq(1, 4), rq(-1, 4))));
  }
  {
    auto e = b.ext({rq(-2), rq(0), rq(-2), rq(0)}, {rq(0), rq(0), rq(-4), rq(0)});
    add(p_m2i0, p_m20, mk_q({rq(-2), rq(0), rq(-2), rq(0)}, {rq(0), rq(0), rq(-4), rq(0)}),
        b.rec(e, lin_comb(rq(1, 2), rq(1, 2)), lin_comb(rq(-1, 4), rq(-1, 4)),
              lin_comb(rq(-1, 2), rq(-1, 2)), lin_comb(rq(1, 4), rq(-1, 4))));
  }
  // Row R_{2,1}: columns (2,4), (-2,4i), (2i,0), (-2i,0).
  {
    auto e = b.ext({rq(-6), rq(0), rq(-6), rq(0)}, {rq(0), rq(0), rq(4), rq(0)});
    add(p_24, r21, mk_q({rq(-6), rq(0), rq(-6), rq(0)}, {rq(0), rq(0), rq(4), rq(0)}),
        b.rec(e, {rq(-3, 4), rq(0), rq(-1, 4), rq(0)}, {rq(1, 8), rq(0), rq(-1, 8), rq(0)},
              lin_comb(rq(3, 4), rq(3, 4)), lin_comb(rq(-1, 8), rq(-1, 8))));
  }
  {
    auto e = b.ext({rq(6), rq(0), rq(-6), rq(0)}, {rq(0), rq(0), rq(-4), rq(0)});
    add(p_m2_4i, r21, mk_q({rq(6), rq(0), rq(-6), rq(0)}, {rq(0), rq(0), rq(-4), rq(0)}),
        b.rec(e, {rq(-1, 4), rq(0), rq(-3, 4), rq(0)}, {rq(1, 8), rq(0), rq(-1, 8), rq(0)},
              lin_comb(rq(-3, 4), rq(-3, 4)), lin_comb(rq(-1, 8), rq(-1, 8))));
  }
  {
    auto e = b.ext({rq(0), rq(0), rq(1), rq(0)}, {rq(-2)});
    add(p_2i0, r21, mk_q({rq(0), rq(0), rq(1), rq(0)}, {rq(-2)}),
        b.rec(e, {rq(0), rq(0), rq(0), rq(1, 2)}, {rq(0), rq(-1, 2), rq(0), rq(0)},
              {rq(1, 2)}, {rq(0), rq(0), rq(-1, 2), rq(0)}));
  }
  {
    auto e = b.ext({rq(0), rq(0), rq(2), rq(0)}, {rq(-8)});
    add(p_m2i0, r21, mk_q({rq(0), rq(0), rq(2), rq(0)}, {rq(-8)}),
        b.rec(e, {rq(0), rq(1), rq(0), rq(0)}, {rq(0), rq(0), rq(0), rq(-1, 4)},
              {}, {rq(-1, 4)}));
  }
  // Row R_{2,2}: columns (2,4), (-2,4i), (2i,0), (-2i,0).
  {
    auto e = b.ext({rq(-6), rq(0), rq(6), rq(0)}, {rq(0), rq(0), rq(-4), rq(0)});
    add(p_24, r22, mk_q({rq(-6), rq(0), rq(6), rq(0)}, {rq(0), rq(0), rq(-4), rq(0)}),
        b.rec(e, {rq(3, 4), rq(0), rq(-1, 4), rq(0)}, {rq(-1, 8), rq(0), rq(-1, 8), rq(0)},
              lin_comb(rq(3, 4), rq(3, 4)), lin_comb(rq(-1, 8), rq(-1, 8))));
  }
  {
    auto e = b.ext({rq(6), rq(0), rq(6), rq(0)}, {rq(0), rq(0), rq(4), rq(0)});
    add(p_m2_4i, r22, mk_q({rq(6), rq(0), rq(6), rq(0)}, {rq(0), rq(0), rq(4), rq(0)}),
        b.rec(e, {rq(1, 4), rq(0), rq(-3, 4), rq(0)}, {rq(-1, 8), rq(0), rq(-1, 8), rq(0)},
              lin_comb(rq(-3, 4), rq(-3, 4)), lin_comb(rq(-1, 8), rq(-1, 8))));
  }
  {
    auto e = b.ext({rq(0), rq(0), rq(-2), rq(0)}, {rq(-8)});
    add(p_2i0, r22, mk_q({rq(0), rq(0), rq(-2), rq(0)}, {rq(-8)}),
        b.rec(e, {rq(0), rq(0), rq(0), rq(1)}, {rq(0), rq(-1, 4), rq(0), rq(0)},
              {}, {rq(-1, 4)}));
  }
  {
    auto e = b.ext({rq(0), rq(0), rq(-1), rq(0)}, {rq(-2)});
    add(p_m2i0, r22, mk_q({rq(0), rq(0), rq(-1), rq(0)}, {rq(-2)}),
        b.rec(e, {rq(0), rq(1, 2), rq(0), rq(0)}, {rq(0), rq(0), rq(0), rq(-1, 2)},
              {rq(-1, 2)}, {rq(0), rq(0), rq(-1, 2), rq(0)}));
  }
  return cells;
}

namespace {

bool same_nfpoly_sets(const std::vector<NfPoly>& a, const std::vector<NfPoly>& b) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const auto& pa : a) {
    bool found = false;
    for (size_t j = 0; j < b.size() && !found; ++j) {
      if (!used[j] && pa == b[j]) {
        used[j] = true;
        found = true;
      }
    }
    if (!found) return false;
  }
  return true;
}

std::string cell_name(const CurvePoint& p1, const CurvePoint& p2) {
  return "P1=" + p1.str() + ", P2=" + p2.str();
}

void check_grid(const Gamma2Report& report, std::vector<CheckResult>& out) {
  const std::string& label = report.field->label();
  auto expected = expected_grid_cells(report.field);

  // Locate each expected cell through the canonical representatives.
  std::map<std::pair<size_t, size_t>, const GridCell*> expect_at;
  for (const auto& cell : expected) {
    CurvePoint c1 = pm_canonical(cell.p1), c2 = pm_canonical(cell.p2);
    auto i1 = std::find(report.grid.e1_reps.begin(), report.grid.e1_reps.end(), c1);
    auto i2 = std::find(report.grid.e2_reps.begin(), report.grid.e2_reps.end(), c2);
    CheckResult found{label + ": grid cell present (" + cell_name(cell.p1, cell.p2) + ")",
                      i1 != report.grid.e1_reps.end() && i2 != report.grid.e2_reps.end(),
                      ""};
    if (!found.pass) {
      out.push_back(found);
      continue;
    }
    expect_at[{static_cast<size_t>(i2 - report.grid.e2_reps.begin()),
               static_cast<size_t>(i1 - report.grid.e1_reps.begin())}] = &cell;
  }

  bool cells_ok = true;
  std::string detail;
  for (size_t i2 = 0; i2 < report.grid.cells.size(); ++i2) {
    for (size_t i1 = 0; i1 < report.grid.cells[i2].size(); ++i1) {
      const StepTwoCell& got = report.grid.cells[i2][i1];
      auto it = expect_at.find({i2, i1});
      if (it == expect_at.end()) {
        if (got.outcome == StepTwoOutcome::kPoints) {
          cells_ok = false;
          detail = "unexpected points at " + cell_name(got.p1, got.p2);
        }
        continue;
      }
      const GridCell& want = *it->second;
      if (got.outcome != StepTwoOutcome::kPoints) {
        cells_ok = false;
        detail = "missing points at " + cell_name(want.p1, want.p2);
        continue;
      }
      if (!same_nfpoly_sets(got.qs, want.qs)) {
        cells_ok = false;
        detail = "Q(T) mismatch at " + cell_name(want.p1, want.p2);
        continue;
      }
      if (!same_point_sets(expand_records(got.points, false),
                           expand_records(want.points, false))) {
        cells_ok = false;
        detail = "point mismatch at " + cell_name(want.p1, want.p2);
      }
    }
  }
  out.push_back({label + ": step II grid matches", cells_ok, detail});
}

}  // namespace

std::vector<CheckResult> check_report(const Gamma2Report& report) {
  std::vector<CheckResult> out;
  const std::string& label = report.field->label();

  out.push_back({label + ": |Gamma_2| = " + std::to_string(expected_count(label)),
                 report.gamma2_count == expected_count(label),
                 "got " + std::to_string(report.gamma2_count)});

  for (int which : {1, 2}) {
    const TorsionTable& t = which == 1 ? report.e1_torsion : report.e2_torsion;
    auto want_struct = expected_structure(label, which);
    auto want_points = expected_torsion_points(label, which);
    bool ok = t.structure == want_struct && t.points == want_points;
    out.push_back({label + ": E" + std::to_string(which) + " torsion table", ok,
                   ok ? "" : "structure or point set differs"});
  }

  {
    bool size_ok = report.s0.size() == expected_s0_orbits(label);
    auto golden = expected_s0(report.field);
    bool set_ok = same_point_sets(report.expanded_primitive,
                                  expand_records(golden, false));
    out.push_back({label + ": S0 has " + std::to_string(expected_s0_orbits(label)) +
                       " orbits",
                   size_ok, "got " + std::to_string(report.s0.size())});
    out.push_back({label + ": S0 orbit set matches", set_ok, ""});
  }

  if (grid_available(label)) check_grid(report, out);
  return out;
}

std::vector<CheckResult> run_all_checks() {
  std::vector<CheckResult> out;
  for (const auto& label : NumberField::preset_labels()) {
    auto report = compute_gamma2(NumberField::preset(label));
    auto checks = check_report(report);
    out.insert(out.end(), checks.begin(), checks.end());
  }
  return out;
}

}  // namespace reference
}  // namespace qp
