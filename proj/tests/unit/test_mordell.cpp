#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qp/report.hpp"
#include "qp/reference.hpp"

using namespace qp;

namespace {

FieldElement el(const FieldPtr& k, std::vector<Rational> v) {
  v.resize(static_cast<size_t>(k->degree()), Rational(0));
  return FieldElement(k, std::move(v));
}

CurvePoint pt(const FieldPtr& k, std::vector<Rational> x, std::vector<Rational> y) {
  return CurvePoint(el(k, std::move(x)), el(k, std::move(y)));
}

const QuadraticPointRecord* find_step1(const std::vector<QuadraticPointRecord>& recs,
                                       const FieldElement& s) {
  for (const auto& r : recs) {
    if (r.provenance.find("s=" + s.str()) != std::string::npos) return &r;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("step I over Q") {
  auto q = NumberField::preset("Q");
  auto e1 = ec_torsion(curve_e1(q)), e2 = ec_torsion(curve_e2(q));
  auto recs = step1_scan(q, e1, e2);
  REQUIRE(recs.size() == 3);  // s = -2, 0, 2; all trivial

  // s = 2 -> (1, 0), rational
  const auto* r2 = find_step1(recs, el(q, {2}));
  REQUIRE(r2);
  CHECK(!r2->ext);
  CHECK(r2->trivial);
  CHECK((r2->coords.x0 == el(q, {1}) || r2->coords.x0 == el(q, {-1})));
  CHECK(r2->coords.y0.is_zero());

  // s = 0 -> (0, b) with b^2 = -1
  const auto* r0 = find_step1(recs, el(q, {0}));
  REQUIRE(r0);
  REQUIRE(r0->ext);
  CHECK(r0->trivial);
  CHECK(r0->ext->lin_coeff().is_zero());
  CHECK(r0->ext->const_coeff() == el(q, {1}));  // s^2 + 1
  CHECK(r0->coords.x0.is_zero());

  for (const auto& r : recs) CHECK(r.trivial);
}

TEST_CASE("step I finds the fourth-root-of-two points over Qsqrt2") {
  auto k = NumberField::preset("Qsqrt2");
  auto recs = step1_scan(k, ec_torsion(curve_e1(k)), ec_torsion(curve_e2(k)));
  // s = 2 sqrt2 + 2 -> (b, b) with b^2 = sqrt2/2
  const auto* r = find_step1(recs, el(k, {2, 2}));
  REQUIRE(r);
  REQUIRE(r->ext);
  CHECK(r->ext->const_coeff() == el(k, {Rational(0), Rational(-1, 2)}));
  CHECK(!r->trivial);
  CHECK(r->primitive);
  CHECK(r->degree_over_q == 4);
  // x = the generator, y = ±x (same orbit either way)
  CHECK(r->coords.x1 == el(k, {1}));
  CHECK((r->coords.y1 == el(k, {1}) || r->coords.y1 == el(k, {-1})));
}

TEST_CASE("step I over Qalpha lands in the delta extension") {
  auto k = NumberField::preset("Qalpha");
  auto recs = step1_scan(k, ec_torsion(curve_e1(k)), ec_torsion(curve_e2(k)));
  const auto* r = find_step1(recs, el(k, {0, -2}));  // s = -2 alpha
  REQUIRE(r);
  REQUIRE(r->ext);
  // ext s^2 - (t^3 - 3t); point (delta, -a^3 + 2a)
  CHECK(r->ext->const_coeff() == el(k, {0, 3, 0, -1}));
  CHECK((r->coords.y0 == el(k, {0, 2, 0, -1}) || r->coords.y0 == el(k, {0, -2, 0, 1})));
  CHECK(r->primitive);
}

TEST_CASE("step II: the rational cell and its neighbors") {
  auto q = NumberField::preset("Q");
  StepTwoCell cell = step2_pair(q, pt(q, {2}, {4}), pt(q, {2}, {0}));
  REQUIRE(cell.outcome == StepTwoOutcome::kPoints);
  REQUIRE(cell.qs.size() == 1);
  CHECK(cell.qs[0] == NfPoly::from_ratpoly(q, RatPoly{2, 1, 1}));
  // the orbit contains (-s-1, -s) = (omega, omega-bar)
  bool found = false;
  for (const auto& rec : cell.points) {
    for (const auto& p : assemble_orbit(rec.ext, rec.coords)) {
      if (p.x0 == el(q, {-1}) && p.x1 == el(q, {-1}) && p.y0.is_zero() &&
          p.y1 == el(q, {-1}))
        found = true;
    }
  }
  CHECK(found);

  CHECK(step2_pair(q, pt(q, {0}, {0}), pt(q, {2}, {0})).outcome ==
        StepTwoOutcome::kNoSolution);
  CHECK(step2_pair(q, pt(q, {0}, {0}), pt(q, {0}, {0})).outcome ==
        StepTwoOutcome::kNoSolution);
  // (2,4) x (-2,0): the only solution gives the reducible T(T-2)
  CHECK(step2_pair(q, pt(q, {2}, {4}), pt(q, {-2}, {0})).outcome ==
        StepTwoOutcome::kReducible);
}

TEST_CASE("step II over Qi reproduces the published quadratics") {
  auto qi = NumberField::preset("Qi");
  StepTwoCell cell = step2_pair(qi, pt(qi, {-2}, {0, 4}), pt(qi, {-2}, {0}));
  REQUIRE(cell.outcome == StepTwoOutcome::kPoints);
  REQUIRE(cell.qs.size() == 1);
  CHECK(cell.qs[0] == NfPoly::from_ratpoly(qi, RatPoly{2, -1, 1}));  // x^2 - x + 2

  StepTwoCell c2 = step2_pair(qi, pt(qi, {2}, {4}), pt(qi, {-2}, {0}));
  REQUIRE(c2.outcome == StepTwoOutcome::kPoints);
  CHECK(c2.qs[0] == NfPoly::from_ratpoly(qi, RatPoly{8, 2, 1}));  // x^2 + 2x + 8
}

TEST_CASE("step II over Qzeta8: a 2-torsion pair and an R-row cell") {
  auto z8 = NumberField::preset("Qzeta8");
  // (P1, P2) = ((2i, 0), (2, 0)) -> Q = T^2 + (2 + 2i) T - 4i
  StepTwoCell cell = step2_pair(z8, pt(z8, {0, 0, 2, 0}, {0}), pt(z8, {2}, {0}));
  REQUIRE(cell.outcome == StepTwoOutcome::kPoints);
  NfPoly expect(z8, {el(z8, {0, 0, -4, 0}), el(z8, {2, 0, 2, 0}),
                     FieldElement::one(z8)});
  REQUIRE(cell.qs.size() == 1);
  CHECK(cell.qs[0] == expect);

  // (P1, P2) = ((2,4), R_{2,1}) -> Q = T^2 + (-6i - 6) T + 4i
  StepTwoCell r21 = step2_pair(z8, pt(z8, {2}, {4}), pt(z8, {0, 0, 2, 0}, {0, 0, 0, 4}));
  REQUIRE(r21.outcome == StepTwoOutcome::kPoints);
  NfPoly expect2(z8, {el(z8, {0, 0, 4, 0}), el(z8, {-6, 0, -6, 0}),
                      FieldElement::one(z8)});
  REQUIRE(r21.qs.size() == 1);
  CHECK(r21.qs[0] == expect2);

  // ((0,0), (2,0)) over a field containing sqrt2 forces t^2 = -1: excluded
  CHECK(step2_pair(z8, pt(z8, {0}, {0}), pt(z8, {2}, {0})).outcome ==
        StepTwoOutcome::kExcludedT);
}

TEST_CASE("step II outcome is invariant under sign flips of the pair") {
  auto qi = NumberField::preset("Qi");
  CurvePoint p1 = pt(qi, {-2}, {0, 4});
  CurvePoint p2 = pt(qi, {2}, {0});
  StepTwoCell a = step2_pair(qi, p1, p2);
  StepTwoCell b = step2_pair(qi, ec_neg(p1), p2);
  REQUIRE(a.outcome == b.outcome);
  REQUIRE(a.qs.size() == b.qs.size());
  CHECK(a.qs[0] == b.qs[0]);
  CHECK(same_point_sets(expand_records(a.points, false),
                        expand_records(b.points, false)));
}

TEST_CASE("orbit sizes divide sixteen") {
  auto q = NumberField::preset("Q");
  auto ext = std::get<ExtPtr>(RelQuadExt::make(q, el(q, {1}), el(q, {2})));
  // (omega, omega-bar): conjugation coincides with the swap, size 8
  PointCoords omega{el(q, {1}), el(q, {1}), el(q, {0}), el(q, {-1})};
  CHECK(assemble_orbit(ext, omega).size() == 8);

  // (g, g) over Qsqrt2: equal coordinates collapse the swaps, size 4
  auto k2 = NumberField::preset("Qsqrt2");
  auto ext2 = std::get<ExtPtr>(
      RelQuadExt::make_sqrt(k2, el(k2, {Rational(0), Rational(1, 2)})));
  PointCoords diag{el(k2, {0}), el(k2, {1}), el(k2, {0}), el(k2, {1})};
  CHECK(assemble_orbit(ext2, diag).size() == 4);

  // (omega, i omega-bar) over Qi: conjugation escapes the sign/swap set, 16
  auto qi = NumberField::preset("Qi");
  auto ext_i = std::get<ExtPtr>(RelQuadExt::make(qi, el(qi, {1}), el(qi, {2})));
  PointCoords mixed{el(qi, {1}), el(qi, {1}), el(qi, {0, 0}), el(qi, {0, -1})};
  CHECK(assemble_orbit(ext_i, mixed).size() == 16);

  // trivial (0, 1): sign/swap orbit {(0,±1), (±1,0)}
  PointCoords triv{el(q, {0}), el(q, {0}), el(q, {1}), el(q, {0})};
  CHECK(sign_swap_orbit(triv).size() == 4);
}

TEST_CASE("dedupe merges isomorphic presentations") {
  auto q = NumberField::preset("Q");
  // (omega, omega-bar) in s^2 + s + 2 = 0
  auto e1 = std::get<ExtPtr>(RelQuadExt::make(q, el(q, {1}), el(q, {2})));
  auto rec1 = make_record(q, e1, {el(q, {1}), el(q, {1}), el(q, {0}), el(q, {-1})},
                          PointSource::kStepII, "a");
  // the same point in s^2 + 7 = 0: omega = (1+s)/2, omega-bar = (1-s)/2
  auto e2 = std::get<ExtPtr>(RelQuadExt::make_sqrt(q, el(q, {-7})));
  auto rec2 = make_record(q, e2,
                          {el(q, {Rational(1, 2)}), el(q, {Rational(1, 2)}),
                           el(q, {Rational(1, 2)}), el(q, {Rational(-1, 2)})},
                          PointSource::kStepII, "b");
  auto groups = dedupe_points({rec1, rec2});
  REQUIRE(groups.size() == 1);
  // the two presentations may land on swap-related representatives; the
  // expanded orbit unions must coincide either way
  CHECK(same_point_sets(expand_records({rec1, rec2}, false),
                        expand_records({rec1}, false)));
  CHECK(total_points(expand_records({rec1, rec2}, false)) == 8);

  // duplicates collapse
  auto groups2 = dedupe_points({rec1, rec1});
  REQUIRE(groups2.size() == 1);
  CHECK(groups2[0].records.size() == 1);
}

TEST_CASE("dedupe keeps genuinely different extensions apart") {
  auto z8 = NumberField::preset("Qzeta8");
  // K(sqrt(t - t^3)) vs K(sqrt(-3)): the fourth-root-of-2 and zeta3 fields
  auto eA = std::get<ExtPtr>(
      RelQuadExt::make_sqrt(z8, el(z8, {0, 1, 0, -1})));
  auto eB = std::get<ExtPtr>(RelQuadExt::make_sqrt(z8, el(z8, {-3})));
  auto recA = make_record(z8, eA,
                          {el(z8, {}), el(z8, {1}), el(z8, {0, 1}), el(z8, {})},
                          PointSource::kStepII, "A");
  CHECK(!embed_extension(*eA, eB));
  CHECK(!embed_extension(*eB, eA));
  (void)recA;
}

TEST_CASE("s0 over Q is the classical orbit with the least representative") {
  auto q = NumberField::preset("Q");
  Gamma2Report rep = compute_gamma2(q);
  REQUIRE(rep.s0.size() == 1);
  const auto& r = rep.s0[0];
  REQUIRE(r.ext);
  CHECK(r.ext->lin_coeff() == el(q, {1}));
  CHECK(r.ext->const_coeff() == el(q, {2}));
  // least serialized member of the 8-orbit of (omega, omega-bar)
  auto orbit = assemble_orbit(r.ext, r.coords);
  for (const auto& p : orbit) CHECK(!(p < r.coords));
  CHECK(r.primitive);
  CHECK(!r.trivial);
  CHECK(r.degree_over_q == 2);
}

TEST_CASE("identify_L walks the preset lattice") {
  std::vector<Rational> z16(9, Rational(0));
  z16[0] = Rational(1);
  z16[8] = Rational(1);
  CHECK(identify_l(NumberField::create(RatPoly(z16))) == "Qzeta8");
  CHECK(identify_l(NumberField::create(RatPoly{-1, -3, 0, 1})) == "Q");
  CHECK(identify_l(NumberField::create(RatPoly{-33, 0, 1})) == "Q");
  CHECK(identify_l(NumberField::preset("Qalpha")) == "Qalpha");
}

TEST_CASE("bielliptic verification on emitted points") {
  auto q = NumberField::preset("Q");
  Gamma2Report rep = compute_gamma2(q);
  for (const auto& rec : rep.s0) CHECK(verify_bielliptic(rec));

  // trivial point with x != 0: (1, 0) maps to s = 2, u = 4
  auto triv = make_record(q, nullptr,
                          {el(q, {1}), el(q, {0}), el(q, {0}), el(q, {0})},
                          PointSource::kStepIFromE1, "trivial");
  CHECK(verify_bielliptic(triv));

  auto at_zero = make_record(q, nullptr,
                             {el(q, {0}), el(q, {0}), el(q, {1}), el(q, {0})},
                             PointSource::kStepIFromE1, "x=0");
  CHECK_THROWS_AS(verify_bielliptic(at_zero), DivisionByZero);
}

TEST_CASE("counts for the two smallest presets") {
  CHECK(compute_gamma2(NumberField::preset("Q")).gamma2_count == 16);
  CHECK(compute_gamma2(NumberField::preset("Qi")).gamma2_count == 44);
}

TEST_CASE("reports serialize deterministically") {
  auto q = NumberField::preset("Q");
  Gamma2Report a = compute_gamma2(q);
  Gamma2Report b = compute_gamma2(q);
  CHECK(report_to_json(a).dump() == report_to_json(b).dump());
  CHECK(report_to_text(a) == report_to_text(b));

  // field spec round trip
  auto j = field_to_json(*q);
  auto back = field_from_json(j);
  CHECK(back->minpoly() == q->minpoly());
}
