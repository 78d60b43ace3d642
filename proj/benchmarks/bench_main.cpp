#include <benchmark/benchmark.h>

#include "qp/gamma2.hpp"
#include "qp/nf_roots.hpp"
#include "qp/nf_square.hpp"
#include "qp/polyroots.hpp"
#include "qp/torsion.hpp"

using namespace qp;

namespace {

RatPoly zeta8_poly() {
  return RatPoly{1, 0, 0, 0, 1};
}

NfPoly halving_quartic(const FieldPtr& k) {
  // the quartic solved when halving (0,0) on y^2 = x^3 + 4x
  std::vector<FieldElement> c(5, FieldElement::zero(k));
  c[0] = FieldElement::from_rational(k, Rational(16));
  c[2] = FieldElement::from_rational(k, Rational(-8));
  c[4] = FieldElement::one(k);
  return NfPoly(k, std::move(c));
}

void BM_ComplexRootsDeg8(benchmark::State& state) {
  RatPoly f{-3, 1, 0, -4, 0, 2, 0, 0, 1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(complex_roots(f, state.range(0)));
  }
}
BENCHMARK(BM_ComplexRootsDeg8)->Arg(256)->Arg(512)->Arg(1024);

void BM_RootsInFieldQuartic(benchmark::State& state) {
  auto k = NumberField::preset("Qzeta8");
  NfPoly q = halving_quartic(k);
  for (auto _ : state) {
    benchmark::DoNotOptimize(roots_in_field(q));
  }
}
BENCHMARK(BM_RootsInFieldQuartic);

void BM_IsSquare(benchmark::State& state) {
  auto k = NumberField::preset("Qzeta8");
  FieldElement two = FieldElement::from_rational(k, Rational(2));
  FieldElement three = FieldElement::from_rational(k, Rational(3));
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_square(two));   // square
    benchmark::DoNotOptimize(is_square(three)); // certified non-square
  }
}
BENCHMARK(BM_IsSquare);

void BM_TorsionZeta8(benchmark::State& state) {
  auto k = NumberField::preset("Qzeta8");
  CurveSpec e1 = curve_e1(k);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ec_torsion(e1));
  }
}
BENCHMARK(BM_TorsionZeta8);

void BM_FullCensus(benchmark::State& state) {
  const char* labels[] = {"Q", "Qi", "Qsqrt2", "Qalpha", "Qzeta8"};
  auto k = NumberField::preset(labels[state.range(0)]);
  for (auto _ : state) {
    benchmark::DoNotOptimize(compute_gamma2(k));
  }
}
BENCHMARK(BM_FullCensus)->DenseRange(0, 4);

void BM_EmbeddingBuild(benchmark::State& state) {
  RatPoly f = zeta8_poly();
  for (auto _ : state) {
    benchmark::DoNotOptimize(EmbeddingSet(f, 256));
  }
}
BENCHMARK(BM_EmbeddingBuild);

}  // namespace

BENCHMARK_MAIN();
