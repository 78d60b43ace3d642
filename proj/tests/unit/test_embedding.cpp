#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qp/embedding.hpp"
#include "qp/polyroots.hpp"
#include "qp/precision.hpp"

using namespace qp;

namespace {

std::mt19937_64 rng(0x2545f491u);

bool close(const BigFloat& a, double b, long prec) {
  // references are doubles, so compare at a bit under their 53-bit accuracy
  return (a - BigFloat::from_double(b, prec)).abs() < BigFloat::pow2(-45, prec);
}

BigFloat residual_at(const RatPoly& f, const BigComplex& z, long prec) {
  BigComplex acc(prec);
  for (int i = f.degree(); i >= 0; --i)
    acc = acc * z + BigComplex::from(f[static_cast<size_t>(i)], prec);
  return acc.abs();
}

}  // namespace

TEST_CASE("mixed precision rounds to the smaller operand") {
  BigFloat a = BigFloat::from(Rational(1, 3), 256);
  BigFloat b = BigFloat::from(Rational(1, 7), 128);
  CHECK((a + b).prec() == 128);
  CHECK((a * b).prec() == 128);
}

TEST_CASE("roots of x^2 + 1") {
  auto roots = complex_roots(RatPoly{1, 0, 1}, 256);
  REQUIRE(roots.size() == 2);
  // sorted by (Re, Im): -i before +i
  CHECK(close(roots[0].re, 0.0, 256));
  CHECK(close(roots[0].im, -1.0, 256));
  CHECK(close(roots[1].im, 1.0, 256));
}

TEST_CASE("roots of the biquadratic x^4 - 2x^2 - 1") {
  // x^2 = 1 ± sqrt2: two real roots ±sqrt(1+sqrt2), two imaginary
  // ±i sqrt(sqrt2-1)
  auto roots = complex_roots(RatPoly{-1, 0, -2, 0, 1}, 256);
  REQUIRE(roots.size() == 4);
  const double r = std::sqrt(1.0 + std::sqrt(2.0));
  const double s = std::sqrt(std::sqrt(2.0) - 1.0);
  int real_hits = 0, imag_hits = 0;
  for (const auto& z : roots) {
    if (z.im.abs() < BigFloat::pow2(-100, 256)) {
      CHECK((close(z.re, r, 256) || close(z.re, -r, 256)));
      ++real_hits;
    } else {
      CHECK(close(z.re, 0.0, 256));
      CHECK((close(z.im, s, 256) || close(z.im, -s, 256)));
      ++imag_hits;
    }
  }
  CHECK(real_hits == 2);
  CHECK(imag_hits == 2);
}

TEST_CASE("roots of x^2 + x + 2 are (-1 ± sqrt(-7))/2") {
  auto roots = complex_roots(RatPoly{2, 1, 1}, 256);
  REQUIRE(roots.size() == 2);
  const double im = std::sqrt(7.0) / 2.0;
  for (const auto& z : roots) CHECK(close(z.re, -0.5, 256));
  CHECK(close(roots[0].im, -im, 256));
  CHECK(close(roots[1].im, im, 256));
}

TEST_CASE("product of reconstructed roots re-expands to the input") {
  std::uniform_int_distribution<int> deg(2, 8), coeff(-8, 8);
  const long prec = 256;
  int tested = 0;
  for (int trial = 0; trial < 40 && tested < 25; ++trial) {
    const int n = deg(rng);
    std::vector<Rational> c(static_cast<size_t>(n) + 1);
    for (int i = 0; i < n; ++i) c[static_cast<size_t>(i)] = Rational(coeff(rng));
    c[static_cast<size_t>(n)] = Rational(1);
    RatPoly f(std::move(c));
    if (squarefree_part(f).degree() != f.degree()) continue;  // want simple roots
    ++tested;
    auto roots = complex_roots(f, prec);
    // expand prod (x - z_k)
    std::vector<BigComplex> poly{BigComplex::from(Rational(1), prec)};
    for (const auto& z : roots) {
      std::vector<BigComplex> next(poly.size() + 1, BigComplex(prec));
      for (size_t i = 0; i < poly.size(); ++i) {
        next[i + 1] += poly[i];
        next[i] -= poly[i] * z;
      }
      poly = std::move(next);
    }
    const BigFloat tol = BigFloat::pow2(-prec / 2, prec);
    for (int i = 0; i <= n; ++i) {
      BigComplex diff = poly[static_cast<size_t>(i)] -
                        BigComplex::from(f[static_cast<size_t>(i)], prec);
      CHECK(diff.abs() < tol);
    }
  }
  CHECK(tested >= 20);
}

TEST_CASE("doubling the precision shrinks residuals quadratically") {
  RatPoly f{-3, 1, -4, 0, 1};
  for (long prec : {256L, 512L}) {
    auto roots = complex_roots(f, prec);
    const BigFloat cert = BigFloat::pow2(-prec + 4 * 8, prec);
    for (const auto& z : roots) CHECK(residual_at(f, z, prec) < cert);
  }
}

TEST_CASE("root order is deterministic at fixed precision") {
  RatPoly f{1, 0, 0, 0, 1};  // t^4 + 1
  auto a = complex_roots(f, 256);
  auto b = complex_roots(f, 256);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].re == b[i].re);
    CHECK(a[i].im == b[i].im);
  }
}

TEST_CASE("Vandermonde rows for the small fields") {
  EmbeddingSet q(RatPoly{0, 1}, 256);  // Q: root 0
  auto v = q.vandermonde();
  REQUIRE(v.size() == 1);
  CHECK(close(v[0][0].re, 1.0, 256));

  EmbeddingSet qi(RatPoly{1, 0, 1}, 256);  // rows (1, ±i)
  auto vi = qi.vandermonde();
  REQUIRE(vi.size() == 2);
  CHECK(close(vi[0][0].re, 1.0, 256));
  CHECK(close(vi[0][1].im, -1.0, 256));
  CHECK(close(vi[1][1].im, 1.0, 256));

  EmbeddingSet q2(RatPoly{-2, 0, 1}, 256);  // rows (1, ±sqrt2)
  auto v2 = q2.vandermonde();
  CHECK(close(v2[0][1].re, -std::sqrt(2.0), 256));
  CHECK(close(v2[1][1].re, std::sqrt(2.0), 256));
}

TEST_CASE("conjugate pairing is certified for the preset fields") {
  for (auto poly : {RatPoly{1, 0, 1}, RatPoly{1, 0, 0, 0, 1}, RatPoly{-1, 0, -2, 0, 1}}) {
    EmbeddingSet emb(poly, 256);
    REQUIRE(emb.conj_pairing_ok());
    for (int i = 0; i < emb.degree(); ++i) {
      int j = emb.conj_partner(i);
      CHECK(emb.conj_partner(j) == i);
    }
  }
}

TEST_CASE("embedding solve inverts the Vandermonde") {
  EmbeddingSet emb(RatPoly{1, 0, 0, 0, 1}, 256);
  // rhs = images of the coefficient vector (1, 2, 0, -1/2)
  std::vector<Rational> c{Rational(1), Rational(2), Rational(0), Rational(-1, 2)};
  std::vector<BigComplex> rhs;
  for (const auto& root : emb.roots()) {
    BigComplex acc(256);
    for (size_t k = c.size(); k-- > 0;) acc = acc * root + BigComplex::from(c[k], 256);
    rhs.push_back(acc);
  }
  auto back = emb.solve(rhs);
  const BigFloat tol = BigFloat::pow2(-200, 256);
  for (size_t i = 0; i < c.size(); ++i) {
    CHECK((back[i].re - BigFloat::from(c[i], 256)).abs() < tol);
    CHECK(back[i].im.abs() < tol);
  }
}

TEST_CASE("precision ladder climbs from the default to the cap") {
  auto ladder = precision_ladder();
  REQUIRE(!ladder.empty());
  CHECK(ladder.front() == default_precision());
  CHECK(ladder.back() == max_precision());
  for (size_t i = 1; i < ladder.size(); ++i) CHECK(ladder[i] > ladder[i - 1]);
}
