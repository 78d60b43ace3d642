#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qp/curve_count.hpp"
#include "qp/fppoly.hpp"
#include "qp/residue_field.hpp"

using namespace qp;

namespace {

std::mt19937_64 rng(0x853c49e6u);

// Brute-force curve count: iterate all (x, y) pairs. The independent oracle
// for the fast path.
uint64_t naive_count(long a, const ResidueField& rf) {
  const uint64_t q = rf.q_small();
  ResidueField::Elem ae = a >= 0 ? rf.from_fp(static_cast<uint64_t>(a))
                                 : rf.neg(rf.from_fp(static_cast<uint64_t>(-a)));
  uint64_t count = 1;
  for (uint64_t xi = 0; xi < q; ++xi) {
    auto x = rf.from_index(xi);
    auto rhs = rf.add(rf.mul(rf.mul(x, x), x), rf.mul(ae, x));
    for (uint64_t yi = 0; yi < q; ++yi) {
      auto y = rf.from_index(yi);
      if (rf.mul(y, y) == rhs) ++count;
    }
  }
  return count;
}

}  // namespace

TEST_CASE("t^4 + 1 splits into two quadratics mod 3") {
  RatPoly f{1, 0, 0, 0, 1};
  auto factors = split_minpoly_mod_p(f, 3);
  REQUIRE(factors.size() == 2);
  FpCtx c{3};
  FpPoly prod{1};
  for (auto& [g, mult] : factors) {
    CHECK(mult == 1);
    CHECK(fp_deg(g) == 2);
    prod = fp_mul(c, prod, g);
  }
  CHECK(prod == fp_reduce(f, 3));
}

TEST_CASE("t^2 + 1 mod 5 and mod 3") {
  auto f5 = split_minpoly_mod_p(RatPoly{1, 0, 1}, 5);
  REQUIRE(f5.size() == 2);  // (t+2)(t+3)
  CHECK(fp_deg(f5[0].first) == 1);
  CHECK(fp_deg(f5[1].first) == 1);
  FpCtx c{5};
  CHECK(fp_mul(c, f5[0].first, f5[1].first) == FpPoly{1, 0, 1});

  auto f3 = split_minpoly_mod_p(RatPoly{1, 0, 1}, 3);
  REQUIRE(f3.size() == 1);  // irreducible: -1 is not a square mod 3
  CHECK(fp_deg(f3[0].first) == 2);

  CHECK_THROWS_AS(split_minpoly_mod_p(RatPoly{1, 0, 1}, 2), BadPrime);
  // p dividing a denominator
  CHECK_THROWS_AS(split_minpoly_mod_p(RatPoly{Rational(1, 3), Rational(0), Rational(1)}, 3),
                  BadPrime);
  // non-squarefree reduction: t^2 - 3 mod 3 = t^2
  CHECK_THROWS_AS(split_minpoly_mod_p(RatPoly{-3, 0, 1}, 3), BadPrime);
}

TEST_CASE("factor and re-multiply on random squarefree reductions") {
  std::uniform_int_distribution<int> deg(1, 6), coeff(-10, 10);
  std::vector<uint64_t> primes{3, 5, 7, 11, 13};
  int tested = 0;
  for (int trial = 0; trial < 80 && tested < 40; ++trial) {
    const int n = deg(rng);
    std::vector<Rational> c(static_cast<size_t>(n) + 1);
    for (int i = 0; i < n; ++i) c[static_cast<size_t>(i)] = Rational(coeff(rng));
    c[static_cast<size_t>(n)] = Rational(1);
    RatPoly f(std::move(c));
    uint64_t p = primes[trial % primes.size()];
    std::vector<std::pair<FpPoly, int>> factors;
    try {
      factors = split_minpoly_mod_p(f, p);
    } catch (const BadPrime&) {
      continue;
    }
    ++tested;
    FpCtx ctx{p};
    FpPoly prod{1};
    for (auto& [g, mult] : factors) prod = fp_mul(ctx, prod, g);
    CHECK(prod == fp_reduce(f, p));
  }
  CHECK(tested >= 30);
}

TEST_CASE("Euler criterion in F_5 and F_9") {
  ResidueField f5(5, FpPoly{0, 1});
  CHECK(!f5.is_square(f5.from_fp(2)));  // 2^2 = 4 = -1 mod 5
  CHECK(f5.is_square(f5.from_fp(4)));
  CHECK_THROWS_AS(f5.is_square(f5.zero()), ZeroInput);

  // F_9 = F_3[u]/(u^2+1): u^4 = 1, so u^((9-1)/2) = 1 and u is a square
  ResidueField f9(3, FpPoly{1, 0, 1});
  ResidueField::Elem u = f9.from_poly(FpPoly{0, 1});
  CHECK(f9.is_square(u));
}

TEST_CASE("squares of random residues pass the Euler criterion") {
  ResidueField f49(7, FpPoly{1, 0, 1});  // u^2 = -1 is irreducible mod 7
  std::uniform_int_distribution<uint64_t> pick(0, 48);
  for (int i = 0; i < 200; ++i) {
    auto x = f49.from_index(pick(rng));
    if (f49.is_zero(x)) continue;
    CHECK(f49.is_square(f49.mul(x, x)));
  }
}

TEST_CASE("residue inverses") {
  ResidueField f25(5, FpPoly{2, 0, 1});  // u^2 = -2
  for (uint64_t i = 1; i < 25; ++i) {
    auto x = f25.from_index(i);
    if (f25.is_zero(x)) continue;
    CHECK(f25.mul(x, f25.inv(x)) == f25.one());
  }
}

TEST_CASE("curve counts over F_5 against the enumeration oracle") {
  ResidueField f5(5, FpPoly{0, 1});
  CHECK(ec_count_points(4, f5) == 8);
  CHECK(ec_count_points(-4, f5) == 4);
  CHECK(naive_count(4, f5) == 8);
  CHECK(naive_count(-4, f5) == 4);
}

TEST_CASE("curve counts match the oracle for several residue fields") {
  std::vector<std::pair<uint64_t, FpPoly>> fields = {
      {13, FpPoly{0, 1}}, {17, FpPoly{0, 1}}, {3, FpPoly{1, 0, 1}},
      {7, FpPoly{1, 0, 1}}, {5, FpPoly{2, 0, 1}}};
  for (auto& [p, g] : fields) {
    ResidueField rf(p, g);
    for (long a : {4L, -4L}) {
      uint64_t fast = ec_count_points(a, rf);
      CHECK(fast == naive_count(a, rf));
      // Hasse window
      const double q = static_cast<double>(rf.q_small());
      CHECK(std::abs(q + 1.0 - static_cast<double>(fast)) <= 2.0 * std::sqrt(q) + 1e-9);
    }
  }
}

TEST_CASE("root counting over F_q") {
  ResidueField f9(3, FpPoly{1, 0, 1});
  // x^2 + 1 has the two roots ±u in F_9
  ResidueField::Poly f{f9.one(), f9.zero(), f9.one()};
  CHECK(f9.count_roots(f) == 2);
  // x^2 - u: u is a square in F_9, two roots
  ResidueField::Poly g{f9.neg(f9.from_poly(FpPoly{0, 1})), f9.zero(), f9.one()};
  CHECK(f9.count_roots(g) == 2);

  ResidueField f5(5, FpPoly{0, 1});
  // x^2 + 2: x^2 = 3 mod 5 has no solution (squares are 1, 4)
  ResidueField::Poly h{f5.from_fp(2), f5.zero(), f5.one()};
  CHECK(f5.count_roots(h) == 0);
  // x^2 - 4 has two
  ResidueField::Poly k{f5.from_fp(1), f5.zero(), f5.one()};  // x^2 + 1 = x^2 - 4
  CHECK(f5.count_roots(k) == 2);
}
