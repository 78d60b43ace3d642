#include "qp/fppoly.hpp"

#include <algorithm>

#include "qp/errors.hpp"

namespace qp {

uint64_t FpCtx::pow(uint64_t a, uint64_t e) const {
  uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

uint64_t FpCtx::inv(uint64_t a) const {
  a %= p;
  if (a == 0) throw DivisionByZero("inverse of zero mod p");
  return pow(a, p - 2);
}

int fp_deg(const FpPoly& f) {
  return static_cast<int>(f.size()) - 1;
}

void fp_trim(FpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

FpPoly fp_add(const FpCtx& c, FpPoly a, const FpPoly& b) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] = c.add(a[i], b[i]);
  fp_trim(a);
  return a;
}

FpPoly fp_sub(const FpCtx& c, FpPoly a, const FpPoly& b) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] = c.sub(a[i], b[i]);
  fp_trim(a);
  return a;
}

FpPoly fp_mul(const FpCtx& c, const FpPoly& a, const FpPoly& b) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + static_cast<__uint128_t>(a[i]) * b[j]) % c.p;
  }
  fp_trim(r);
  return r;
}

FpPoly fp_scale(const FpCtx& c, FpPoly a, uint64_t s) {
  for (auto& v : a) v = c.mul(v, s);
  fp_trim(a);
  return a;
}

std::pair<FpPoly, FpPoly> fp_divrem(const FpCtx& c, FpPoly num, const FpPoly& den) {
  if (den.empty()) throw DivisionByZero("FpPoly division by zero");
  if (fp_deg(num) < fp_deg(den)) return {{}, std::move(num)};
  const uint64_t lead_inv = c.inv(den.back());
  const int dq = fp_deg(num) - fp_deg(den);
  FpPoly quot(static_cast<size_t>(dq) + 1, 0);
  for (int k = dq; k >= 0; --k) {
    uint64_t q = c.mul(num[static_cast<size_t>(k + fp_deg(den))], lead_inv);
    quot[static_cast<size_t>(k)] = q;
    if (q == 0) continue;
    for (size_t i = 0; i < den.size(); ++i)
      num[static_cast<size_t>(k) + i] = c.sub(num[static_cast<size_t>(k) + i], c.mul(q, den[i]));
  }
  fp_trim(num);
  return {std::move(quot), std::move(num)};
}

FpPoly fp_mod(const FpCtx& c, FpPoly num, const FpPoly& den) {
  return fp_divrem(c, std::move(num), den).second;
}

FpPoly fp_monic(const FpCtx& c, FpPoly a) {
  if (a.empty()) return a;
  return fp_scale(c, std::move(a), c.inv(a.back()));
}

FpPoly fp_gcd(const FpCtx& c, FpPoly a, FpPoly b) {
  while (!b.empty()) {
    FpPoly r = fp_mod(c, std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  return fp_monic(c, std::move(a));
}

FpPoly fp_derivative(const FpCtx& c, const FpPoly& a) {
  if (a.size() <= 1) return {};
  FpPoly d(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) d[i - 1] = c.mul(a[i], i % c.p);
  fp_trim(d);
  return d;
}

FpPoly fp_powmod(const FpCtx& c, FpPoly base, const Int& e, const FpPoly& m) {
  FpPoly r{1};
  base = fp_mod(c, std::move(base), m);
  const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (sgn(e) == 0) return r;
  for (size_t i = bits; i-- > 0;) {
    r = fp_mod(c, fp_mul(c, r, r), m);
    if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(i)))
      r = fp_mod(c, fp_mul(c, r, base), m);
  }
  return r;
}

uint64_t fp_reduce_rational(const Rational& r, uint64_t p) {
  FpCtx c{p};
  Int num_mod = r.num() % Int(static_cast<unsigned long>(p));
  Int den_mod = r.den() % Int(static_cast<unsigned long>(p));
  uint64_t n = mpz_get_ui(Int(num_mod < 0 ? num_mod + Int(static_cast<unsigned long>(p)) : num_mod).get_mpz_t());
  uint64_t d = mpz_get_ui(den_mod.get_mpz_t());
  if (d == 0) throw BadPrime("p divides a denominator");
  return c.mul(n % p, c.inv(d));
}

FpPoly fp_reduce(const RatPoly& f, uint64_t p) {
  FpPoly out(f.coeffs().size());
  for (size_t i = 0; i < f.coeffs().size(); ++i)
    out[i] = fp_reduce_rational(f.coeffs()[i], p);
  fp_trim(out);
  return out;
}

namespace {

// Fixed-seed deterministic generator driving Cantor-Zassenhaus splits.
struct SplitMix {
  uint64_t s;
  uint64_t next() {
    s += 0x9e3779b97f4a7c15ULL;
    uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

FpPoly random_poly(const FpCtx& c, SplitMix& rng, int deg) {
  FpPoly r(static_cast<size_t>(deg) + 1);
  for (auto& v : r) v = rng.next() % c.p;
  fp_trim(r);
  return r;
}

// Equal-degree splitting of a monic squarefree product of degree-d factors.
void equal_degree_split(const FpCtx& c, const FpPoly& f, int d, SplitMix& rng,
                        std::vector<FpPoly>& out) {
  if (fp_deg(f) == d) {
    out.push_back(fp_monic(c, f));
    return;
  }
  // gcd(r^((p^d-1)/2) - 1, f) splits f with probability ~1/2 per trial.
  Int e = 1;
  for (int i = 0; i < d; ++i) e *= Int(static_cast<unsigned long>(c.p));
  e = (e - 1) / 2;
  for (int tries = 0; tries < 256; ++tries) {
    FpPoly r = random_poly(c, rng, fp_deg(f) - 1);
    if (fp_deg(r) < 1) continue;
    FpPoly h = fp_powmod(c, r, e, f);
    if (h.empty()) continue;
    h[0] = c.sub(h[0], 1);
    fp_trim(h);
    FpPoly g = fp_gcd(c, h, f);
    if (fp_deg(g) > 0 && fp_deg(g) < fp_deg(f)) {
      equal_degree_split(c, g, d, rng, out);
      equal_degree_split(c, fp_divrem(c, f, g).first, d, rng, out);
      return;
    }
  }
  throw Error("equal-degree splitting failed to converge");
}

}  // namespace

std::vector<FpPoly> fp_factor_squarefree(const FpCtx& c, const FpPoly& f_in) {
  FpPoly f = fp_monic(c, f_in);
  std::vector<FpPoly> out;
  SplitMix rng{0x5eed0f64u};

  // Distinct-degree: strip gcd(f, x^(p^d) - x) for d = 1, 2, ...
  FpPoly x{0, 1};
  FpPoly h = x;  // x^(p^d) mod f, updated in place
  for (int d = 1; fp_deg(f) >= 2 * d; ++d) {
    h = fp_powmod(c, h, Int(static_cast<unsigned long>(c.p)), f);
    FpPoly diff = fp_sub(c, h, x);
    FpPoly g = fp_gcd(c, diff, f);
    if (fp_deg(g) > 0) {
      equal_degree_split(c, g, d, rng, out);
      f = fp_divrem(c, f, g).first;
      h = fp_mod(c, h, f);
    }
  }
  if (fp_deg(f) > 0) out.push_back(fp_monic(c, f));
  return out;
}

std::vector<std::pair<FpPoly, int>> split_minpoly_mod_p(const RatPoly& minpoly,
                                                        uint64_t p) {
  if (p < 3 || p % 2 == 0) throw BadPrime("p must be an odd prime");
  FpPoly f = fp_reduce(minpoly, p);
  if (fp_deg(f) != minpoly.degree())
    throw BadPrime("leading coefficient vanishes mod p");
  FpCtx c{p};
  FpPoly g = fp_gcd(c, f, fp_derivative(c, f));
  if (fp_deg(g) != 0) throw BadPrime("reduction not squarefree");
  std::vector<std::pair<FpPoly, int>> out;
  for (auto& fac : fp_factor_squarefree(c, f)) out.emplace_back(std::move(fac), 1);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace qp
