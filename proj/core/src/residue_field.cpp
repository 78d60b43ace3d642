#include "qp/residue_field.hpp"

#include "qp/errors.hpp"

namespace qp {

namespace {
constexpr uint64_t kEnumerationCap = 10'000'000;
}

ResidueField::ResidueField(uint64_t p, FpPoly g)
    : p_(p), g_(std::move(g)), c_{p} {
  if (p_ < 3 || p_ % 2 == 0) throw BadPrime("residue characteristic must be an odd prime");
  fp_trim(g_);
  k_ = fp_deg(g_);
  if (k_ < 1) throw InputError("residue modulus must be nonconstant");
  g_ = fp_monic(c_, std::move(g_));
  q_ = 1;
  for (int i = 0; i < k_; ++i) q_ *= Int(static_cast<unsigned long>(p_));
  q_small_ = (q_ <= Int(static_cast<unsigned long>(kEnumerationCap)))
                 ? mpz_get_ui(q_.get_mpz_t())
                 : 0;
}

ResidueField::Elem ResidueField::one() const {
  Elem e = zero();
  e[0] = 1 % p_;
  return e;
}

ResidueField::Elem ResidueField::from_fp(uint64_t a) const {
  Elem e = zero();
  e[0] = a % p_;
  return e;
}

ResidueField::Elem ResidueField::from_poly(FpPoly f) const {
  f = fp_mod(c_, std::move(f), g_);
  f.resize(static_cast<size_t>(k_), 0);
  return f;
}

bool ResidueField::is_zero(const Elem& a) const {
  for (uint64_t v : a)
    if (v != 0) return false;
  return true;
}

ResidueField::Elem ResidueField::add(const Elem& a, const Elem& b) const {
  Elem r(a);
  for (int i = 0; i < k_; ++i) r[static_cast<size_t>(i)] = c_.add(r[static_cast<size_t>(i)], b[static_cast<size_t>(i)]);
  return r;
}

ResidueField::Elem ResidueField::sub(const Elem& a, const Elem& b) const {
  Elem r(a);
  for (int i = 0; i < k_; ++i) r[static_cast<size_t>(i)] = c_.sub(r[static_cast<size_t>(i)], b[static_cast<size_t>(i)]);
  return r;
}

ResidueField::Elem ResidueField::neg(const Elem& a) const {
  Elem r(a);
  for (auto& v : r) v = c_.neg(v);
  return r;
}

ResidueField::Elem ResidueField::mul(const Elem& a, const Elem& b) const {
  FpPoly pa(a), pb(b);
  fp_trim(pa);
  fp_trim(pb);
  return from_poly(fp_mul(c_, pa, pb));
}

ResidueField::Elem ResidueField::inv(const Elem& a) const {
  if (is_zero(a)) throw DivisionByZero("inverse of zero residue");
  // Extended Euclid in F_p[u] against g.
  FpPoly r0 = g_, r1(a);
  fp_trim(r1);
  FpPoly s0{}, s1{1};
  while (!r1.empty()) {
    auto [q, r2] = fp_divrem(c_, r0, r1);
    FpPoly s2 = fp_sub(c_, s0, fp_mul(c_, q, s1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 = gcd is a nonzero constant since g is irreducible.
  uint64_t scale = c_.inv(r0[0]);
  return from_poly(fp_scale(c_, std::move(s0), scale));
}

ResidueField::Elem ResidueField::pow(Elem a, const Int& e) const {
  Elem r = one();
  if (sgn(e) == 0) return r;
  const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    r = mul(r, r);
    if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) r = mul(r, a);
  }
  return r;
}

bool ResidueField::is_square(const Elem& a) const {
  if (is_zero(a)) throw ZeroInput("quadratic character of zero");
  Elem t = pow(a, (q_ - 1) / 2);
  return t == one();
}

uint64_t ResidueField::index(const Elem& a) const {
  uint64_t idx = 0;
  for (int i = k_; i-- > 0;) idx = idx * p_ + a[static_cast<size_t>(i)];
  return idx;
}

ResidueField::Elem ResidueField::from_index(uint64_t idx) const {
  Elem e = zero();
  for (int i = 0; i < k_; ++i) {
    e[static_cast<size_t>(i)] = idx % p_;
    idx /= p_;
  }
  return e;
}

int ResidueField::pdeg(const Poly& f) const {
  for (size_t i = f.size(); i-- > 0;)
    if (!is_zero(f[i])) return static_cast<int>(i);
  return -1;
}

void ResidueField::ptrim(Poly& f) const {
  while (!f.empty() && is_zero(f.back())) f.pop_back();
}

ResidueField::Poly ResidueField::pmul(const Poly& a, const Poly& b) const {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, zero());
  for (size_t i = 0; i < a.size(); ++i) {
    if (is_zero(a[i])) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = add(r[i + j], mul(a[i], b[j]));
  }
  ptrim(r);
  return r;
}

ResidueField::Poly ResidueField::pmod(Poly num, const Poly& den) const {
  Poly d(den);
  ptrim(d);
  if (d.empty()) throw DivisionByZero("Fq polynomial division by zero");
  ptrim(num);
  const Elem lead_inv = inv(d.back());
  while (pdeg(num) >= pdeg(d)) {
    const int shift = pdeg(num) - pdeg(d);
    Elem f = mul(num.back(), lead_inv);
    for (size_t i = 0; i < d.size(); ++i)
      num[static_cast<size_t>(shift) + i] =
          sub(num[static_cast<size_t>(shift) + i], mul(f, d[i]));
    ptrim(num);
    if (num.empty()) break;
  }
  return num;
}

ResidueField::Poly ResidueField::pgcd(Poly a, Poly b) const {
  ptrim(a);
  ptrim(b);
  while (!b.empty()) {
    Poly r = pmod(std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  return pmonic(std::move(a));
}

ResidueField::Poly ResidueField::pmonic(Poly a) const {
  ptrim(a);
  if (a.empty()) return a;
  const Elem s = inv(a.back());
  for (auto& e : a) e = mul(e, s);
  return a;
}

ResidueField::Poly ResidueField::pderivative(const Poly& f) const {
  if (f.size() <= 1) return {};
  Poly d;
  d.reserve(f.size() - 1);
  for (size_t i = 1; i < f.size(); ++i) {
    Elem s = from_fp(static_cast<uint64_t>(i % p_));
    d.push_back(mul(f[i], s));
  }
  ptrim(d);
  return d;
}

ResidueField::Poly ResidueField::ppowmod(Poly base, const Int& e, const Poly& m) const {
  Poly r{one()};
  base = pmod(std::move(base), m);
  if (sgn(e) == 0) return r;
  const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    r = pmod(pmul(r, r), m);
    if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(i)))
      r = pmod(pmul(r, base), m);
  }
  return r;
}

bool ResidueField::psquarefree(const Poly& f) const {
  Poly g = pgcd(f, pderivative(f));
  return pdeg(g) == 0;
}

int ResidueField::count_roots(const Poly& f_in) const {
  Poly f = pmonic(f_in);
  if (f.empty()) throw InputError("count_roots of zero polynomial");
  if (pdeg(f) == 0) return 0;
  Poly x{zero(), one()};
  Poly xq = ppowmod(x, q_, f);
  // gcd(x^q - x, f)
  Poly diff = xq;
  if (diff.size() < 2) diff.resize(2, zero());
  diff[1] = sub(diff[1], one());
  ptrim(diff);
  Poly g = pgcd(std::move(diff), f);
  int d = pdeg(g);
  return d < 0 ? 0 : d;
}

}  // namespace qp
