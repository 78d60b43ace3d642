#include "qp/torsion.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "qp/curve_count.hpp"
#include "qp/division_poly.hpp"
#include "qp/errors.hpp"
#include "qp/nf_roots.hpp"
#include "qp/nf_square.hpp"

namespace qp {

namespace {

constexpr int kGoodPrimes = 6;
constexpr long kInflation = 32;  // covers any torsion order below 2^32

bool is_small_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

bool TorsionTable::contains(const CurvePoint& p) const {
  return std::binary_search(points.begin(), points.end(), p);
}

Int torsion_bound(const CurveSpec& curve, std::vector<ReductionCertificate>* cert_out) {
  // disc(y^2 = x^3 + ax) = -64 a^3 = -+2^12, so every odd prime of good
  // field reduction is a good curve prime.
  int used = 0;
  Int bound = 0;
  std::vector<ReductionCertificate> certs;
  for (uint64_t p = 3; p < 60 && used < kGoodPrimes; p += 2) {
    if (!is_small_prime(p)) continue;
    std::vector<ResidueField> rfs;
    try {
      rfs = residue_fields(*curve.field, p);
    } catch (const BadPrime&) {
      continue;
    }
    ReductionCertificate cert;
    cert.p = p;
    Int per_prime = 0;
    for (const auto& rf : rfs) {
      if (!rf.q_fits_enumeration()) continue;
      uint64_t count = ec_count_points(curve.a, rf);
      // Hasse window sanity: |q + 1 - count| <= 2 sqrt(q)
      const uint64_t q = rf.q_small();
      const long double diff = static_cast<long double>(q) + 1.0L -
                               static_cast<long double>(count);
      if (diff * diff > 4.0L * static_cast<long double>(q))
        throw Error("point count outside the Hasse window");
      cert.counts.push_back(count);
      Int c(static_cast<unsigned long>(count));
      per_prime = per_prime == 0 ? c : gcd(per_prime, c);
    }
    if (cert.counts.empty()) continue;
    // close the p-primary gap before combining across primes
    Int inflated = per_prime;
    for (long i = 0; i < kInflation; ++i) inflated *= Int(static_cast<unsigned long>(p));
    bound = bound == 0 ? inflated : gcd(bound, inflated);
    certs.push_back(std::move(cert));
    ++used;
  }
  if (used < 2) throw NoGoodPrimes("fewer than two usable reduction primes");
  if (cert_out) *cert_out = std::move(certs);
  return bound;
}

std::vector<CurvePoint> ec_halve(const CurveSpec& curve, const CurvePoint& p) {
  const FieldPtr& field = curve.field;
  std::vector<CurvePoint> out;

  if (p.is_infinity()) {
    // 2-torsion: y = 0 on x^3 + a x, plus infinity itself.
    out.push_back(CurvePoint::infinity());
    NfPoly cubic = NfPoly::from_ratpoly(
        field, RatPoly{Rational(0), Rational(curve.a), Rational(0), Rational(1)});
    for (const auto& x : roots_in_field(cubic))
      out.emplace_back(x, FieldElement::zero(field));
    std::sort(out.begin(), out.end());
    return out;
  }

  // x(2Q) = (x^2 - a)^2 / (4(x^3 + a x)) = x_P gives the halving quartic
  // (x^2 - a)^2 - 4 x_P (x^3 + a x) = 0.
  const Rational a(curve.a);
  const FieldElement& xp = p.x();
  std::vector<FieldElement> q(5, FieldElement::zero(field));
  q[0] = FieldElement::from_rational(field, a * a);
  q[1] = xp.scaled(a * Rational(-4));
  q[2] = FieldElement::from_rational(field, a * Rational(-2));
  q[3] = xp.scaled(Rational(-4));
  q[4] = FieldElement::one(field);
  NfPoly quartic(field, std::move(q));

  for (const auto& x : roots_in_field(quartic)) {
    FieldElement rhs = x * x * x + x.scaled(a);
    if (rhs.is_zero()) {
      CurvePoint cand(x, FieldElement::zero(field));
      if (ec_add(curve, cand, cand) == p) out.push_back(std::move(cand));
      continue;
    }
    SquareResult sq = is_square(rhs);
    if (sq.kind == SquareResult::Kind::kInconclusive)
      throw Inconclusive("square test inconclusive during halving");
    if (!sq.is_square()) continue;
    for (const FieldElement& y : {*sq.root, -*sq.root}) {
      CurvePoint cand(x, y);
      if (ec_add(curve, cand, cand) == p) out.push_back(cand);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

TorsionTable ec_torsion(const CurveSpec& curve) {
  TorsionTable table;
  table.curve = curve;
  table.bound = torsion_bound(curve, &table.certificate);

  std::set<CurvePoint> pts;
  pts.insert(CurvePoint::infinity());

  // 2-power part: saturate halves layer by layer starting at the identity.
  std::vector<CurvePoint> frontier{CurvePoint::infinity()};
  while (!frontier.empty()) {
    std::vector<CurvePoint> next;
    for (const auto& p : frontier) {
      for (auto& h : ec_halve(curve, p)) {
        if (pts.insert(h).second) next.push_back(std::move(h));
      }
    }
    frontier = std::move(next);
  }

  // Odd part: division polynomials for the odd primes dividing the bound.
  for (long ell : {3L, 5L, 7L}) {
    if (table.bound % Int(static_cast<unsigned long>(ell)) != 0) continue;
    NfPoly psi = NfPoly::from_ratpoly(curve.field, division_poly(curve.a, ell));
    // psi_5 and psi_7 exceed the degree cap of the root finder; factor the
    // search through x-coordinates of psi_3 first when possible. Degrees 12
    // and 24 only arise when the reduction bound has 5- or 7-part, which
    // does not happen for these CM curves over the fields at hand; guard
    // anyway.
    if (psi.degree() > 6)
      throw DegreeTooLarge("odd torsion beyond ell = 3 not reachable here");
    for (const auto& x : roots_in_field(psi)) {
      FieldElement rhs = x * x * x + x.scaled(Rational(curve.a));
      if (rhs.is_zero()) continue;
      SquareResult sq = is_square(rhs);
      if (sq.kind == SquareResult::Kind::kInconclusive)
        throw Inconclusive("square test inconclusive during odd torsion scan");
      if (!sq.is_square()) continue;
      pts.insert(CurvePoint(x, *sq.root));
      pts.insert(CurvePoint(x, -*sq.root));
    }
  }

  // Closure under addition (tables are tiny; fixpoint in one or two passes).
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<CurvePoint> snapshot(pts.begin(), pts.end());
    for (size_t i = 0; i < snapshot.size() && !grew; ++i) {
      for (size_t j = i; j < snapshot.size(); ++j) {
        CurvePoint s = ec_add(curve, snapshot[i], snapshot[j]);
        if (pts.insert(std::move(s)).second) {
          grew = true;
          break;
        }
      }
    }
  }

  table.points.assign(pts.begin(), pts.end());

  const long order = static_cast<long>(table.points.size());
  if (table.bound % Int(order) != 0)
    throw TorsionBoundMismatch("torsion order does not divide the reduction bound");

  // Invariant factors: d2 = exponent, d1 = order / d2.
  long exponent = 1;
  for (const auto& p : table.points)
    exponent = std::lcm(exponent, ec_order(curve, p));
  const long d2 = exponent;
  const long d1 = order / d2;
  if (d1 * d2 != order || (d1 != 0 && d2 % d1 != 0))
    throw TorsionBoundMismatch("torsion group is not of rank <= 2 shape");
  table.structure = {d1, d2};
  return table;
}

}  // namespace qp
