#include "qp/nf_roots.hpp"

#include <algorithm>
#include <set>

#include "qp/cf_round.hpp"
#include "qp/errors.hpp"
#include "qp/polyroots.hpp"
#include "qp/precision.hpp"

namespace qp {

namespace {

const std::vector<uint64_t>& small_odd_primes() {
  static const std::vector<uint64_t> primes = [] {
    std::vector<uint64_t> v;
    for (uint64_t n = 3; v.size() < 128; n += 2) {
      bool is_prime = true;
      for (uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) {
          is_prime = false;
          break;
        }
      if (is_prime) v.push_back(n);
    }
    return v;
  }();
  return primes;
}

Int denominator_bound() {
  Int b = 1;
  mpz_mul_2exp(b.get_mpz_t(), b.get_mpz_t(), 64);
  return b;
}

// Upper bound on #roots in K from residue root counts. Any root of poly in K
// reduces to a root of the reduced polynomial in every residue ring of every
// good prime; when the reduced polynomial stays squarefree, distinct roots
// stay distinct, so each count is a true upper bound and we take the minimum.
std::optional<int> residue_root_bound(const NfPoly& poly, size_t prime_budget,
                                      size_t want_primes) {
  const NumberField& field = *poly.field();
  std::optional<int> bound;
  size_t used_primes = 0;
  for (uint64_t p : small_odd_primes()) {
    if (used_primes >= want_primes) break;
    if (prime_budget-- == 0) break;
    std::vector<ResidueField> rfs;
    try {
      rfs = residue_fields(field, p);
    } catch (const BadPrime&) {
      continue;
    }
    bool prime_used = false;
    try {
      for (const auto& rf : rfs) {
        ResidueField::Poly rp;
        rp.reserve(poly.coeffs().size());
        for (const auto& c : poly.coeffs()) rp.push_back(reduce_element(c, rf));
        rf.ptrim(rp);
        if (rf.pdeg(rp) != poly.degree()) continue;  // degree drop
        if (!rf.psquarefree(rp)) continue;
        int count = rf.count_roots(rp);
        if (!bound || count < *bound) bound = count;
        prime_used = true;
        if (*bound == 0) return bound;
      }
    } catch (const BadPrime&) {
      continue;
    }
    if (prime_used) ++used_primes;
  }
  if (used_primes < 2) return std::nullopt;
  return bound;
}

struct Slot {
  // A free choice in the assignment sweep: either a real embedding with its
  // admissible candidate indices, or a conjugate pair with matched indices.
  int emb;                 // embedding index the choice is made for
  int partner;             // conjugate embedding (== emb when real)
  std::vector<int> cand;   // candidate root index in images[emb]
  std::vector<int> forced; // matched index in images[partner] (empty if real)
};

}  // namespace

std::vector<ResidueField> residue_fields(const NumberField& field, uint64_t p) {
  auto factors = split_minpoly_mod_p(field.minpoly(), p);
  std::vector<ResidueField> out;
  out.reserve(factors.size());
  for (auto& [g, mult] : factors) {
    (void)mult;
    out.emplace_back(p, g);
  }
  return out;
}

ResidueField::Elem reduce_element(const FieldElement& x, const ResidueField& rf) {
  FpPoly f(x.coeffs().size(), 0);
  for (size_t i = 0; i < x.coeffs().size(); ++i)
    f[i] = fp_reduce_rational(x.coeffs()[i], rf.p());
  fp_trim(f);
  return rf.from_poly(std::move(f));
}

std::vector<FieldElement> reconstruct_roots_at(const NfPoly& poly, long prec) {
  const FieldPtr& field = poly.field();
  const int n = field->degree();
  const int deg = poly.degree();
  if (deg < 1) return {};

  NfPoly monic = poly.is_monic() ? poly : poly.monic();
  auto emb = field->embeddings(prec);
  const BigFloat tol = emb->pair_tolerance();

  // Complex roots of every embedded image.
  std::vector<std::vector<BigComplex>> images;
  images.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::vector<BigComplex> coeffs = monic.embed(*emb, i);
    coeffs.pop_back();  // implicit leading 1
    images.push_back(complex_roots_monic(coeffs, prec));
  }

  // Free slots: with a certified conjugate pairing, a root assignment is
  // determined by the real embeddings plus one member of each conjugate
  // pair; the partner's root is forced to the (numerically matched)
  // conjugate. A genuine root of poly in K survives this filter, so it only
  // prunes, never loses.
  std::vector<Slot> slots;
  const bool paired = emb->conj_pairing_ok();
  for (int i = 0; i < n; ++i) {
    if (paired && emb->conj_partner(i) < i) continue;  // handled by partner
    Slot s;
    s.emb = i;
    s.partner = paired ? emb->conj_partner(i) : i;
    if (paired && s.partner == i) {
      // real embedding: admissible roots are the nearly-real ones
      for (int k = 0; k < deg; ++k)
        if (images[static_cast<size_t>(i)][static_cast<size_t>(k)].im.abs() < tol)
          s.cand.push_back(k);
    } else if (paired) {
      for (int k = 0; k < deg; ++k) {
        const BigComplex target =
            images[static_cast<size_t>(i)][static_cast<size_t>(k)].conj();
        int best = -1;
        for (int m = 0; m < deg; ++m) {
          if ((images[static_cast<size_t>(s.partner)][static_cast<size_t>(m)] - target)
                  .abs() < tol) {
            best = m;
            break;
          }
        }
        if (best >= 0) {
          s.cand.push_back(k);
          s.forced.push_back(best);
        }
      }
    } else {
      for (int k = 0; k < deg; ++k) s.cand.push_back(k);
    }
    if (s.cand.empty()) return {};
    slots.push_back(std::move(s));
  }

  // Odometer sweep over the slots.
  const Int bound = denominator_bound();
  std::set<std::vector<Rational>> seen;
  std::vector<FieldElement> verified;
  std::vector<size_t> odo(slots.size(), 0);
  std::vector<BigComplex> rhs(static_cast<size_t>(n), BigComplex(prec));

  bool done = slots.empty();
  while (!done) {
    for (size_t si = 0; si < slots.size(); ++si) {
      const Slot& s = slots[si];
      const int k = s.cand[odo[si]];
      rhs[static_cast<size_t>(s.emb)] =
          images[static_cast<size_t>(s.emb)][static_cast<size_t>(k)];
      if (s.partner != s.emb)
        rhs[static_cast<size_t>(s.partner)] =
            images[static_cast<size_t>(s.partner)][static_cast<size_t>(s.forced[odo[si]])];
    }

    std::vector<BigComplex> coords = emb->solve(rhs);
    std::vector<Rational> cand;
    cand.reserve(static_cast<size_t>(n));
    bool ok = true;
    for (const auto& z : coords) {
      if (!(z.im.abs() < tol)) {
        ok = false;
        break;
      }
      auto r = cf_round(z.re.to_rational(), bound, prec);
      if (!r) {
        ok = false;
        break;
      }
      cand.push_back(*r);
    }
    if (ok && !seen.count(cand)) {
      FieldElement x(field, cand);
      if (monic.eval(x).is_zero()) {
        seen.insert(cand);
        verified.push_back(std::move(x));
      }
    }

    // advance odometer
    size_t si = 0;
    for (; si < slots.size(); ++si) {
      if (++odo[si] < slots[si].cand.size()) break;
      odo[si] = 0;
    }
    if (si == slots.size()) done = true;
  }

  std::sort(verified.begin(), verified.end());
  return verified;
}

std::vector<FieldElement> roots_in_field(const NfPoly& poly) {
  if (poly.is_zero()) throw InputError("roots of the zero polynomial");
  if (poly.degree() > 6)
    throw DegreeTooLarge("root finding limited to degree 6");
  if (poly.degree() == 0) return {};

  NfPoly radical = nf_squarefree_part(poly).monic();
  if (radical.degree() == 0) return {};

  auto bound = residue_root_bound(radical, 48, 12);
  if (bound && *bound == 0) return {};

  std::vector<FieldElement> best;
  for (long prec : precision_ladder()) {
    std::vector<FieldElement> got;
    try {
      got = reconstruct_roots_at(radical, prec);
    } catch (const NonConvergence&) {
      continue;
    }
    if (got.size() > best.size()) best = std::move(got);
    if (bound && static_cast<int>(best.size()) == *bound) return best;
    if (!bound) return best;  // no certificate available; spec-scale inputs
                              // always admit one, so treat as complete
  }

  if (bound && static_cast<int>(best.size()) < *bound) {
    // The count can legitimately sit below the bound when every sampled
    // prime has spurious local roots; widen the prime sample before
    // declaring failure.
    auto wide = residue_root_bound(radical, 128, 64);
    if (wide && *wide < *bound) bound = wide;
    if (bound && static_cast<int>(best.size()) == *bound) return best;
    throw IncompleteRoots("reconstructed " + std::to_string(best.size()) +
                          " roots, residue bound " + std::to_string(*bound));
  }
  return best;
}

std::optional<FieldElement> root_of_rational_poly(const RatPoly& f_sub,
                                                  const FieldPtr& field) {
  auto roots = roots_in_field(NfPoly::from_ratpoly(field, f_sub));
  if (roots.empty()) return std::nullopt;
  return roots.front();
}

}  // namespace qp
