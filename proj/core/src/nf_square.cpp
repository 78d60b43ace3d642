#include "qp/nf_square.hpp"

#include "qp/errors.hpp"
#include "qp/nf_roots.hpp"
#include "qp/precision.hpp"
#include "qp/residue_field.hpp"

namespace qp {

namespace {

// Enough primes that every field in range has several residue rings of odd
// degree, where the Euler criterion can actually reject: in a degree-8
// abelian field only ~1/8 of primes have one, so a short scan can run dry
// even though witnesses are plentiful.
constexpr int kCertificatePrimes = 128;

std::optional<NonSquareCertificate> find_certificate(const FieldElement& d) {
  const NumberField& field = *d.field();
  int tried = 0;
  for (uint64_t p = 3; tried < kCertificatePrimes && p < 100000; p += 2) {
    bool is_prime = true;
    for (uint64_t q = 3; q * q <= p; q += 2)
      if (p % q == 0) {
        is_prime = false;
        break;
      }
    if (!is_prime) continue;

    std::vector<ResidueField> rfs;
    try {
      rfs = residue_fields(field, p);
    } catch (const BadPrime&) {
      continue;
    }
    ++tried;
    try {
      for (const auto& rf : rfs) {
        ResidueField::Elem img = reduce_element(d, rf);
        if (rf.is_zero(img)) continue;
        if (!rf.is_square(img)) return NonSquareCertificate{p, rf.modulus()};
      }
    } catch (const BadPrime&) {
      continue;
    }
  }
  return std::nullopt;
}

}  // namespace

bool certificate_holds(const FieldElement& d, const NonSquareCertificate& cert) {
  try {
    ResidueField rf(cert.p, cert.factor);
    ResidueField::Elem img = reduce_element(d, rf);
    if (rf.is_zero(img)) return false;
    return !rf.is_square(img);
  } catch (const Error&) {
    return false;
  }
}

SquareResult is_square(const FieldElement& d) {
  if (d.is_zero()) throw ZeroInput("square test of zero");
  const FieldPtr& field = d.field();

  // x^2 - d
  NfPoly poly(field, {-d, FieldElement::zero(field), FieldElement::one(field)});

  // Cheap reconstruction first; certify non-squareness before climbing the
  // ladder, since reconstruction failure alone proves nothing.
  for (long prec : precision_ladder()) {
    std::vector<FieldElement> roots;
    try {
      roots = reconstruct_roots_at(poly, prec);
    } catch (const NonConvergence&) {
      roots.clear();
    }
    if (!roots.empty()) {
      SquareResult r;
      r.kind = SquareResult::Kind::kSquare;
      r.root = roots.front();
      return r;
    }
    if (auto cert = find_certificate(d)) {
      SquareResult r;
      r.kind = SquareResult::Kind::kNonSquare;
      r.cert = std::move(cert);
      return r;
    }
    // No root reconstructed and no witness found: escalate precision.
  }
  return SquareResult{};
}

}  // namespace qp
