#ifndef QP_NF_SQUARE_HPP
#define QP_NF_SQUARE_HPP

#include <optional>

#include "qp/fppoly.hpp"
#include "qp/field_element.hpp"

namespace qp {

// Residue witness that d is not a square in K: an odd prime p of good
// reduction and an irreducible factor g of minpoly mod p such that the image
// of d in F_p[u]/(g) is a nonzero non-square by the Euler criterion. A square
// in K reduces to a square in every such residue ring, so the witness is a
// proof.
struct NonSquareCertificate {
  uint64_t p = 0;
  FpPoly factor;
};

struct SquareResult {
  enum class Kind { kSquare, kNonSquare, kInconclusive };
  Kind kind = Kind::kInconclusive;
  std::optional<FieldElement> root;             // kSquare
  std::optional<NonSquareCertificate> cert;     // kNonSquare

  bool is_square() const { return kind == Kind::kSquare; }
};

// Square test in K: reconstruction ladder for the root, residue certificates
// for non-squareness. kInconclusive only when both fail (never expected at
// this project's scale). Throws ZeroInput on d = 0.
SquareResult is_square(const FieldElement& d);

// Re-checks a stored certificate (used when auditing serialized reports).
bool certificate_holds(const FieldElement& d, const NonSquareCertificate& cert);

}  // namespace qp

#endif
