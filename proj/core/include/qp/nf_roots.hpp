#ifndef QP_NF_ROOTS_HPP
#define QP_NF_ROOTS_HPP

#include <optional>
#include <vector>

#include "qp/nfpoly.hpp"
#include "qp/residue_field.hpp"

namespace qp {

// Residue rings of K at an odd prime p of good reduction: one F_p[u]/(g) per
// irreducible factor g of minpoly mod p. Throws BadPrime when the reduction
// is unusable.
std::vector<ResidueField> residue_fields(const NumberField& field, uint64_t p);

// Image of x in a residue ring; BadPrime when p divides a denominator.
ResidueField::Elem reduce_element(const FieldElement& x, const ResidueField& rf);

// All roots of poly lying in K (degree <= 6), each verified by exact
// evaluation. Reconstruction runs one root assignment per embedding through
// the Vandermonde solve + continued-fraction rounding; completeness is
// certified by comparing against residue root counts at good primes, and the
// precision ladder escalates on deficit. Throws IncompleteRoots when the
// ladder is exhausted with the residue bound still higher, DegreeTooLarge
// past degree 6.
std::vector<FieldElement> roots_in_field(const NfPoly& poly);

// One rung of the reconstruction at a fixed precision, no completeness
// certification. Exposed for the square tester, which certifies failure via
// residue characters instead.
std::vector<FieldElement> reconstruct_roots_at(const NfPoly& poly, long precision);

// A root of a rational polynomial inside K, if any (subfield detection).
std::optional<FieldElement> root_of_rational_poly(const RatPoly& f_sub,
                                                  const FieldPtr& field);

}  // namespace qp

#endif
