#ifndef QP_EMBEDDING_HPP
#define QP_EMBEDDING_HPP

#include <vector>

#include "qp/bigcomplex.hpp"
#include "qp/ratpoly.hpp"

namespace qp {

// The n complex roots of a field's minimal polynomial at a fixed precision,
// in deterministic (Re, Im) order, together with the LU factorization of the
// Vandermonde matrix V[i][j] = root_i^j used to convert between coefficient
// vectors and embedding values.
class EmbeddingSet {
 public:
  EmbeddingSet(const RatPoly& minpoly, long precision);

  long precision() const { return prec_; }
  int degree() const { return static_cast<int>(roots_.size()); }
  const std::vector<BigComplex>& roots() const { return roots_; }

  // V[i][j] = roots[i]^j.
  std::vector<std::vector<BigComplex>> vandermonde() const;

  // Solves V*c = rhs for the coefficient vector c.
  std::vector<BigComplex> solve(const std::vector<BigComplex>& rhs) const;

  // Index of the embedding whose root is the complex conjugate of root i
  // (i itself for real embeddings). Valid only when conj_pairing_ok().
  int conj_partner(int i) const { return partner_[static_cast<size_t>(i)]; }
  bool is_real_embedding(int i) const { return partner_[static_cast<size_t>(i)] == i; }
  bool conj_pairing_ok() const { return pairing_ok_; }

  // Tolerance used for "approximately real / conjugate" tests at this
  // precision: 2^(-precision/4).
  BigFloat pair_tolerance() const;

 private:
  void factorize();
  void pair_conjugates();

  long prec_;
  std::vector<BigComplex> roots_;
  std::vector<std::vector<BigComplex>> lu_;
  std::vector<int> perm_;
  std::vector<int> partner_;
  bool pairing_ok_ = false;
};

}  // namespace qp

#endif
