#include "qp/embedding.hpp"

#include <algorithm>

#include "qp/errors.hpp"
#include "qp/polyroots.hpp"

namespace qp {

EmbeddingSet::EmbeddingSet(const RatPoly& minpoly, long precision)
    : prec_(precision) {
  roots_ = complex_roots(minpoly, precision);

  // Certify the stored roots against the invariant residual bound.
  const long hm = std::max<long>(4, static_cast<long>(mpz_sizeinbase(minpoly.height().get_mpz_t(), 2)) + 3);
  const BigFloat accept = BigFloat::pow2(-prec_ + minpoly.degree() * hm, prec_);
  for (const auto& z : roots_) {
    BigComplex acc(prec_);
    for (int i = minpoly.degree(); i >= 0; --i)
      acc = acc * z + BigComplex::from(minpoly[static_cast<size_t>(i)], prec_);
    if (!(acc.abs() < accept))
      throw NonConvergence("embedding root fails residual certification");
  }

  factorize();
  pair_conjugates();
}

BigFloat EmbeddingSet::pair_tolerance() const {
  return BigFloat::pow2(-prec_ / 4, prec_);
}

std::vector<std::vector<BigComplex>> EmbeddingSet::vandermonde() const {
  const int n = degree();
  std::vector<std::vector<BigComplex>> v;
  v.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::vector<BigComplex> row;
    row.reserve(static_cast<size_t>(n));
    BigComplex p = BigComplex::from(Rational(1), prec_);
    for (int j = 0; j < n; ++j) {
      row.push_back(p);
      if (j + 1 < n) p = p * roots_[static_cast<size_t>(i)];
    }
    v.push_back(std::move(row));
  }
  return v;
}

void EmbeddingSet::factorize() {
  const int n = degree();
  lu_ = vandermonde();
  perm_.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) perm_[static_cast<size_t>(i)] = i;

  for (int k = 0; k < n; ++k) {
    int best = k;
    BigFloat best_norm = lu_[static_cast<size_t>(k)][static_cast<size_t>(k)].norm();
    for (int i = k + 1; i < n; ++i) {
      BigFloat nn = lu_[static_cast<size_t>(i)][static_cast<size_t>(k)].norm();
      if (nn > best_norm) {
        best = i;
        best_norm = nn;
      }
    }
    if (best_norm.is_zero())
      throw NonConvergence("singular Vandermonde; roots not separated at this precision");
    std::swap(lu_[static_cast<size_t>(k)], lu_[static_cast<size_t>(best)]);
    std::swap(perm_[static_cast<size_t>(k)], perm_[static_cast<size_t>(best)]);
    const BigComplex& piv = lu_[static_cast<size_t>(k)][static_cast<size_t>(k)];
    for (int i = k + 1; i < n; ++i) {
      BigComplex f = lu_[static_cast<size_t>(i)][static_cast<size_t>(k)] / piv;
      lu_[static_cast<size_t>(i)][static_cast<size_t>(k)] = f;
      for (int j = k + 1; j < n; ++j) {
        lu_[static_cast<size_t>(i)][static_cast<size_t>(j)].submul(
            f, lu_[static_cast<size_t>(k)][static_cast<size_t>(j)]);
      }
    }
  }
}

std::vector<BigComplex> EmbeddingSet::solve(const std::vector<BigComplex>& rhs) const {
  const int n = degree();
  if (static_cast<int>(rhs.size()) != n) throw InputError("EmbeddingSet::solve: size mismatch");

  std::vector<BigComplex> y;
  y.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    BigComplex acc = rhs[static_cast<size_t>(perm_[static_cast<size_t>(i)])];
    for (int j = 0; j < i; ++j)
      acc.submul(lu_[static_cast<size_t>(i)][static_cast<size_t>(j)], y[static_cast<size_t>(j)]);
    y.push_back(std::move(acc));
  }
  std::vector<BigComplex> x(static_cast<size_t>(n), BigComplex(prec_));
  for (int i = n - 1; i >= 0; --i) {
    BigComplex acc = y[static_cast<size_t>(i)];
    for (int j = i + 1; j < n; ++j)
      acc.submul(lu_[static_cast<size_t>(i)][static_cast<size_t>(j)], x[static_cast<size_t>(j)]);
    x[static_cast<size_t>(i)] = acc / lu_[static_cast<size_t>(i)][static_cast<size_t>(i)];
  }
  return x;
}

void EmbeddingSet::pair_conjugates() {
  const int n = degree();
  partner_.assign(static_cast<size_t>(n), -1);
  const BigFloat tol = pair_tolerance();
  for (int i = 0; i < n; ++i) {
    if (roots_[static_cast<size_t>(i)].im.abs() < tol) {
      partner_[static_cast<size_t>(i)] = i;
      continue;
    }
    const BigComplex target = roots_[static_cast<size_t>(i)].conj();
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      if ((roots_[static_cast<size_t>(j)] - target).abs() < tol) {
        partner_[static_cast<size_t>(i)] = j;
        break;
      }
    }
  }
  // The pairing must be an involution with no collisions.
  pairing_ok_ = true;
  for (int i = 0; i < n && pairing_ok_; ++i) {
    int p = partner_[static_cast<size_t>(i)];
    if (p < 0 || partner_[static_cast<size_t>(p)] != i) pairing_ok_ = false;
  }
}

}  // namespace qp
