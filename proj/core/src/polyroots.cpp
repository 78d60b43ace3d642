#include "qp/polyroots.hpp"

#include <algorithm>

#include "qp/errors.hpp"

namespace qp {

namespace {

constexpr int kMaxIterations = 200;

// Horner evaluation of a monic polynomial given by coeffs + implicit leading 1.
BigComplex eval_monic(const std::vector<BigComplex>& coeffs, const BigComplex& z,
                      long prec) {
  BigComplex acc = BigComplex::from(Rational(1), prec);
  for (size_t i = coeffs.size(); i-- > 0;) {
    acc = acc * z + coeffs[i];
  }
  return acc;
}

long max_coeff_exponent(const std::vector<BigComplex>& coeffs) {
  long e = 0;
  for (const auto& c : coeffs) {
    for (const BigFloat* f : {&c.re, &c.im}) {
      if (f->is_zero()) continue;
      long ex = static_cast<long>(mpfr_get_exp(f->get()));
      e = std::max(e, ex);
    }
  }
  return e;
}

bool complex_less(const BigComplex& a, const BigComplex& b) {
  int c = mpfr_cmp(a.re.get(), b.re.get());
  if (c != 0) return c < 0;
  return mpfr_cmp(a.im.get(), b.im.get()) < 0;
}

}  // namespace

std::vector<BigComplex> complex_roots_monic(const std::vector<BigComplex>& coeffs,
                                            long prec) {
  const int n = static_cast<int>(coeffs.size());
  if (n == 0) throw InputError("complex_roots: constant polynomial");

  if (n == 1) {
    return {-coeffs[0]};
  }

  // Initial points on a perturbed circle of radius 1 + max|c_i|; the angle
  // offset and per-point radius jitter break conjugate symmetry that can
  // stall the iteration on real polynomials.
  BigFloat radius = BigFloat::from_long(1, prec);
  for (const auto& c : coeffs) {
    BigFloat a = c.abs();
    if (a > radius) radius = a;
  }
  radius += BigFloat::from_long(1, prec);

  const BigFloat two_pi = BigFloat::from_long(2, prec) * BigFloat::pi(prec);
  std::vector<BigComplex> z;
  z.reserve(n);
  for (int k = 0; k < n; ++k) {
    BigFloat theta = two_pi * BigFloat::from(Rational(k, n), prec) +
                     BigFloat::from(Rational(2, 5), prec);
    BigFloat r = radius * BigFloat::from(Rational(8L * n + k + 1, 8L * n), prec);
    BigFloat c(prec), s(prec);
    mpfr_sin_cos(s.get(), c.get(), theta.get(), MPFR_RNDN);
    z.emplace_back(r * c, r * s);
  }

  const long hm = std::max<long>(4, max_coeff_exponent(coeffs) + 3);
  const BigFloat step_eps = radius * BigFloat::pow2(-prec + 8, prec);
  const BigFloat tiny = BigFloat::pow2(-2 * prec, prec);

  bool settled = false;
  for (int it = 0; it < kMaxIterations && !settled; ++it) {
    BigFloat max_step(prec);
    for (int i = 0; i < n; ++i) {
      BigComplex num = eval_monic(coeffs, z[i], prec);
      BigComplex den = BigComplex::from(Rational(1), prec);
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        den = den * (z[i] - z[j]);
      }
      if (den.norm() < tiny) {
        // Coincident iterates; nudge and retry next sweep.
        z[i].re += radius * BigFloat::pow2(-prec / 8, prec);
        max_step = radius;
        continue;
      }
      BigComplex w = num / den;
      z[i] -= w;
      BigFloat aw = w.abs();
      if (aw > max_step) max_step = aw;
    }
    if (!(max_step > step_eps)) settled = true;
  }

  if (!settled)
    throw NonConvergence("root iteration did not settle at precision " +
                         std::to_string(prec));

  const BigFloat accept = BigFloat::pow2(-prec + static_cast<long>(n) * hm, prec);
  for (int i = 0; i < n; ++i) {
    if (!(eval_monic(coeffs, z[i], prec).abs() < accept))
      throw NonConvergence("residual above certification threshold");
  }

  std::sort(z.begin(), z.end(), complex_less);
  return z;
}

std::vector<BigComplex> complex_roots(const RatPoly& poly, long prec) {
  if (poly.is_zero()) throw InputError("complex_roots: zero polynomial");
  if (poly.degree() == 0) return {};
  RatPoly m = poly.monic();
  std::vector<BigComplex> coeffs;
  coeffs.reserve(static_cast<size_t>(m.degree()));
  for (int i = 0; i < m.degree(); ++i)
    coeffs.push_back(BigComplex::from(m[static_cast<size_t>(i)], prec));
  return complex_roots_monic(coeffs, prec);
}

}  // namespace qp
