#include "qp/cf_round.hpp"

#include "qp/errors.hpp"

namespace qp {

std::optional<Rational> cf_round(const Rational& approx, const Int& den_bound,
                                 long precision_bits) {
  if (den_bound < 1) throw InputError("cf_round: denominator bound must be >= 1");

  // Convergents h_k/k_k of the continued fraction of approx, computed from
  // the Euclidean algorithm on (num, den). Successive convergents strictly
  // improve, so the last one within the bound is the best one.
  Int a = approx.num(), b = approx.den();
  Int p_prev = 0, q_prev = 1;  // h_{-2}, k_{-2}
  Int p = 1, q = 0;            // h_{-1}, k_{-1}
  bool have = false;
  Int best_p, best_q;

  while (sgn(b) != 0) {
    Int quot, rem;
    mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    Int p_next = quot * p + p_prev;
    Int q_next = quot * q + q_prev;
    if (q_next > den_bound) break;
    p_prev = p; q_prev = q;
    p = p_next; q = q_next;
    best_p = p; best_q = q;
    have = true;
    a = b;
    b = rem;
  }

  if (!have) return std::nullopt;

  Rational cand(best_p, best_q);
  Rational residual = (approx - cand).abs();
  // threshold 2^(-precision_bits/2)
  Int two_pow = 1;
  mpz_mul_2exp(two_pow.get_mpz_t(), two_pow.get_mpz_t(),
               static_cast<mp_bitcnt_t>(precision_bits / 2));
  if (residual > Rational(Int(1), two_pow)) return std::nullopt;
  return cand;
}

}  // namespace qp
