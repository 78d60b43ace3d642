#include "qp/number_field.hpp"

#include <map>

#include "qp/cf_round.hpp"
#include "qp/errors.hpp"
#include "qp/polyroots.hpp"
#include "qp/precision.hpp"

namespace qp {

namespace {

// Certified rational-root check used as an irreducibility spot check on
// degree-2/3 inputs: reconstruct near-real roots and verify exactly.
bool spot_check_has_rational_root(const RatPoly& f) {
  const long prec = default_precision();
  std::vector<BigComplex> roots;
  try {
    roots = complex_roots(squarefree_part(f), prec);
  } catch (const NonConvergence&) {
    return false;  // give the caller the benefit of the doubt
  }
  const BigFloat tol = BigFloat::pow2(-prec / 4, prec);
  Int bound = 1;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), 64);
  for (const auto& z : roots) {
    if (!(z.im.abs() < tol)) continue;
    auto cand = cf_round(z.re.to_rational(), bound, prec);
    if (cand && f.eval(*cand).is_zero()) return true;
  }
  return false;
}

}  // namespace

NumberField::NumberField(RatPoly minpoly, std::string label, long default_prec)
    : minpoly_(std::move(minpoly)),
      degree_(minpoly_.degree()),
      label_(std::move(label)),
      default_prec_(default_prec) {
  default_embeddings_ = std::make_shared<const EmbeddingSet>(minpoly_, default_prec_);
}

std::shared_ptr<const NumberField> NumberField::create(RatPoly minpoly,
                                                       std::string label) {
  if (minpoly.is_zero() || minpoly.degree() < 1)
    throw InputError("field minimal polynomial must be nonconstant");
  if (!minpoly.is_monic())
    throw InputError("field minimal polynomial must be monic");
  if (minpoly.degree() >= 2 && minpoly.degree() <= 3 &&
      spot_check_has_rational_root(minpoly))
    throw InputError("field minimal polynomial has a rational root");
  return std::shared_ptr<const NumberField>(
      new NumberField(std::move(minpoly), std::move(label), default_precision()));
}

const std::vector<std::string>& NumberField::preset_labels() {
  static const std::vector<std::string> labels = {"Q", "Qi", "Qsqrt2", "Qzeta8",
                                                  "Qalpha"};
  return labels;
}

std::shared_ptr<const NumberField> NumberField::preset(const std::string& label) {
  RatPoly f;
  if (label == "Q") {
    f = RatPoly::x();
  } else if (label == "Qi") {
    f = RatPoly{Rational(1), Rational(0), Rational(1)};
  } else if (label == "Qsqrt2") {
    f = RatPoly{Rational(-2), Rational(0), Rational(1)};
  } else if (label == "Qzeta8") {
    f = RatPoly{Rational(1), Rational(0), Rational(0), Rational(0), Rational(1)};
  } else if (label == "Qalpha") {
    f = RatPoly{Rational(-1), Rational(0), Rational(-2), Rational(0), Rational(1)};
  } else {
    throw InputError("unknown preset field: " + label);
  }
  return create(std::move(f), label);
}

std::shared_ptr<const EmbeddingSet> NumberField::embeddings(long precision) const {
  if (precision == default_prec_) return default_embeddings_;
  return std::make_shared<const EmbeddingSet>(minpoly_, precision);
}

bool NumberField::same_field(const NumberField& o) const {
  return this == &o || minpoly_ == o.minpoly_;
}

}  // namespace qp
