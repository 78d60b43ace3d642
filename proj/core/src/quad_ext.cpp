#include "qp/quad_ext.hpp"

#include "qp/errors.hpp"

namespace qp {

RelQuadExt::MakeResult RelQuadExt::make(const FieldPtr& base, const FieldElement& b,
                                        const FieldElement& c) {
  FieldElement disc = b * b - c.scaled(Rational(4));
  if (disc.is_zero()) {
    FieldElement r = b.scaled(Rational(-1, 2));
    return Reducible{r, r};
  }
  SquareResult sq = is_square(disc);
  if (sq.kind == SquareResult::Kind::kInconclusive)
    throw Inconclusive("square test inconclusive on extension discriminant");
  if (sq.is_square()) {
    const FieldElement& w = *sq.root;
    FieldElement r1 = (-b + w).scaled(Rational(1, 2));
    FieldElement r2 = (-b - w).scaled(Rational(1, 2));
    return Reducible{r1, r2};
  }
  return ExtPtr(new RelQuadExt(base, b, c, *sq.cert));
}

RelQuadExt::MakeResult RelQuadExt::make_sqrt(const FieldPtr& base,
                                             const FieldElement& d) {
  return make(base, FieldElement::zero(base), -d);
}

FieldElement RelQuadExt::disc() const {
  return b_ * b_ - c_.scaled(Rational(4));
}

NfPoly RelQuadExt::ext_poly() const {
  return NfPoly(base_, {c_, b_, FieldElement::one(base_)});
}

bool RelQuadExt::same_ext(const RelQuadExt& o) const {
  return this == &o || (base_->same_field(*o.base_) && b_ == o.b_ && c_ == o.c_);
}

RelElement::RelElement(ExtPtr ext, FieldElement c0, FieldElement c1)
    : ext_(std::move(ext)), c0_(std::move(c0)), c1_(std::move(c1)) {
  if (!ext_) throw InputError("relative element without an extension");
}

RelElement RelElement::from_base(const ExtPtr& ext, const FieldElement& c0) {
  return RelElement(ext, c0, FieldElement::zero(ext->base()));
}

RelElement RelElement::gen(const ExtPtr& ext) {
  return RelElement(ext, FieldElement::zero(ext->base()),
                    FieldElement::one(ext->base()));
}

RelElement RelElement::zero(const ExtPtr& ext) {
  return from_base(ext, FieldElement::zero(ext->base()));
}

RelElement RelElement::one(const ExtPtr& ext) {
  return from_base(ext, FieldElement::one(ext->base()));
}

void RelElement::check_same(const RelElement& o) const {
  if (!ext_ || !o.ext_ || !ext_->same_ext(*o.ext_))
    throw InputError("elements of different quadratic extensions");
}

RelElement RelElement::operator-() const {
  return RelElement(ext_, -c0_, -c1_);
}

RelElement operator+(const RelElement& a, const RelElement& b) {
  a.check_same(b);
  return RelElement(a.ext_, a.c0_ + b.c0_, a.c1_ + b.c1_);
}

RelElement operator-(const RelElement& a, const RelElement& b) {
  a.check_same(b);
  return RelElement(a.ext_, a.c0_ - b.c0_, a.c1_ - b.c1_);
}

RelElement operator*(const RelElement& a, const RelElement& b) {
  a.check_same(b);
  // (a0 + a1 s)(b0 + b1 s) with s^2 = -B s - C
  const FieldElement& B = a.ext_->lin_coeff();
  const FieldElement& C = a.ext_->const_coeff();
  FieldElement s2 = a.c1_ * b.c1_;
  FieldElement c0 = a.c0_ * b.c0_ - s2 * C;
  FieldElement c1 = a.c0_ * b.c1_ + a.c1_ * b.c0_ - s2 * B;
  return RelElement(a.ext_, std::move(c0), std::move(c1));
}

RelElement operator/(const RelElement& a, const RelElement& b) {
  a.check_same(b);
  return a * b.inverse();
}

RelElement RelElement::conj() const {
  const FieldElement& B = ext_->lin_coeff();
  return RelElement(ext_, c0_ - B * c1_, -c1_);
}

FieldElement RelElement::norm() const {
  const FieldElement& B = ext_->lin_coeff();
  const FieldElement& C = ext_->const_coeff();
  return c0_ * c0_ - B * c0_ * c1_ + C * c1_ * c1_;
}

RelElement RelElement::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  FieldElement n = norm();
  // norm vanishes only at zero since the extension polynomial is irreducible
  RelElement cj = conj();
  FieldElement ninv = n.inverse();
  return RelElement(ext_, cj.c0() * ninv, cj.c1() * ninv);
}

RelElement RelElement::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  RelElement r = one(ext_);
  RelElement base(*this);
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

bool operator==(const RelElement& a, const RelElement& b) {
  a.check_same(b);
  return a.c0_ == b.c0_ && a.c1_ == b.c1_;
}

bool operator<(const RelElement& a, const RelElement& b) {
  a.check_same(b);
  if (a.c0_ < b.c0_) return true;
  if (b.c0_ < a.c0_) return false;
  return a.c1_ < b.c1_;
}

std::string RelElement::str() const {
  return c0_.str() + " + " + c1_.str() + "*s";
}

std::optional<RelElement> rel_sqrt(const RelElement& d) {
  if (d.is_zero()) throw ZeroInput("square root of zero");
  const ExtPtr& ext = d.ext();
  const FieldPtr& base = ext->base();
  const FieldElement& B = ext->lin_coeff();
  const FieldElement disc = ext->disc();
  const FieldElement& d0 = d.c0();
  const FieldElement& d1 = d.c1();

  auto verify = [&](const RelElement& r) -> std::optional<RelElement> {
    if (r * r == d) return r;
    return std::nullopt;
  };

  if (d1.is_zero()) {
    // Either the root stays in K, or it is a pure multiple of s shifted by
    // the trace: c0 = B c1 / 2 with c1^2 = 4 d0 / disc.
    SquareResult sq = is_square(d0);
    if (sq.kind == SquareResult::Kind::kInconclusive)
      throw Inconclusive("square test inconclusive in rel_sqrt");
    if (sq.is_square())
      return verify(RelElement::from_base(ext, *sq.root));
    FieldElement target = d0.scaled(Rational(4)) / disc;
    SquareResult sq2 = is_square(target);
    if (sq2.kind == SquareResult::Kind::kInconclusive)
      throw Inconclusive("square test inconclusive in rel_sqrt");
    if (sq2.is_square()) {
      const FieldElement& c1 = *sq2.root;
      FieldElement c0 = B * c1;
      c0 = c0.scaled(Rational(1, 2));
      if (auto r = verify(RelElement(ext, c0, c1))) return r;
    }
    return std::nullopt;
  }

  // c1 != 0; with w = c1^2: disc*w^2 + (2 B d1 - 4 d0) w + d1^2 = 0, then
  // c0 = (d1 + B w) / (2 c1).
  FieldElement lin = B * d1.scaled(Rational(2)) - d0.scaled(Rational(4));
  FieldElement disc_w = lin * lin - disc * d1 * d1 * FieldElement::from_rational(base, Rational(4));
  std::vector<FieldElement> w_candidates;
  if (disc_w.is_zero()) {
    w_candidates.push_back((-lin) / disc.scaled(Rational(2)));
  } else {
    SquareResult sq = is_square(disc_w);
    if (sq.kind == SquareResult::Kind::kInconclusive)
      throw Inconclusive("square test inconclusive in rel_sqrt");
    if (sq.is_square()) {
      const FieldElement& u = *sq.root;
      w_candidates.push_back((-lin + u) / disc.scaled(Rational(2)));
      w_candidates.push_back((-lin - u) / disc.scaled(Rational(2)));
    }
  }
  for (const auto& w : w_candidates) {
    if (w.is_zero()) continue;
    SquareResult sq = is_square(w);
    if (sq.kind == SquareResult::Kind::kInconclusive)
      throw Inconclusive("square test inconclusive in rel_sqrt");
    if (!sq.is_square()) continue;
    const FieldElement& c1 = *sq.root;
    FieldElement c0 = (d1 + B * w) / c1.scaled(Rational(2));
    if (auto r = verify(RelElement(ext, c0, c1))) return r;
  }
  return std::nullopt;
}

}  // namespace qp
