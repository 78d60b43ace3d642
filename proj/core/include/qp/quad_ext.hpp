#ifndef QP_QUAD_EXT_HPP
#define QP_QUAD_EXT_HPP

#include <memory>
#include <variant>

#include "qp/nf_square.hpp"
#include "qp/nfpoly.hpp"

namespace qp {

class RelQuadExt;
using ExtPtr = std::shared_ptr<const RelQuadExt>;

// L = K[s]/(s^2 + b s + c), stored with the certificate that the
// discriminant b^2 - 4c is not a square in K, so the extension really is
// quadratic.
class RelQuadExt {
 public:
  struct Reducible {
    FieldElement r1, r2;
  };
  using MakeResult = std::variant<ExtPtr, Reducible>;

  // Splits into a certified extension or the two roots in K. Propagates
  // Inconclusive from the square test.
  static MakeResult make(const FieldPtr& base, const FieldElement& b,
                         const FieldElement& c);
  // K(sqrt(d)) presentation: s^2 - d.
  static MakeResult make_sqrt(const FieldPtr& base, const FieldElement& d);

  const FieldPtr& base() const { return base_; }
  const FieldElement& lin_coeff() const { return b_; }
  const FieldElement& const_coeff() const { return c_; }
  FieldElement disc() const;
  const NonSquareCertificate& certificate() const { return cert_; }

  // Monic quadratic s^2 + b s + c as a polynomial over K.
  NfPoly ext_poly() const;

  bool same_ext(const RelQuadExt& o) const;

 private:
  RelQuadExt(FieldPtr base, FieldElement b, FieldElement c,
             NonSquareCertificate cert)
      : base_(std::move(base)), b_(std::move(b)), c_(std::move(c)),
        cert_(std::move(cert)) {}

  FieldPtr base_;
  FieldElement b_, c_;
  NonSquareCertificate cert_;
};

// c0 + c1*s in a relative quadratic extension, always reduced (degree < 2).
class RelElement {
 public:
  RelElement() = default;
  RelElement(ExtPtr ext, FieldElement c0, FieldElement c1);

  static RelElement from_base(const ExtPtr& ext, const FieldElement& c0);
  static RelElement gen(const ExtPtr& ext);   // the class of s
  static RelElement zero(const ExtPtr& ext);
  static RelElement one(const ExtPtr& ext);

  const ExtPtr& ext() const { return ext_; }
  const FieldElement& c0() const { return c0_; }
  const FieldElement& c1() const { return c1_; }

  bool is_zero() const { return c0_.is_zero() && c1_.is_zero(); }
  bool in_base() const { return c1_.is_zero(); }

  RelElement operator-() const;
  friend RelElement operator+(const RelElement& a, const RelElement& b);
  friend RelElement operator-(const RelElement& a, const RelElement& b);
  friend RelElement operator*(const RelElement& a, const RelElement& b);
  friend RelElement operator/(const RelElement& a, const RelElement& b);
  RelElement& operator+=(const RelElement& o) { return *this = *this + o; }
  RelElement& operator-=(const RelElement& o) { return *this = *this - o; }
  RelElement& operator*=(const RelElement& o) { return *this = *this * o; }

  // The nontrivial K-automorphism of L: s -> -b - s.
  RelElement conj() const;
  // e * conj(e), always in K.
  FieldElement norm() const;
  RelElement inverse() const;
  RelElement pow(long e) const;

  friend bool operator==(const RelElement& a, const RelElement& b);
  friend bool operator!=(const RelElement& a, const RelElement& b) { return !(a == b); }
  friend bool operator<(const RelElement& a, const RelElement& b);

  std::string str() const;

 private:
  void check_same(const RelElement& o) const;
  ExtPtr ext_;
  FieldElement c0_, c1_;
};

// Square root of d in L, when one exists; solves the two base-field
// equations of (c0 + c1 s)^2 = d through the square test on the resolvent
// quadratic. Throws ZeroInput on d = 0, propagates Inconclusive.
std::optional<RelElement> rel_sqrt(const RelElement& d);

}  // namespace qp

#endif
