#include "qp/nf_minpoly.hpp"

#include "qp/errors.hpp"
#include "qp/linsolve.hpp"

namespace qp {

namespace {

RatVector vec_of(const FieldElement& e) {
  return e.coeffs();
}

RatVector vec_of(const RelElement& e) {
  RatVector v = e.c0().coeffs();
  const RatVector& tail = e.c1().coeffs();
  v.insert(v.end(), tail.begin(), tail.end());
  return v;
}

template <typename Elem>
RatPoly min_poly_generic(const Elem& e, const Elem& one, size_t ambient_dim) {
  RowSpan span(ambient_dim);
  std::vector<RatVector> power_vecs;
  Elem p = one;
  for (size_t k = 0; k <= ambient_dim; ++k) {
    RatVector v = vec_of(p);
    if (!span.add(v)) {
      // e^k depends on lower powers: solve for the combination.
      RatMatrix m(ambient_dim, RatVector(k));
      for (size_t j = 0; j < k; ++j)
        for (size_t i = 0; i < ambient_dim; ++i) m[i][j] = power_vecs[j][i];
      LinSolveResult sol = linsolve(m, v);
      if (sol.status != SolveStatus::kSolved)
        throw Error("minimal polynomial dependency solve failed");
      std::vector<Rational> coeffs(k + 1);
      for (size_t j = 0; j < k; ++j) coeffs[j] = -sol.solution[j];
      coeffs[k] = Rational(1);
      return RatPoly(std::move(coeffs));
    }
    power_vecs.push_back(std::move(v));
    p = p * e;
  }
  throw Error("minimal polynomial exceeds ambient degree");
}

template <typename Elem>
int generated_degree_generic(const Elem& x, const Elem& y, const Elem& one,
                             size_t ambient_dim) {
  // Powers up to the ambient dimension are enough: the generated ring is a
  // field of degree dividing ambient_dim.
  std::vector<Elem> xp{one}, yp{one};
  for (size_t i = 1; i < ambient_dim; ++i) xp.push_back(xp.back() * x);
  for (size_t j = 1; j < ambient_dim; ++j) yp.push_back(yp.back() * y);
  RowSpan span(ambient_dim);
  for (size_t i = 0; i < ambient_dim; ++i) {
    for (size_t j = 0; j < ambient_dim; ++j) {
      span.add(vec_of(xp[i] * yp[j]));
      if (span.rank() == ambient_dim) return static_cast<int>(ambient_dim);
    }
  }
  return static_cast<int>(span.rank());
}

}  // namespace

RatPoly min_poly(const FieldElement& e) {
  return min_poly_generic(e, FieldElement::one(e.field()),
                          static_cast<size_t>(e.field()->degree()));
}

RatPoly min_poly(const RelElement& e) {
  return min_poly_generic(e, RelElement::one(e.ext()),
                          2 * static_cast<size_t>(e.ext()->base()->degree()));
}

int generated_degree(const RelElement& x, const RelElement& y) {
  if (!x.ext()->same_ext(*y.ext()))
    throw InputError("generated_degree: different extensions");
  return generated_degree_generic(x, y, RelElement::one(x.ext()),
                                  2 * static_cast<size_t>(x.ext()->base()->degree()));
}

int generated_degree(const FieldElement& x, const FieldElement& y) {
  return generated_degree_generic(x, y, FieldElement::one(x.field()),
                                  static_cast<size_t>(x.field()->degree()));
}

}  // namespace qp
