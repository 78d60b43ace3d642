#include "qp/catalog.hpp"

namespace qp {

namespace {

RatPoly poly(std::vector<long> coeffs) {
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return RatPoly(std::move(c));
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> cat;
  cat.push_back({"Q", poly({0, 1}), true});
  cat.push_back({"Qi", poly({1, 0, 1}), true});
  cat.push_back({"Qsqrt2", poly({-2, 0, 1}), true});
  cat.push_back({"Qzeta8", poly({1, 0, 0, 0, 1}), true});
  cat.push_back({"Qalpha", poly({-1, 0, -2, 0, 1}), true});

  // Quadratic fields Q(sqrt(D)) with both curves of rank zero.
  for (long d : {-2L, 33L, -33L, 57L, -57L, 66L, -66L, 73L, -73L, 89L, -89L,
                 114L, -114L, 129L, -129L, 146L, -146L, 177L, -177L, 178L,
                 -178L, 185L, -185L}) {
    cat.push_back({"Qsqrt(" + std::to_string(d) + ")", poly({-d, 0, 1}), false});
  }

  // Cubic fields.
  cat.push_back({"cubic-1", poly({1, -2, -1, 1}), false});   // x^3 - x^2 - 2x + 1
  cat.push_back({"cubic-2", poly({-1, -3, 0, 1}), false});   // x^3 - 3x - 1
  cat.push_back({"cubic-3", poly({-1, -4, -1, 1}), false});  // x^3 - x^2 - 4x - 1
  cat.push_back({"cubic-4", poly({2, 2, -1, 1}), false});    // x^3 - x^2 + 2x + 2
  cat.push_back({"cubic-5", poly({1, -4, -1, 1}), false});   // x^3 - x^2 - 4x + 1

  // Quartic fields (x^4 + 1 is the Qzeta8 preset).
  cat.push_back({"quartic-2", poly({1, -1, 1, 0, 1}), false});   // x^4 + x^2 - x + 1
  cat.push_back({"quartic-3", poly({1, -2, 1, 0, 1}), false});   // x^4 + x^2 - 2x + 1
  cat.push_back({"quartic-4", poly({2, 0, 0, -2, 1}), false});   // x^4 - 2x^3 + 2
  cat.push_back({"quartic-5", poly({1, -2, 1, -2, 1}), false});  // x^4 - 2x^3 + x^2 - 2x + 1

  // Quintic fields.
  cat.push_back({"quintic-1", poly({-1, 0, -2, 1, 0, 1}), false});   // x^5 + x^3 - 2x^2 - 1
  cat.push_back({"quintic-2", poly({-1, 2, -1, 1, -1, 1}), false});  // x^5 - x^4 + x^3 - x^2 + 2x - 1
  cat.push_back({"quintic-3", poly({-1, 2, 0, -1, 0, 1}), false});   // x^5 - x^3 + 2x - 1
  cat.push_back({"quintic-4", poly({1, 0, -1, 1, -1, 1}), false});   // x^5 - x^4 + x^3 - x^2 + 1
  cat.push_back({"quintic-5", poly({-1, 1, 0, 1, -1, 1}), false});   // x^5 - x^4 + x^3 + x - 1

  // Degree 6.
  cat.push_back({"sextic-1", poly({1, 2, 0, -2, -1, 0, 1}), false});  // x^6 - x^4 - 2x^3 + 2x + 1

  // Q(zeta16): both curves keep their Q(zeta8) points, so the rank-zero
  // inputs carry over.
  cat.push_back({"Qzeta16", poly({1, 0, 0, 0, 0, 0, 0, 0, 1}), false});
  return cat;
}

}  // namespace

const std::vector<CatalogEntry>& rank_zero_catalog() {
  static const std::vector<CatalogEntry> cat = build_catalog();
  return cat;
}

std::optional<CatalogEntry> catalog_lookup(const RatPoly& minpoly) {
  for (const auto& e : rank_zero_catalog())
    if (e.minpoly == minpoly) return e;
  return std::nullopt;
}

}  // namespace qp
