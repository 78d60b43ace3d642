#ifndef QP_CATALOG_HPP
#define QP_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "qp/ratpoly.hpp"

namespace qp {

// A field with verified rank-zero inputs for both curves: runs over these
// need no explicit --assume-rank-zero. The five presets plus the published
// quadratic/odd-degree example fields.
struct CatalogEntry {
  std::string name;      // preset label or a short tag
  RatPoly minpoly;
  bool preset = false;   // one of the five named presets
};

const std::vector<CatalogEntry>& rank_zero_catalog();

// Catalog entry matching the given minimal polynomial, if any.
std::optional<CatalogEntry> catalog_lookup(const RatPoly& minpoly);

}  // namespace qp

#endif
