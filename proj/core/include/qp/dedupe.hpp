#ifndef QP_DEDUPE_HPP
#define QP_DEDUPE_HPP

#include <optional>

#include "qp/quad_point.hpp"

namespace qp {

// Image of the generator of `from` inside the isomorphic presentation `to`,
// when one exists: a root of from's polynomial located via the square root
// of its discriminant in `to`. Distinct presentations with no embedding are
// genuinely different fields.
std::optional<RelElement> embed_extension(const RelQuadExt& from, const ExtPtr& to);

// Records regrouped by extension-isomorphism class, every record rewritten
// into its group's representative presentation and deduplicated exactly.
struct DedupeGroup {
  ExtPtr ext;  // null for the K-rational group
  std::vector<QuadraticPointRecord> records;
};

std::vector<DedupeGroup> dedupe_points(const std::vector<QuadraticPointRecord>& records);

}  // namespace qp

#endif
