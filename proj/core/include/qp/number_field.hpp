#ifndef QP_NUMBER_FIELD_HPP
#define QP_NUMBER_FIELD_HPP

#include <memory>
#include <string>
#include <vector>

#include "qp/embedding.hpp"
#include "qp/ratpoly.hpp"

namespace qp {

// A number field K = Q[t]/(f), f monic irreducible over Q. Irreducibility is
// asserted by the caller; low-degree inputs are spot-checked for rational
// roots, and the named presets hold by construction. Embeddings at the
// default precision are built eagerly so const instances can be shared
// freely across threads.
class NumberField {
 public:
  static std::shared_ptr<const NumberField> create(RatPoly minpoly,
                                                   std::string label = "");
  // "Q", "Qi" (t^2+1), "Qsqrt2" (t^2-2), "Qzeta8" (t^4+1),
  // "Qalpha" (t^4-2t^2-1).
  static std::shared_ptr<const NumberField> preset(const std::string& label);
  static const std::vector<std::string>& preset_labels();

  const RatPoly& minpoly() const { return minpoly_; }
  int degree() const { return degree_; }
  const std::string& label() const { return label_; }

  // Embedding data at the requested precision; the default-precision set is
  // the eagerly built one, higher precisions are computed per call.
  std::shared_ptr<const EmbeddingSet> embeddings(long precision) const;
  std::shared_ptr<const EmbeddingSet> embeddings() const { return default_embeddings_; }

  bool same_field(const NumberField& o) const;

 private:
  NumberField(RatPoly minpoly, std::string label, long default_prec);

  RatPoly minpoly_;
  int degree_;
  std::string label_;
  std::shared_ptr<const EmbeddingSet> default_embeddings_;
  long default_prec_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

}  // namespace qp

#endif
