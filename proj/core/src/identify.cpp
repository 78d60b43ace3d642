#include "qp/gamma2.hpp"
#include "qp/nf_roots.hpp"

namespace qp {

std::string identify_l(const FieldPtr& field) {
  // Largest first; the containment lattice over these five presets makes the
  // first hit the answer.
  for (const char* label : {"Qzeta8", "Qalpha", "Qsqrt2", "Qi"}) {
    auto preset = NumberField::preset(label);
    if (root_of_rational_poly(preset->minpoly(), field)) return label;
  }
  return "Q";
}

}  // namespace qp
