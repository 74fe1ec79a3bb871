#include "crlie/regularize/regularize.hpp"

namespace crlie {

ParabolicRootSet to_root_set(const ParabolicDescriptor<RegularSubalgebra>& d) {
  const auto& sys = d.q.system();
  if (d.q.toral() != sys.full_cartan()) throw VerificationError("parabolic does not contain the Cartan");
  if (!is_parabolic(sys, d.q.roots())) throw VerificationError("root set is not parabolic");
  return ParabolicRootSet::from_mask(sys, d.q.roots());
}

}  // namespace crlie
