#include "crlie/crcore/backend.hpp"

namespace crlie {

RegularSubalgebra RegularBackend::derived(const Space& s) const {
  const RootSystem& sys = *sys_;
  RootMask roots;
  std::vector<Vector> toral;
  const auto members = sys.members(s.roots());
  for (int a : members) {
    if (!sys.vanishes_on(a, s.toral())) roots.set(static_cast<std::size_t>(a));
    for (int b : members) {
      if (b == sys.negative(a)) {
        if (sys.is_positive(a)) toral.push_back(sys.coroot(a));
        continue;
      }
      const int c = sys.sum(a, b);
      if (c >= 0) roots.set(static_cast<std::size_t>(c));
    }
  }
  return {sys, crlie::Space::span(sys.coord_dim(), toral), roots};
}

RegularSubalgebra RegularBackend::maximal_torus(const Space& c) const {
  if (c.conj() != c) throw VerificationError("maximal_torus: subalgebra is not conjugation stable");
  if (!c.is_subalgebra()) throw VerificationError("maximal_torus: not a subalgebra");
  return {*sys_, c.toral(), {}};
}

RegularSubalgebra RegularBackend::centralizer_in(const Space& c, const Space& s) const {
  const RootSystem& sys = *sys_;
  const auto sroots = sys.members(s.roots());
  // toral part: kernel of the roots of s
  crlie::Space toral = c.toral();
  for (int a : sroots) toral = intersection(toral, kernel(DenseMatrix(sys.coroot(a).transpose())));
  RootMask roots;
  for (int b : sys.members(c.roots())) {
    bool ok = sys.vanishes_on(b, s.toral());
    for (int a : sroots)
      if (a == sys.negative(b) || sys.sum(a, b) >= 0) ok = false;
    if (ok) roots.set(static_cast<std::size_t>(b));
  }
  return {sys, toral, roots};
}

}  // namespace crlie
