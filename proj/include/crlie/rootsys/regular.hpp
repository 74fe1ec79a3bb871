#pragma once

#include <vector>

#include <gmpxx.h>

#include "crlie/rootsys/root_system.hpp"

namespace crlie {

/// Roots of a parabolic subalgebra: Q with Q u -Q = R, split into the
/// nilradical part Q_n and the Levi part Q_r. The full Cartan is implicit.
struct ParabolicRootSet {
  RootMask q;
  RootMask qn;
  RootMask qr;

  static ParabolicRootSet from_mask(const RootSystem& sys, const RootMask& q);
  friend bool operator==(const ParabolicRootSet& a, const ParabolicRootSet& b) { return a.q == b.q; }
};

/// t-regular subalgebra a + sum of root spaces over V, with a in Cartan
/// coordinates. Also used for arbitrary t-stable subspaces (joins of
/// subalgebras), in which case closure is not assumed.
class RegularSubalgebra {
 public:
  RegularSubalgebra(const RootSystem& sys, Subspace<GaussRational> toral, RootMask roots);

  static RegularSubalgebra zero(const RootSystem& sys);
  static RegularSubalgebra whole(const RootSystem& sys);
  /// Full Cartan plus the given roots.
  static RegularSubalgebra with_cartan(const RootSystem& sys, RootMask roots);
  static RegularSubalgebra from_parabolic(const RootSystem& sys, const ParabolicRootSet& p);

  const RootSystem& system() const { return *sys_; }
  const Subspace<GaussRational>& toral() const { return toral_; }
  const RootMask& roots() const { return roots_; }
  Eigen::Index dim() const { return toral_.dim() + static_cast<Eigen::Index>(roots_.count()); }

  /// Bracket closed: V closed, toral part inside the Cartan, and H_alpha in
  /// the toral part whenever +-alpha both lie in V.
  bool is_subalgebra() const;
  /// Image under the compact conjugation: (conj a, -V).
  RegularSubalgebra conj() const;
  bool contains(const RegularSubalgebra& o) const;

  friend bool operator==(const RegularSubalgebra& a, const RegularSubalgebra& b) {
    return a.roots_ == b.roots_ && a.toral_ == b.toral_;
  }
  friend bool operator!=(const RegularSubalgebra& a, const RegularSubalgebra& b) { return !(a == b); }

 private:
  const RootSystem* sys_;
  Subspace<GaussRational> toral_;
  RootMask roots_;
};

RegularSubalgebra meet(const RegularSubalgebra& a, const RegularSubalgebra& b);
RegularSubalgebra join(const RegularSubalgebra& a, const RegularSubalgebra& b);

bool is_closed(const RootSystem& sys, const RootMask& s);
/// Smallest closed superset.
RootMask closed_closure(const RootSystem& sys, const RootMask& s);
bool is_parabolic(const RootSystem& sys, const RootMask& q);

/// Q = {alpha : alpha(A) >= 0} for a rational covector in e coordinates.
ParabolicRootSet parabolic_from_grading(const RootSystem& sys, const std::vector<mpq_class>& grading);
/// Crosses are 1-based simple-root indices.
ParabolicRootSet parabolic_from_crosses(const RootSystem& sys, const std::vector<int>& crosses);
/// Grading element realizing the crosses: the sum of the crossed fundamental
/// coweights, in e coordinates.
std::vector<mpq_class> crosses_grading(const RootSystem& sys, const std::vector<int>& crosses);

struct NrLevi {
  RootMask nr;
  RegularSubalgebra levi;
};
NrLevi nr_and_levi(const RegularSubalgebra& v);

/// {X : [X, v] in v}; always contains the full Cartan.
RegularSubalgebra normalizer(const RegularSubalgebra& v);
/// Normalizer of the nilpotent algebra spanned by the root spaces of N.
RegularSubalgebra normalizer_regular(const RootSystem& sys, const RootMask& n);

/// Smallest subalgebra containing v.
RegularSubalgebra lie_closure_regular(const RegularSubalgebra& v);
/// Smallest ad(l)-invariant subspace containing x.
RegularSubalgebra module_closure_regular(const RegularSubalgebra& x, const RegularSubalgebra& l);

/// Every parabolic root set: the Weyl orbits of the standard ones.
std::vector<ParabolicRootSet> enumerate_parabolics(const RootSystem& sys, int rank_cap = 6);

/// Inclusion-maximal subsets of the candidates whose members are pairwise
/// strongly orthogonal (alpha +- beta not roots). Roots are taken up to sign,
/// so alpha and -alpha never share a set.
std::vector<RootMask> strongly_orthogonal_maximal_sets(const RootSystem& sys, const RootMask& candidates);

/// True when some Weyl group element maps a onto b.
bool weyl_conjugate(const RootSystem& sys, const RootMask& a, const RootMask& b);

/// Total order on root sets: the first root (in root order) on which the sets
/// differ decides, and the set containing it comes first. Used for report order.
bool mask_less(const RootMask& a, const RootMask& b);

}  // namespace crlie
