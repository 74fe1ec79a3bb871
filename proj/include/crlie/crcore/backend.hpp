#pragma once

#include <cstdint>
#include <memory>

#include "crlie/matrixlie/ambient.hpp"
#include "crlie/matrixlie/ops.hpp"
#include "crlie/rootsys/regular.hpp"

namespace crlie {

/// Backends give the CR, regularization and fibration layers one vocabulary
/// over two representations of subspaces of k:
///
///   Space whole(), zero()
///   Space conj(s), meet(a, b), join(a, b)
///   Eigen::Index dim(s); bool contains(a, b)  // b inside a
///   Space lie_closure(s), module_closure(x, l), derived(s)
///   Space nr(s), normalizer(s)
///   Space maximal_torus(c), centralizer_in(c, s)
///   Eigen::Index rank(c)                      // c conjugation stable
///
/// Spaces compare with ==.

/// Subalgebras of a matrix algebra.
class MatrixBackend {
 public:
  using Space = Subalg;

  explicit MatrixBackend(std::shared_ptr<const AmbientAlgebra> ambient, std::uint64_t seed = 0x5eed)
      : ambient_(std::move(ambient)), seed_(seed) {}

  const std::shared_ptr<const AmbientAlgebra>& ambient() const { return ambient_; }
  std::uint64_t seed() const { return seed_; }

  Space whole() const { return Subalg::whole(ambient_); }
  Space zero() const { return Subalg::zero(ambient_); }
  Space conj(const Space& s) const { return crlie::conj(s); }
  Space meet(const Space& a, const Space& b) const { return crlie::meet(a, b); }
  Space join(const Space& a, const Space& b) const { return crlie::join(a, b); }
  Eigen::Index dim(const Space& s) const { return s.dim(); }
  bool contains(const Space& a, const Space& b) const { return a.contains(b); }
  Space lie_closure(const Space& s) const { return bracket_closure(s); }
  Space module_closure(const Space& x, const Space& l) const { return crlie::module_closure(x, l); }
  Space derived(const Space& s) const { return crlie::derived(s); }
  Space nr(const Space& s) const { return nilradical_nr(s); }
  Space normalizer(const Space& s) const { return crlie::normalizer(s); }
  Space maximal_torus(const Space& c) const { return crlie::maximal_torus(c, seed_); }
  Space centralizer_in(const Space& c, const Space& s) const {
    Space out = c;
    for (const auto& x : s.vectors()) out = centralizer_within(out, x);
    return out;
  }
  Eigen::Index rank(const Space& c) const { return maximal_torus(c).dim(); }
  bool is_subalgebra(const Space& s) const { return s.is_bracket_closed(); }

 private:
  std::shared_ptr<const AmbientAlgebra> ambient_;
  std::uint64_t seed_;
};

/// t-stable subspaces of k described by a root system.
class RegularBackend {
 public:
  using Space = RegularSubalgebra;

  explicit RegularBackend(std::shared_ptr<const RootSystem> sys) : sys_(std::move(sys)) {}

  const RootSystem& system() const { return *sys_; }
  const std::shared_ptr<const RootSystem>& system_ptr() const { return sys_; }

  Space whole() const { return RegularSubalgebra::whole(*sys_); }
  Space zero() const { return RegularSubalgebra::zero(*sys_); }
  Space conj(const Space& s) const { return s.conj(); }
  Space meet(const Space& a, const Space& b) const { return crlie::meet(a, b); }
  Space join(const Space& a, const Space& b) const { return crlie::join(a, b); }
  Eigen::Index dim(const Space& s) const { return s.dim(); }
  bool contains(const Space& a, const Space& b) const { return a.contains(b); }
  Space lie_closure(const Space& s) const { return lie_closure_regular(s); }
  Space module_closure(const Space& x, const Space& l) const { return module_closure_regular(x, l); }
  Space derived(const Space& s) const;
  Space nr(const Space& s) const { return {*sys_, crlie::Space::zero(sys_->coord_dim()), nr_and_levi(s).nr}; }
  Space normalizer(const Space& s) const { return crlie::normalizer(s); }
  /// The toral part of a reductive regular subalgebra is a Cartan subalgebra.
  Space maximal_torus(const Space& c) const;
  /// Centralizer in c of a toral subspace s.
  Space centralizer_in(const Space& c, const Space& s) const;
  Eigen::Index rank(const Space& c) const { return maximal_torus(c).dim(); }
  bool is_subalgebra(const Space& s) const { return s.is_subalgebra(); }

 private:
  std::shared_ptr<const RootSystem> sys_;
};

}  // namespace crlie
