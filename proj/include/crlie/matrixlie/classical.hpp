#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "crlie/matrixlie/ambient.hpp"
#include "crlie/rootsys/regular.hpp"

namespace crlie {

using AmbientPtr = std::shared_ptr<const AmbientAlgebra>;

/// Matrix unit E_rc (0-based).
DenseMatrix matrix_unit(Eigen::Index n, Eigen::Index r, Eigen::Index c);
/// 1 on the antidiagonal.
DenseMatrix antidiagonal(Eigen::Index n);
/// Block sum of m copies of [[0, 1], [-1, 0]].
DenseMatrix symplectic_pairs(Eigen::Index m);

/// Subspace of gl_n cut out by linear conditions given as a function
/// X -> list of scalars that must vanish.
AmbientPtr make_ambient(const std::string& label, Eigen::Index n,
                        const std::function<std::vector<GaussRational>(const DenseMatrix&)>& conditions);

AmbientPtr make_gl(Eigen::Index n);
AmbientPtr make_sl(Eigen::Index n);
/// {X : X^T S + S X = 0} for a symmetric S.
AmbientPtr make_so(const DenseMatrix& s, const std::string& label);
/// {X : X^T J + J X = 0} for an antisymmetric J.
AmbientPtr make_sp(const DenseMatrix& j, const std::string& label);
/// Matrices commuting with every matrix in the list, intersected with base.
AmbientPtr make_commutant(const std::string& label, const AmbientAlgebra& base, const std::vector<DenseMatrix>& with);

/// Realization of a classical root system on the diagonal Cartan of a
/// matrix algebra: entry (r, c) carries the root w(r) - w(c). Cartan
/// coordinates H map to i*diag(w(r).H), which makes the compact conjugation
/// act on H by entrywise conjugation.
class WeightRealization {
 public:
  WeightRealization(AmbientPtr algebra, std::shared_ptr<const RootSystem> roots, std::vector<Root> weights);

  const AmbientPtr& algebra() const { return algebra_; }
  const RootSystem& roots() const { return *roots_; }
  const std::shared_ptr<const RootSystem>& roots_ptr() const { return roots_; }
  const std::vector<Root>& weights() const { return weights_; }

  Vector toral(const Vector& h) const;
  /// Spanning vector of the root space (one-dimensional).
  const Vector& root_vector(int alpha) const { return root_vectors_[static_cast<std::size_t>(alpha)]; }
  /// Flattened root space of a root in gl_n coordinates: span of E_rc with
  /// w(r) - w(c) = alpha.
  Space entry_space(int alpha) const;
  Subalg cartan() const;
  Subalg embed(const RegularSubalgebra& v) const;
  /// Inverse of embed for subspaces stable under the Cartan.
  std::optional<RegularSubalgebra> to_regular(const Subalg& v) const;

 private:
  AmbientPtr algebra_;
  std::shared_ptr<const RootSystem> roots_;
  std::vector<Root> weights_;
  std::vector<Vector> root_vectors_;
  EchelonBuilder<GaussRational> toral_solver_;
};

/// sl_n on the type A_{n-1} system, weights e_r.
WeightRealization realize_sl(Eigen::Index n);
/// so(S) with S antidiagonal: B_m for n = 2m+1, D_m for n = 2m.
WeightRealization realize_so(Eigen::Index n);
/// sp(J) with J = symplectic_pairs(m), type C_m.
WeightRealization realize_sp(Eigen::Index m);

}  // namespace crlie
