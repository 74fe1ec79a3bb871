#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "crlie/exactlin/dense.hpp"
#include "crlie/exactlin/subspace.hpp"

namespace crlie {

using Space = Subspace<GaussRational>;

/// Sparse coordinate vector: (index, coefficient) pairs with nonzero
/// coefficients.
using SparseVector = std::vector<std::pair<Eigen::Index, GaussRational>>;

/// Matrix Lie algebra k in gl_n(Q(i)) stable under the compact conjugation
/// X -> -conj(X)^T.
///
/// The basis is the RREF basis of the flattened spanning matrices, so the
/// coordinates of a matrix in k are its entries at the pivot positions.
/// Structure constants and the conjugation are tabulated once.
class AmbientAlgebra {
 public:
  /// Throws VerificationError when the span is not bracket closed or not
  /// stable under the conjugation.
  AmbientAlgebra(std::string label, Eigen::Index n, const std::vector<DenseMatrix>& spanning);

  const std::string& label() const { return label_; }
  /// Matrix size.
  Eigen::Index n() const { return n_; }
  Eigen::Index dim() const { return flat_.dim(); }
  /// k as a subspace of the flattened n x n matrices.
  const Space& flat() const { return flat_; }

  const DenseMatrix& basis_matrix(Eigen::Index i) const { return basis_[static_cast<std::size_t>(i)]; }
  DenseMatrix matrix(const Vector& coords) const;
  std::optional<Vector> try_coords(const DenseMatrix& m) const;
  /// Throws DimensionError when m lies outside k.
  Vector coords(const DenseMatrix& m) const;
  Vector unit(Eigen::Index i) const;

  Vector bracket(const Vector& x, const Vector& y) const;
  /// Coordinates of [b_i, b_j].
  const SparseVector& structure(Eigen::Index i, Eigen::Index j) const {
    return sc_[static_cast<std::size_t>(i * dim() + j)];
  }
  /// Compact conjugation in coordinates (antilinear).
  Vector sigma(const Vector& x) const;
  /// tr(XY) of the defining representation.
  GaussRational trace_form(const Vector& x, const Vector& y) const;

  /// Subspace of k-coordinates from a flattened subspace contained in k.
  Space from_flat(const Space& s) const;
  /// Flattened image of a coordinate subspace.
  Space to_flat(const Space& s) const;

 private:
  std::string label_;
  Eigen::Index n_;
  Space flat_;
  std::vector<DenseMatrix> basis_;
  std::vector<SparseVector> sc_;
  std::vector<Vector> sigma_;
};

/// Subspace of an ambient algebra, in ambient coordinates. Used both for
/// subalgebras and for plain subspaces such as sums of subalgebras.
class Subalg {
 public:
  Subalg(std::shared_ptr<const AmbientAlgebra> ambient, Space space);

  static Subalg zero(std::shared_ptr<const AmbientAlgebra> ambient);
  static Subalg whole(std::shared_ptr<const AmbientAlgebra> ambient);
  static Subalg span(std::shared_ptr<const AmbientAlgebra> ambient, const std::vector<DenseMatrix>& matrices);

  const AmbientAlgebra& ambient() const { return *ambient_; }
  const std::shared_ptr<const AmbientAlgebra>& ambient_ptr() const { return ambient_; }
  const Space& space() const { return space_; }
  Eigen::Index dim() const { return space_.dim(); }
  const std::vector<Vector>& vectors() const { return space_.vectors(); }
  std::vector<DenseMatrix> matrices() const;

  bool contains(const Subalg& o) const;
  bool contains(const Vector& x) const { return space_.contains(x); }
  bool contains_matrix(const DenseMatrix& m) const;
  bool is_bracket_closed() const;

  friend bool operator==(const Subalg& a, const Subalg& b) {
    return a.ambient_.get() == b.ambient_.get() && a.space_ == b.space_;
  }
  friend bool operator!=(const Subalg& a, const Subalg& b) { return !(a == b); }

 private:
  std::shared_ptr<const AmbientAlgebra> ambient_;
  Space space_;
};

Subalg meet(const Subalg& a, const Subalg& b);
Subalg join(const Subalg& a, const Subalg& b);
/// Image under the compact conjugation.
Subalg conj(const Subalg& a);

}  // namespace crlie
