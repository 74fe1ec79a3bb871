#include "crlie/matrixlie/ambient.hpp"

namespace crlie {

using Q = GaussRational;

namespace {

SparseVector sparse(const Vector& v) {
  SparseVector out;
  for (Eigen::Index k = 0; k < v.size(); ++k)
    if (!v(k).is_zero()) out.emplace_back(k, v(k));
  return out;
}

}  // namespace

AmbientAlgebra::AmbientAlgebra(std::string label, Eigen::Index n, const std::vector<DenseMatrix>& spanning)
    : label_(std::move(label)), n_(n), flat_(n * n) {
  std::vector<Vector> flats;
  flats.reserve(spanning.size());
  for (const auto& m : spanning) {
    if (m.rows() != n || m.cols() != n) throw DimensionError("ambient spanning matrix has the wrong size");
    flats.push_back(flatten(m));
  }
  flat_ = Space::span(n * n, flats);
  for (const auto& row : flat_.vectors()) basis_.push_back(unflatten(row, n));

  const auto d = static_cast<std::size_t>(dim());
  sc_.assign(d * d, {});
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      auto c = try_coords(commutator(basis_[i], basis_[j]));
      if (!c) throw VerificationError(label_ + ": spanning set is not closed under brackets");
      sc_[i * d + j] = sparse(*c);
      Vector neg = -*c;
      sc_[j * d + i] = sparse(neg);
    }
  sigma_.reserve(d);
  for (std::size_t i = 0; i < d; ++i) {
    auto c = try_coords(-adjoint_of(basis_[i]));
    if (!c) throw VerificationError(label_ + ": not stable under X -> -conj(X)^T");
    sigma_.push_back(std::move(*c));
  }
}

DenseMatrix AmbientAlgebra::matrix(const Vector& coords) const {
  return unflatten(flat_.combine(coords), n_);
}

std::optional<Vector> AmbientAlgebra::try_coords(const DenseMatrix& m) const {
  if (m.rows() != n_ || m.cols() != n_) throw DimensionError("matrix size differs from the ambient");
  return flat_.coordinates(flatten(m));
}

Vector AmbientAlgebra::coords(const DenseMatrix& m) const {
  auto c = try_coords(m);
  if (!c) throw DimensionError("matrix does not lie in " + label_);
  return *c;
}

Vector AmbientAlgebra::unit(Eigen::Index i) const {
  Vector e = zero_vector<Q>(dim());
  e(i) = Q(1);
  return e;
}

Vector AmbientAlgebra::bracket(const Vector& x, const Vector& y) const {
  const Eigen::Index d = dim();
  if (x.size() != d || y.size() != d) throw DimensionError("bracket: coordinate length differs from dim");
  Vector out = zero_vector<Q>(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    if (x(i).is_zero()) continue;
    for (Eigen::Index j = 0; j < d; ++j) {
      if (y(j).is_zero() || i == j) continue;
      const Q c = x(i) * y(j);
      for (const auto& [k, s] : structure(i, j)) out(k) += c * s;
    }
  }
  return out;
}

Vector AmbientAlgebra::sigma(const Vector& x) const {
  Vector out = zero_vector<Q>(dim());
  for (Eigen::Index i = 0; i < dim(); ++i) {
    if (x(i).is_zero()) continue;
    const Q c = conj(x(i));
    const Vector& s = sigma_[static_cast<std::size_t>(i)];
    for (Eigen::Index k = 0; k < dim(); ++k)
      if (!s(k).is_zero()) out(k) += c * s(k);
  }
  return out;
}

Q AmbientAlgebra::trace_form(const Vector& x, const Vector& y) const {
  return trace_of_product(matrix(x), matrix(y));
}

Space AmbientAlgebra::from_flat(const Space& s) const {
  std::vector<Vector> out;
  out.reserve(s.vectors().size());
  for (const auto& v : s.vectors()) {
    auto c = flat_.coordinates(v);
    if (!c) throw DimensionError("flattened subspace is not contained in " + label_);
    out.push_back(std::move(*c));
  }
  return Space::span(dim(), out);
}

Space AmbientAlgebra::to_flat(const Space& s) const {
  std::vector<Vector> out;
  for (const auto& v : s.vectors()) out.push_back(flat_.combine(v));
  return Space::span(n_ * n_, out);
}

Subalg::Subalg(std::shared_ptr<const AmbientAlgebra> ambient, Space space)
    : ambient_(std::move(ambient)), space_(std::move(space)) {
  if (space_.ambient_dim() != ambient_->dim()) throw DimensionError("subspace does not live in " + ambient_->label());
}

Subalg Subalg::zero(std::shared_ptr<const AmbientAlgebra> ambient) {
  const auto d = ambient->dim();
  return {std::move(ambient), Space::zero(d)};
}

Subalg Subalg::whole(std::shared_ptr<const AmbientAlgebra> ambient) {
  const auto d = ambient->dim();
  return {std::move(ambient), Space::full(d)};
}

Subalg Subalg::span(std::shared_ptr<const AmbientAlgebra> ambient, const std::vector<DenseMatrix>& matrices) {
  std::vector<Vector> c;
  c.reserve(matrices.size());
  for (const auto& m : matrices) c.push_back(ambient->coords(m));
  const auto d = ambient->dim();
  return {std::move(ambient), Space::span(d, c)};
}

std::vector<DenseMatrix> Subalg::matrices() const {
  std::vector<DenseMatrix> out;
  for (const auto& v : vectors()) out.push_back(ambient_->matrix(v));
  return out;
}

bool Subalg::contains(const Subalg& o) const {
  if (ambient_.get() != o.ambient_.get()) throw DimensionError("subalgebras of different ambients");
  return space_.contains(o.space_);
}

bool Subalg::contains_matrix(const DenseMatrix& m) const {
  auto c = ambient_->try_coords(m);
  return c && space_.contains(*c);
}

bool Subalg::is_bracket_closed() const {
  const auto& vs = vectors();
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b)
      if (!space_.contains(ambient_->bracket(vs[a], vs[b]))) return false;
  return true;
}

namespace {

void same_ambient(const Subalg& a, const Subalg& b) {
  if (&a.ambient() != &b.ambient()) throw DimensionError("subalgebras of different ambients");
}

}  // namespace

Subalg meet(const Subalg& a, const Subalg& b) {
  same_ambient(a, b);
  return {a.ambient_ptr(), intersection(a.space(), b.space())};
}

Subalg join(const Subalg& a, const Subalg& b) {
  same_ambient(a, b);
  return {a.ambient_ptr(), sum(a.space(), b.space())};
}

Subalg conj(const Subalg& a) {
  std::vector<Vector> out;
  for (const auto& v : a.vectors()) out.push_back(a.ambient().sigma(v));
  return {a.ambient_ptr(), Space::span(a.ambient().dim(), out)};
}

}  // namespace crlie
