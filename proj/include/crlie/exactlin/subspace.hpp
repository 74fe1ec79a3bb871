#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crlie/exactlin/dense.hpp"

namespace crlie {

template <class Scalar>
class Subspace;

/// Incremental reduced row echelon form. Rows stay fully reduced and sorted
/// by pivot, so membership tests are a single sweep.
///
/// Elimination is plain Gauss-Jordan with zero skipping: the inputs are sparse
/// and the scalar type normalizes itself, so fraction-free updates would only
/// inflate every touched row.
template <class Scalar>
class EchelonBuilder {
 public:
  explicit EchelonBuilder(Eigen::Index ambient_dim) : n_(ambient_dim) {}

  Eigen::Index ambient_dim() const { return n_; }
  Eigen::Index rank() const { return static_cast<Eigen::Index>(rows_.size()); }
  bool full() const { return rank() == n_; }
  const std::vector<Vec<Scalar>>& rows() const { return rows_; }
  const std::vector<Eigen::Index>& pivots() const { return pivots_; }

  /// v minus its projection along the pivot coordinates.
  void reduce(Vec<Scalar>& v) const {
    check(v);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Eigen::Index p = pivots_[r];
      if (v(p).is_zero()) continue;
      const Scalar f = v(p);
      for (Eigen::Index j : support_[r]) v(j) -= f * rows_[r](j);
    }
  }

  /// Adds v to the span; returns whether the rank grew.
  bool insert(Vec<Scalar> v) {
    reduce(v);
    Eigen::Index lead = -1;
    for (Eigen::Index j = 0; j < n_; ++j)
      if (!v(j).is_zero()) {
        lead = j;
        break;
      }
    if (lead < 0) return false;
    if (!v(lead).is_one()) {
      const Scalar inv = v(lead).inverse();
      for (Eigen::Index j = lead; j < n_; ++j)
        if (!v(j).is_zero()) v(j) *= inv;
    }
    std::vector<Eigen::Index> supp = support_of(v);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (rows_[r](lead).is_zero()) continue;
      const Scalar f = rows_[r](lead);
      for (Eigen::Index j : supp) rows_[r](j) -= f * v(j);
      support_[r] = support_of(rows_[r]);
    }
    auto at = std::lower_bound(pivots_.begin(), pivots_.end(), lead) - pivots_.begin();
    pivots_.insert(pivots_.begin() + at, lead);
    rows_.insert(rows_.begin() + at, std::move(v));
    support_.insert(support_.begin() + at, std::move(supp));
    return true;
  }

  template <class Range>
  void insert_all(const Range& vectors) {
    for (const auto& v : vectors) {
      if (full()) {
        check(v);
        continue;
      }
      insert(v);
    }
  }

  Subspace<Scalar> finish() const;

 private:
  void check(const Vec<Scalar>& v) const {
    if (v.size() != n_) throw DimensionError("vector length differs from ambient dimension");
  }

  static std::vector<Eigen::Index> support_of(const Vec<Scalar>& v) {
    std::vector<Eigen::Index> s;
    for (Eigen::Index j = 0; j < v.size(); ++j)
      if (!v(j).is_zero()) s.push_back(j);
    return s;
  }

  Eigen::Index n_;
  std::vector<Vec<Scalar>> rows_;
  std::vector<Eigen::Index> pivots_;
  std::vector<std::vector<Eigen::Index>> support_;
};

/// Linear subspace of Scalar^n held in canonical RREF, so == is subspace
/// equality.
template <class Scalar>
class Subspace {
 public:
  Subspace() : Subspace(0) {}
  explicit Subspace(Eigen::Index ambient_dim) : builder_(ambient_dim) {}

  static Subspace zero(Eigen::Index n) { return Subspace(n); }
  static Subspace full(Eigen::Index n) {
    EchelonBuilder<Scalar> b(n);
    for (Eigen::Index j = 0; j < n; ++j) {
      Vec<Scalar> e = zero_vector<Scalar>(n);
      e(j) = Scalar(1);
      b.insert(std::move(e));
    }
    return b.finish();
  }
  template <class Range>
  static Subspace span(Eigen::Index n, const Range& vectors) {
    EchelonBuilder<Scalar> b(n);
    b.insert_all(vectors);
    return b.finish();
  }
  /// Span of the rows of m.
  static Subspace row_space(const Mat<Scalar>& m) {
    EchelonBuilder<Scalar> b(m.cols());
    for (Eigen::Index i = 0; i < m.rows() && !b.full(); ++i) b.insert(m.row(i).transpose());
    return b.finish();
  }

  Eigen::Index ambient_dim() const { return builder_.ambient_dim(); }
  Eigen::Index dim() const { return builder_.rank(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return builder_.full(); }

  const std::vector<Vec<Scalar>>& vectors() const { return builder_.rows(); }
  const Vec<Scalar>& vector(Eigen::Index i) const { return builder_.rows()[static_cast<std::size_t>(i)]; }
  const std::vector<Eigen::Index>& pivots() const { return builder_.pivots(); }

  /// Basis as the rows of an RREF matrix.
  Mat<Scalar> basis() const {
    Mat<Scalar> m = zeros<Scalar>(dim(), ambient_dim());
    for (Eigen::Index i = 0; i < dim(); ++i) m.row(i) = vector(i).transpose();
    return m;
  }

  Vec<Scalar> residual(Vec<Scalar> v) const {
    builder_.reduce(v);
    return v;
  }
  bool contains(const Vec<Scalar>& v) const { return crlie::is_zero(residual(v)); }
  bool contains(const Subspace& o) const {
    if (o.ambient_dim() != ambient_dim()) throw DimensionError("subspaces live in different ambients");
    if (o.dim() > dim()) return false;
    for (const auto& v : o.vectors())
      if (!contains(v)) return false;
    return true;
  }

  /// Coefficients of v in the RREF basis, or nullopt when v is outside.
  std::optional<Vec<Scalar>> coordinates(const Vec<Scalar>& v) const {
    if (!contains(v)) return std::nullopt;
    Vec<Scalar> c(dim());
    for (Eigen::Index i = 0; i < dim(); ++i) c(i) = v(pivots()[static_cast<std::size_t>(i)]);
    return c;
  }

  /// Inverse of coordinates().
  Vec<Scalar> combine(const Vec<Scalar>& c) const {
    if (c.size() != dim()) throw DimensionError("coefficient vector length differs from dimension");
    Vec<Scalar> v = zero_vector<Scalar>(ambient_dim());
    for (Eigen::Index i = 0; i < dim(); ++i) {
      if (c(i).is_zero()) continue;
      const auto& row = vector(i);
      for (Eigen::Index j = 0; j < ambient_dim(); ++j)
        if (!row(j).is_zero()) v(j) += c(i) * row(j);
    }
    return v;
  }

  /// Entrywise conjugate subspace.
  Subspace conj() const {
    std::vector<Vec<Scalar>> rows;
    rows.reserve(vectors().size());
    for (const auto& v : vectors()) rows.push_back(entrywise_conj(v));
    return span(ambient_dim(), rows);
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim() || a.dim() != b.dim() || a.pivots() != b.pivots()) return false;
    for (Eigen::Index i = 0; i < a.dim(); ++i)
      if (a.vector(i) != b.vector(i)) return false;
    return true;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

  std::string str() const {
    std::string s = "[";
    for (Eigen::Index i = 0; i < dim(); ++i) {
      if (i) s += "; ";
      for (Eigen::Index j = 0; j < ambient_dim(); ++j) {
        if (j) s += ' ';
        s += vector(i)(j).str();
      }
    }
    return s + "]";
  }

 private:
  friend class EchelonBuilder<Scalar>;
  explicit Subspace(EchelonBuilder<Scalar> b) : builder_(std::move(b)) {}

  EchelonBuilder<Scalar> builder_;
};

template <class Scalar>
Subspace<Scalar> EchelonBuilder<Scalar>::finish() const {
  return Subspace<Scalar>(*this);
}

/// Unique RREF basis of the span of the given vectors.
template <class Scalar>
Subspace<Scalar> canonicalize(const std::vector<Vec<Scalar>>& vectors) {
  if (vectors.empty()) return Subspace<Scalar>::zero(0);
  return Subspace<Scalar>::span(vectors.front().size(), vectors);
}

template <class Scalar>
Subspace<Scalar> canonicalize(Eigen::Index ambient_dim, const std::vector<Vec<Scalar>>& vectors) {
  return Subspace<Scalar>::span(ambient_dim, vectors);
}

template <class Scalar>
Subspace<Scalar> sum(const Subspace<Scalar>& a, const Subspace<Scalar>& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("sum: ambient dimensions differ");
  if (a.dim() < b.dim()) return sum(b, a);
  if (a.contains(b)) return a;
  EchelonBuilder<Scalar> e(a.ambient_dim());
  e.insert_all(a.vectors());
  e.insert_all(b.vectors());
  return e.finish();
}

/// Null space {x : m x = 0}.
template <class Scalar>
Subspace<Scalar> kernel(const Mat<Scalar>& m) {
  const Eigen::Index n = m.cols();
  Subspace<Scalar> rs = Subspace<Scalar>::row_space(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Eigen::Index p : rs.pivots()) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Vec<Scalar>> basis;
  for (Eigen::Index f = 0; f < n; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    Vec<Scalar> x = zero_vector<Scalar>(n);
    x(f) = Scalar(1);
    for (Eigen::Index r = 0; r < rs.dim(); ++r) {
      const Scalar& c = rs.vector(r)(f);
      if (!c.is_zero()) x(rs.pivots()[static_cast<std::size_t>(r)]) = -c;
    }
    basis.push_back(std::move(x));
  }
  return Subspace<Scalar>::span(n, basis);
}

/// Kernel of the linear map whose columns are the given images:
/// all c with sum_i c_i images[i] = 0.
template <class Scalar>
Subspace<Scalar> dependency_space(Eigen::Index image_dim, const std::vector<Vec<Scalar>>& images) {
  Mat<Scalar> m = zeros<Scalar>(image_dim, static_cast<Eigen::Index>(images.size()));
  for (std::size_t i = 0; i < images.size(); ++i) m.col(static_cast<Eigen::Index>(i)) = images[i];
  return kernel(m);
}

template <class Scalar>
Subspace<Scalar> intersection(const Subspace<Scalar>& a, const Subspace<Scalar>& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("intersection: ambient dimensions differ");
  if (a.dim() > b.dim()) return intersection(b, a);
  if (b.contains(a)) return a;
  std::vector<Vec<Scalar>> residuals;
  residuals.reserve(a.vectors().size());
  for (const auto& v : a.vectors()) residuals.push_back(b.residual(v));
  Subspace<Scalar> deps = dependency_space(a.ambient_dim(), residuals);
  std::vector<Vec<Scalar>> out;
  for (const auto& c : deps.vectors()) out.push_back(a.combine(c));
  return Subspace<Scalar>::span(a.ambient_dim(), out);
}

template <class Scalar>
std::pair<Subspace<Scalar>, Subspace<Scalar>> meet_join(const Subspace<Scalar>& a, const Subspace<Scalar>& b) {
  return {intersection(a, b), sum(a, b)};
}

/// Coefficients expressing v in the RREF basis of s, if v lies in s.
template <class Scalar>
std::optional<Vec<Scalar>> solve_membership(const Vec<Scalar>& v, const Subspace<Scalar>& s) {
  return s.coordinates(v);
}

}  // namespace crlie
