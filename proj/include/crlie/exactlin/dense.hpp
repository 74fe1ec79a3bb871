#pragma once

#include <Eigen/Core>
#include <optional>
#include <stdexcept>
#include <vector>

#include "crlie/errors.hpp"
#include "crlie/exactlin/gauss_rational.hpp"

namespace crlie {

template <class Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using DenseMatrix = Mat<GaussRational>;
using Vector = Vec<GaussRational>;

template <class Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!m(i, j).is_zero()) return false;
  return true;
}

template <class Scalar>
Mat<Scalar> zeros(Eigen::Index rows, Eigen::Index cols) {
  return Mat<Scalar>::Constant(rows, cols, Scalar(0));
}

template <class Scalar>
Vec<Scalar> zero_vector(Eigen::Index n) {
  return Vec<Scalar>::Constant(n, Scalar(0));
}

template <class Scalar>
Mat<Scalar> identity(Eigen::Index n) {
  Mat<Scalar> m = zeros<Scalar>(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

/// Entrywise complex conjugate.
template <class Derived>
auto entrywise_conj(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  return m.unaryExpr([](const S& x) { return conj(x); }).eval();
}

/// Conjugate transpose.
template <class Derived>
auto adjoint_of(const Eigen::MatrixBase<Derived>& m) {
  return entrywise_conj(m.transpose().eval());
}

/// Sparsity-aware product; Eigen's generic kernel does not skip zeros.
template <class Scalar>
Mat<Scalar> multiply(const Mat<Scalar>& a, const Mat<Scalar>& b) {
  if (a.cols() != b.rows()) throw DimensionError("multiply: inner dimensions differ");
  Mat<Scalar> c = zeros<Scalar>(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
    }
  return c;
}

template <class Scalar>
Mat<Scalar> commutator(const Mat<Scalar>& a, const Mat<Scalar>& b) {
  return multiply(a, b) - multiply(b, a);
}

template <class Scalar>
Scalar trace_of_product(const Mat<Scalar>& a, const Mat<Scalar>& b) {
  Scalar t(0);
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k)
      if (!a(i, k).is_zero() && !b(k, i).is_zero()) t += a(i, k) * b(k, i);
  return t;
}

template <class Scalar>
Scalar trace(const Mat<Scalar>& a) {
  Scalar t(0);
  for (Eigen::Index i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

/// Row-major flattening of a matrix into a coordinate vector.
template <class Scalar>
Vec<Scalar> flatten(const Mat<Scalar>& m) {
  Vec<Scalar> v(m.rows() * m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) v(i * m.cols() + j) = m(i, j);
  return v;
}

template <class Scalar>
Mat<Scalar> unflatten(const Vec<Scalar>& v, Eigen::Index n) {
  if (v.size() != n * n) throw DimensionError("unflatten: size mismatch");
  Mat<Scalar> m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = v(i * n + j);
  return m;
}

template <class Scalar>
bool is_nilpotent_matrix(const Mat<Scalar>& x) {
  Mat<Scalar> p = x;
  for (Eigen::Index k = 1; k < x.rows(); ++k) {
    if (is_zero(p)) return true;
    p = multiply(p, x);
  }
  return is_zero(p);
}

/// Exact inverse by Gauss-Jordan; nullopt when singular.
template <class Scalar>
std::optional<Mat<Scalar>> inverse(const Mat<Scalar>& m) {
  if (m.rows() != m.cols()) throw DimensionError("inverse: matrix not square");
  const Eigen::Index n = m.rows();
  Mat<Scalar> a = m;
  Mat<Scalar> inv = identity<Scalar>(n);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = col; r < n; ++r)
      if (!a(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) return std::nullopt;
    if (piv != col) {
      a.row(piv).swap(a.row(col));
      inv.row(piv).swap(inv.row(col));
    }
    Scalar p = a(col, col).inverse();
    for (Eigen::Index j = 0; j < n; ++j) {
      if (!a(col, j).is_zero()) a(col, j) *= p;
      if (!inv(col, j).is_zero()) inv(col, j) *= p;
    }
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      Scalar f = a(r, col);
      for (Eigen::Index j = 0; j < n; ++j) {
        if (!a(col, j).is_zero()) a(r, j) -= f * a(col, j);
        if (!inv(col, j).is_zero()) inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

}  // namespace crlie
