#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "crlie/exactlin/dense.hpp"
#include "crlie/exactlin/subspace.hpp"

namespace crlie {

/// Univariate polynomial, coefficients stored lowest degree first with no
/// trailing zeros. The zero polynomial has an empty coefficient list.
template <class Scalar>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial constant(Scalar a) { return Polynomial({std::move(a)}); }
  static Polynomial x() { return Polynomial({Scalar(0), Scalar(1)}); }
  /// x - root
  static Polynomial linear(const Scalar& root) { return Polynomial({-root, Scalar(1)}); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar coeff(int k) const {
    return k >= 0 && k < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(k)] : Scalar(0);
  }
  const Scalar& leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return c_.back();
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    Scalar inv = leading().inverse();
    std::vector<Scalar> c = c_;
    for (auto& a : c) a *= inv;
    return Polynomial(std::move(c));
  }

  Polynomial derivative() const {
    std::vector<Scalar> d;
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * Scalar(static_cast<long>(k)));
    return Polynomial(std::move(d));
  }

  Scalar operator()(const Scalar& x) const {
    Scalar acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// Horner evaluation at a square matrix.
  Mat<Scalar> evaluate(const Mat<Scalar>& m) const {
    if (m.rows() != m.cols()) throw DimensionError("polynomial evaluation needs a square matrix");
    Mat<Scalar> acc = zeros<Scalar>(m.rows(), m.cols());
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc = multiply(acc, m);
      if (!it->is_zero())
        for (Eigen::Index i = 0; i < m.rows(); ++i) acc(i, i) += *it;
    }
    return acc;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Scalar> c(std::max(a.c_.size(), b.c_.size()), Scalar(0));
    for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] += b.c_[k];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Scalar> c(std::max(a.c_.size(), b.c_.size()), Scalar(0));
    for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] -= b.c_[k];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(c));
  }

  /// Euclidean division: a = q*b + r with deg r < deg b.
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Scalar> r = a.c_;
    const int db = b.degree();
    if (a.degree() < db) return {Polynomial(), a};
    std::vector<Scalar> q(static_cast<std::size_t>(a.degree() - db + 1), Scalar(0));
    const Scalar inv = b.leading().inverse();
    for (int k = a.degree(); k >= db; --k) {
      const Scalar& top = r[static_cast<std::size_t>(k)];
      if (top.is_zero()) continue;
      Scalar f = top * inv;
      for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= f * b.c_[static_cast<std::size_t>(j)];
      q[static_cast<std::size_t>(k - db)] = std::move(f);
    }
    return {Polynomial(std::move(q)), Polynomial(std::move(r))};
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Text such as "x^3 - 2x + 1/2".
  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      const Scalar& a = c_[static_cast<std::size_t>(k)];
      if (a.is_zero()) continue;
      std::string coef = a.str();
      const bool compound = !a.is_real() && sgn(a.re()) != 0;
      bool negative = !compound && coef.front() == '-';
      if (negative) coef.erase(0, 1);
      if (compound) coef = "(" + coef + ")";
      if (!out.empty()) out += negative ? " - " : " + ";
      else if (negative) out += "-";
      if (k == 0) {
        out += coef;
      } else {
        if (coef != "1") out += coef;
        out += k == 1 ? "x" : "x^" + std::to_string(k);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<Scalar> c_;
};

/// Monic gcd.
template <class Scalar>
Polynomial<Scalar> gcd(Polynomial<Scalar> a, Polynomial<Scalar> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// p / gcd(p, p'), monic.
template <class Scalar>
Polynomial<Scalar> squarefree_part(const Polynomial<Scalar>& p) {
  if (p.degree() <= 0) return p.monic();
  return divmod(p, gcd(p, p.derivative())).first.monic();
}

/// Minimal polynomial from the first linear dependence among I, M, M^2, ...
template <class Scalar>
Polynomial<Scalar> min_poly(const Mat<Scalar>& m) {
  if (m.rows() != m.cols()) throw DimensionError("min_poly: matrix not square");
  const Eigen::Index n = m.rows();
  std::vector<Vec<Scalar>> powers;
  Mat<Scalar> p = identity<Scalar>(n);
  for (Eigen::Index k = 0; k <= n; ++k) {
    powers.push_back(flatten(p));
    Subspace<Scalar> deps = dependency_space(n * n, powers);
    if (!deps.is_zero()) {
      // the relation is unique up to scale and involves the newest power
      const Vec<Scalar>& c = deps.vector(0);
      std::vector<Scalar> coeffs(c.data(), c.data() + c.size());
      return Polynomial<Scalar>(std::move(coeffs)).monic();
    }
    p = multiply(p, m);
  }
  throw std::logic_error("min_poly: no dependence found within degree n");
}

/// Distinct rational roots of a polynomial with rational coefficients.
/// Throws std::domain_error on non-real coefficients.
std::vector<mpq_class> rational_roots(const Polynomial<GaussRational>& p);

}  // namespace crlie
