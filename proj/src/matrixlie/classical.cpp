#include "crlie/matrixlie/classical.hpp"

#include <functional>

namespace crlie {

using Q = GaussRational;

DenseMatrix matrix_unit(Eigen::Index n, Eigen::Index r, Eigen::Index c) {
  DenseMatrix e = zeros<Q>(n, n);
  e(r, c) = Q(1);
  return e;
}

DenseMatrix antidiagonal(Eigen::Index n) {
  DenseMatrix s = zeros<Q>(n, n);
  for (Eigen::Index i = 0; i < n; ++i) s(i, n - 1 - i) = Q(1);
  return s;
}

DenseMatrix symplectic_pairs(Eigen::Index m) {
  DenseMatrix j = zeros<Q>(2 * m, 2 * m);
  for (Eigen::Index k = 0; k < m; ++k) {
    j(2 * k, 2 * k + 1) = Q(1);
    j(2 * k + 1, 2 * k) = Q(-1);
  }
  return j;
}

namespace {

Space solution_space(Eigen::Index n, const std::function<std::vector<Q>(const DenseMatrix&)>& conditions) {
  const Eigen::Index nn = n * n;
  std::vector<Vector> cols;
  Eigen::Index rows = 0;
  for (Eigen::Index k = 0; k < nn; ++k) {
    auto c = conditions(matrix_unit(n, k / n, k % n));
    rows = static_cast<Eigen::Index>(c.size());
    Vector v(rows);
    for (Eigen::Index r = 0; r < rows; ++r) v(r) = c[static_cast<std::size_t>(r)];
    cols.push_back(std::move(v));
  }
  return dependency_space(rows, cols);
}

std::vector<DenseMatrix> unflatten_all(const Space& s, Eigen::Index n) {
  std::vector<DenseMatrix> out;
  for (const auto& v : s.vectors()) out.push_back(unflatten(v, n));
  return out;
}

std::vector<Q> entries(const DenseMatrix& m) {
  std::vector<Q> out;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out.push_back(m(i, j));
  return out;
}

}  // namespace

AmbientPtr make_ambient(const std::string& label, Eigen::Index n,
                        const std::function<std::vector<Q>(const DenseMatrix&)>& conditions) {
  return std::make_shared<const AmbientAlgebra>(label, n, unflatten_all(solution_space(n, conditions), n));
}

AmbientPtr make_gl(Eigen::Index n) {
  return make_ambient("gl" + std::to_string(n), n, [](const DenseMatrix&) { return std::vector<Q>{}; });
}

AmbientPtr make_sl(Eigen::Index n) {
  return make_ambient("sl" + std::to_string(n), n, [](const DenseMatrix& x) { return std::vector<Q>{trace(x)}; });
}

AmbientPtr make_so(const DenseMatrix& s, const std::string& label) {
  return make_ambient(label, s.rows(), [&](const DenseMatrix& x) {
    return entries(DenseMatrix(multiply<Q>(x.transpose(), s) + multiply(s, x)));
  });
}

AmbientPtr make_sp(const DenseMatrix& j, const std::string& label) {
  return make_ambient(label, j.rows(), [&](const DenseMatrix& x) {
    return entries(DenseMatrix(multiply<Q>(x.transpose(), j) + multiply(j, x)));
  });
}

AmbientPtr make_commutant(const std::string& label, const AmbientAlgebra& base, const std::vector<DenseMatrix>& with) {
  const Eigen::Index n = base.n();
  Space comm = solution_space(n, [&](const DenseMatrix& x) {
    std::vector<Q> out;
    for (const auto& p : with) {
      auto e = entries(commutator(x, p));
      out.insert(out.end(), e.begin(), e.end());
    }
    return out;
  });
  return std::make_shared<const AmbientAlgebra>(label, n, unflatten_all(intersection(comm, base.flat()), n));
}

WeightRealization::WeightRealization(AmbientPtr algebra, std::shared_ptr<const RootSystem> roots, std::vector<Root> weights)
    : algebra_(std::move(algebra)), roots_(std::move(roots)), weights_(std::move(weights)),
      toral_solver_(algebra_->dim() + roots_->coord_dim()) {
  const Eigen::Index n = algebra_->n();
  if (static_cast<Eigen::Index>(weights_.size()) != n) throw DimensionError("one weight per matrix row is required");
  for (std::size_t a = 0; a < roots_->size(); ++a) {
    Space s = intersection(entry_space(static_cast<int>(a)), algebra_->flat());
    if (s.dim() != 1) throw VerificationError(algebra_->label() + ": root space of " + roots_->format(static_cast<int>(a)) + " is not a line");
    root_vectors_.push_back(*algebra_->flat().coordinates(s.vector(0)));
  }
  const Space& cartan = roots_->full_cartan();
  const Eigen::Index d = algebra_->dim();
  const Eigen::Index m = roots_->coord_dim();
  for (const auto& h : cartan.vectors()) {
    Vector aug = zero_vector<Q>(d + m);
    aug.head(d) = toral(h);
    aug.tail(m) = h;
    toral_solver_.insert(aug);
  }
  // the dimension count certifies that the roots exhaust the off-diagonal part
  if (static_cast<Eigen::Index>(roots_->size()) + cartan.dim() != d)
    throw VerificationError(algebra_->label() + ": Cartan plus root spaces do not span the algebra");
}

Vector WeightRealization::toral(const Vector& h) const {
  const Eigen::Index n = algebra_->n();
  DenseMatrix d = zeros<Q>(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    Q s(0);
    for (std::size_t k = 0; k < weights_[static_cast<std::size_t>(r)].size(); ++k) {
      const int w = weights_[static_cast<std::size_t>(r)][k];
      if (w != 0) s += Q(w) * h(static_cast<Eigen::Index>(k));
    }
    d(r, r) = s * Q::i();
  }
  return algebra_->coords(d);
}

Space WeightRealization::entry_space(int alpha) const {
  const Eigen::Index n = algebra_->n();
  const Root& a = roots_->root(alpha);
  std::vector<Vector> units;
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) {
      bool match = true;
      for (std::size_t k = 0; k < a.size(); ++k)
        if (weights_[static_cast<std::size_t>(r)][k] - weights_[static_cast<std::size_t>(c)][k] != a[k]) match = false;
      if (match) units.push_back(flatten(matrix_unit(n, r, c)));
    }
  return Space::span(n * n, units);
}

Subalg WeightRealization::cartan() const {
  std::vector<Vector> vs;
  for (const auto& h : roots_->full_cartan().vectors()) vs.push_back(toral(h));
  return {algebra_, Space::span(algebra_->dim(), vs)};
}

Subalg WeightRealization::embed(const RegularSubalgebra& v) const {
  std::vector<Vector> vs;
  for (const auto& h : v.toral().vectors()) vs.push_back(toral(h));
  for (int a : roots_->members(v.roots())) vs.push_back(root_vector(a));
  return {algebra_, Space::span(algebra_->dim(), vs)};
}

std::optional<RegularSubalgebra> WeightRealization::to_regular(const Subalg& v) const {
  const Eigen::Index d = algebra_->dim();
  const Eigen::Index m = roots_->coord_dim();
  Subalg t = meet(v, cartan());
  std::vector<Vector> hs;
  for (const auto& x : t.vectors()) {
    Vector aug = zero_vector<Q>(d + m);
    aug.head(d) = x;
    toral_solver_.reduce(aug);
    hs.push_back(-Vector(aug.tail(m)));
  }
  RootMask mask;
  for (std::size_t a = 0; a < roots_->size(); ++a)
    if (v.contains(root_vectors_[a])) mask.set(a);
  RegularSubalgebra out(*roots_, Space::span(m, hs), mask);
  if (out.dim() != v.dim()) return std::nullopt;
  return out;
}

namespace {

Root weight(int dim, int k, int sign) {
  Root r(static_cast<std::size_t>(dim), 0);
  if (k >= 0) r[static_cast<std::size_t>(k)] = sign;
  return r;
}

}  // namespace

WeightRealization realize_sl(Eigen::Index n) {
  auto sys = std::make_shared<const RootSystem>(Family::A, static_cast<int>(n - 1));
  std::vector<Root> w;
  for (Eigen::Index r = 0; r < n; ++r) w.push_back(weight(static_cast<int>(n), static_cast<int>(r), 1));
  return {make_sl(n), sys, w};
}

WeightRealization realize_so(Eigen::Index n) {
  const int m = static_cast<int>(n / 2);
  auto sys = std::make_shared<const RootSystem>(n % 2 ? Family::B : Family::D, m);
  std::vector<Root> w(static_cast<std::size_t>(n));
  for (int i = 0; i < m; ++i) {
    w[static_cast<std::size_t>(i)] = weight(m, i, 1);
    w[static_cast<std::size_t>(n - 1 - i)] = weight(m, i, -1);
  }
  if (n % 2) w[static_cast<std::size_t>(m)] = weight(m, -1, 0);
  return {make_so(antidiagonal(n), "so" + std::to_string(n)), sys, w};
}

WeightRealization realize_sp(Eigen::Index m) {
  auto sys = std::make_shared<const RootSystem>(Family::C, static_cast<int>(m));
  std::vector<Root> w;
  for (int k = 0; k < m; ++k) {
    w.push_back(weight(static_cast<int>(m), k, 1));
    w.push_back(weight(static_cast<int>(m), k, -1));
  }
  return {make_sp(symplectic_pairs(m), "sp" + std::to_string(m)), sys, w};
}

}  // namespace crlie
