#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crlie/exactlin/dense.hpp"
#include "crlie/exactlin/gauss_rational.hpp"
#include "crlie/exactlin/polynomial.hpp"
#include "crlie/exactlin/subspace.hpp"

using namespace crlie;
using Q = GaussRational;
using Space = Subspace<Q>;
using Poly = Polynomial<Q>;

namespace {

Vector vec(std::initializer_list<Q> xs) {
  Vector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index k = 0;
  for (const auto& x : xs) v(k++) = x;
  return v;
}

DenseMatrix mat(int n, std::initializer_list<Q> xs) {
  DenseMatrix m(n, n);
  auto it = xs.begin();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = *it++;
  return m;
}

}  // namespace

TEST_CASE("gaussian rationals: arithmetic and text") {
  Q a(1, 2, -3, 1);
  CHECK(a.str() == "1/2-3i");
  CHECK(Q::parse("1/2-3i") == a);
  CHECK(Q::parse(" 1/2 - 3*i ") == a);
  CHECK(Q::parse("-i") == -Q::i());
  CHECK(Q::parse("2/3i").str() == "2/3i");
  CHECK(Q::parse("-7/4") == Q(mpq_class(-7, 4)));
  CHECK((Q::i() * Q::i()) == Q(-1));
  CHECK(a * a.inverse() == Q(1));
  CHECK(conj(conj(a)) == a);
  CHECK(conj(a * Q::i()) == conj(a) * conj(Q::i()));
  CHECK_THROWS_AS(Q(0).inverse(), std::domain_error);
  CHECK_THROWS_AS(Q::parse("1/2x"), std::invalid_argument);
  CHECK_THROWS_AS(Q::parse(""), std::invalid_argument);
}

TEST_CASE("canonicalize collapses dependent rows") {
  Space s = canonicalize<Q>({vec({1, 0}), vec({2, 0})});
  CHECK(s.dim() == 1);
  CHECK(s.vector(0) == vec({1, 0}));
}

TEST_CASE("canonicalize of nothing is the zero subspace") {
  Space s = canonicalize<Q>(3, {});
  CHECK(s.dim() == 0);
  CHECK(s.ambient_dim() == 3);
}

TEST_CASE("a determinant-one pair spans the plane") {
  Space s = canonicalize<Q>({vec({1, Q::i()}), vec({0, 1})});
  CHECK(s.dim() == 2);
  CHECK(s == Space::full(2));
}

TEST_CASE("canonicalize rejects ragged input") {
  CHECK_THROWS_AS(canonicalize<Q>({vec({1, 0}), vec({1, 0, 0})}), DimensionError);
}

TEST_CASE("canonicalize is idempotent") {
  Space s = canonicalize<Q>({vec({1, 2, Q::i()}), vec({0, 3, 1}), vec({1, 5, Q(1) + Q::i()})});
  CHECK(canonicalize<Q>(s.vectors()) == s);
}

TEST_CASE("meet and join of the coordinate axes") {
  Space x = canonicalize<Q>({vec({1, 0})});
  Space y = canonicalize<Q>({vec({0, 1})});
  auto [m, j] = meet_join(x, y);
  CHECK(m.dim() == 0);
  CHECK(j.is_full());
  auto [mm, jj] = meet_join(x, x);
  CHECK(mm == x);
  CHECK(jj == x);
  CHECK_THROWS_AS(meet_join(x, Space::full(3)), DimensionError);
}

TEST_CASE("membership returns coordinates exactly when inside") {
  Space s = canonicalize<Q>({vec({1, 0, 1}), vec({0, 1, Q::i()})});
  auto c = solve_membership(vec({2, 3, Q(2) + Q(0, 1, 3, 1)}), s);
  REQUIRE(c.has_value());
  CHECK(s.combine(*c) == vec({2, 3, Q(2) + Q(0, 1, 3, 1)}));
  CHECK_FALSE(solve_membership(vec({0, 0, 1}), s).has_value());
}

TEST_CASE("kernel annihilates") {
  DenseMatrix m(2, 3);
  m << Q(1), Q(2), Q(3), Q(2), Q(4), Q::i();
  Space k = kernel(m);
  CHECK(k.dim() == 1);
  for (const auto& v : k.vectors()) CHECK(is_zero(m * v));
}

TEST_CASE("minimal polynomials") {
  CHECK(min_poly(identity<Q>(3)) == Poly::linear(Q(1)));
  DenseMatrix j = mat(3, {0, 1, 0, 0, 0, 1, 0, 0, 0});
  CHECK(min_poly(j) == Poly({0, 0, 0, 1}));
  CHECK(min_poly(j).str() == "x^3");
  DenseMatrix r = mat(2, {0, -1, 1, 0});
  Poly p = min_poly(r);
  CHECK(p == Poly({1, 0, 1}));
  CHECK(is_zero(p.evaluate(r)));
  CHECK_THROWS_AS(min_poly(DenseMatrix(2, 3)), DimensionError);
}

TEST_CASE("squarefree part by hand") {
  Poly xm1 = Poly::linear(Q(1));
  Poly xp2 = Poly::linear(Q(-2));
  Poly p = xm1 * xm1 * xp2;
  CHECK(squarefree_part(p) == xm1 * xp2);
  CHECK(gcd(p, p.derivative()) == xm1);
}
