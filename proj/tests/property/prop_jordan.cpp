#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crlie/exactlin/polynomial.hpp"
#include "crlie/matrixlie/ops.hpp"
#include "../support/gen.hpp"

using namespace crlie;
using Q = GaussRational;

namespace {

constexpr int kCases = 250;

bool nilpotent(const DenseMatrix& x) {
  DenseMatrix p = x;
  for (Eigen::Index k = 1; k < x.rows(); ++k) p = multiply(p, x);
  return is_zero(p);
}

bool semisimple(const DenseMatrix& x) {
  const auto m = min_poly(x);
  return squarefree_part(m).degree() == m.degree();
}

void check_invariants(const DenseMatrix& x, const JCDecomposition& jc) {
  CHECK(jc.semisimple + jc.nilpotent == x);
  CHECK(is_zero(commutator(jc.semisimple, jc.nilpotent)));
  CHECK(is_zero(commutator(jc.semisimple, x)));
  CHECK(nilpotent(jc.nilpotent));
  CHECK(semisimple(jc.semisimple));
}

}  // namespace

TEST_CASE("conjugated Jordan forms split as built") {
  gen::Rng g(201);
  for (int t = 0; t < kCases; ++t) {
    const Eigen::Index n = g.between(1, 5);
    // eigenvalues from a small pool, so blocks repeat
    std::vector<Q> pool;
    for (int k = g.between(1, 3); k > 0; --k) pool.push_back(Q(g.between(-2, 2), 1, g.between(-1, 1), 1));
    DenseMatrix d = zeros<Q>(n, n);
    for (Eigen::Index i = 0; i < n; ++i) d(i, i) = pool[static_cast<std::size_t>(g.below(static_cast<int>(pool.size())))];
    DenseMatrix nil = zeros<Q>(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = i + 1; j < n; ++j)
        if (d(i, i) == d(j, j) && g.chance(1, 2)) nil(i, j) = gen::scalar(g);
    const DenseMatrix p = gen::unimodular(g, n);
    const DenseMatrix pi = gen::inverse(p);
    const DenseMatrix xs = multiply(multiply(p, d), pi);
    const DenseMatrix xn = multiply(multiply(p, nil), pi);
    const DenseMatrix x = xs + xn;
    INFO("case " << t);
    const auto jc = jordan_chevalley(x);
    CHECK(jc.semisimple == xs);
    CHECK(jc.nilpotent == xn);
    check_invariants(x, jc);
  }
}

TEST_CASE("random matrices satisfy the invariants") {
  gen::Rng g(202);
  for (int t = 0; t < kCases; ++t) {
    const Eigen::Index n = g.between(1, 4);
    const DenseMatrix x = gen::matrix(g, n, 2);
    INFO("case " << t);
    const auto jc = jordan_chevalley(x);
    check_invariants(x, jc);
    // idempotent on the parts
    CHECK(jordan_chevalley(jc.semisimple).nilpotent == zeros<Q>(n, n));
    CHECK(jordan_chevalley(jc.nilpotent).semisimple == zeros<Q>(n, n));
  }
}

TEST_CASE("decomposition commutes with conjugation by invertibles") {
  gen::Rng g(203);
  for (int t = 0; t < kCases; ++t) {
    const Eigen::Index n = g.between(2, 4);
    const DenseMatrix x = gen::matrix(g, n, 2);
    const DenseMatrix p = gen::unimodular(g, n);
    const DenseMatrix pi = gen::inverse(p);
    const auto a = jordan_chevalley(x);
    const auto b = jordan_chevalley(multiply(multiply(p, x), pi));
    INFO("case " << t);
    CHECK(b.semisimple == multiply(multiply(p, a.semisimple), pi));
    CHECK(b.nilpotent == multiply(multiply(p, a.nilpotent), pi));
  }
}
