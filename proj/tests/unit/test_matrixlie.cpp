#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crlie/matrixlie/classical.hpp"
#include "crlie/matrixlie/ops.hpp"

using namespace crlie;
using Q = GaussRational;

namespace {

DenseMatrix mat(int n, std::initializer_list<Q> xs) {
  DenseMatrix m(n, n);
  auto it = xs.begin();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = *it++;
  return m;
}

DenseMatrix diag(std::initializer_list<Q> xs) {
  const int n = static_cast<int>(xs.size());
  DenseMatrix m = zeros<Q>(n, n);
  int k = 0;
  for (const auto& x : xs) {
    m(k, k) = x;
    ++k;
  }
  return m;
}

/// Upper triangular part of sl_n (the standard Borel).
Subalg borel(const AmbientPtr& sl) {
  std::vector<DenseMatrix> gens;
  const auto n = sl->n();
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = r + 1; c < n; ++c) gens.push_back(matrix_unit(n, r, c));
  for (Eigen::Index r = 0; r + 1 < n; ++r) gens.push_back(matrix_unit(n, r, r) - matrix_unit(n, r + 1, r + 1));
  return Subalg::span(sl, gens);
}

}  // namespace

TEST_CASE("classical ambients have the expected dimensions") {
  CHECK(make_gl(3)->dim() == 9);
  CHECK(make_sl(4)->dim() == 15);
  CHECK(realize_so(7).algebra()->dim() == 21);
  CHECK(realize_so(8).algebra()->dim() == 28);
  CHECK(realize_sp(2).algebra()->dim() == 10);
  CHECK_THROWS_AS(AmbientAlgebra("bad", 2, {matrix_unit(2, 0, 1)}), VerificationError);
  CHECK_THROWS_AS(AmbientAlgebra("bad", 2, {matrix_unit(2, 0, 1), matrix_unit(2, 1, 0)}), VerificationError);
}

TEST_CASE("structure constants reproduce matrix brackets") {
  auto sp = realize_sp(2).algebra();
  for (Eigen::Index i = 0; i < sp->dim(); ++i)
    for (Eigen::Index j = 0; j < sp->dim(); ++j)
      CHECK(sp->matrix(sp->bracket(sp->unit(i), sp->unit(j))) == commutator(sp->basis_matrix(i), sp->basis_matrix(j)));
  Vector x = sp->unit(0) * Q::i() + sp->unit(3);
  CHECK(sp->sigma(sp->sigma(x)) == x);
  CHECK(sp->matrix(sp->sigma(x)) == DenseMatrix(-adjoint_of(sp->matrix(x))));
}

TEST_CASE("bracket closure") {
  auto sl2 = make_sl(2);
  CHECK(bracket_closure(sl2, {matrix_unit(2, 0, 1), matrix_unit(2, 1, 0)}) == Subalg::whole(sl2));
  auto sl3 = make_sl(3);
  Subalg b = borel(sl3);
  CHECK(bracket_closure(b) == b);
  CHECK_THROWS_AS(bracket_closure(sl2, {identity<Q>(2)}), DimensionError);
}

TEST_CASE("normalizers") {
  auto sl4 = make_sl(4);
  CHECK(normalizer(Subalg::whole(sl4)) == Subalg::whole(sl4));
  Subalg b = borel(sl4);
  Subalg n = derived(b);
  CHECK(n.dim() == 6);
  CHECK(normalizer(n) == b);
  CHECK(normalizer(b) == b);
  CHECK(conj(normalizer(n)) == normalizer(conj(n)));
}

TEST_CASE("centralizers") {
  auto sl4 = make_sl(4);
  CHECK(centralizer(Subalg::zero(sl4)) == Subalg::whole(sl4));
  Subalg c = centralizer(sl4, diag({1, 2, 3, -6}));
  CHECK(c.dim() == 3);
  CHECK(is_abelian(c));
}

TEST_CASE("radicals") {
  auto sl4 = make_sl(4);
  Subalg sl2 = bracket_closure(sl4, {matrix_unit(4, 0, 1), matrix_unit(4, 1, 0)});
  CHECK(sl2.dim() == 3);
  CHECK(radical(sl2).dim() == 0);
  Subalg b = borel(sl4);
  CHECK(radical(b) == b);
  Subalg p = bracket_closure(sl4, {matrix_unit(4, 0, 1), matrix_unit(4, 1, 0), matrix_unit(4, 0, 3), diag({1, 1, 1, -3})});
  CHECK(radical(p).dim() == p.dim() - 3);
}

TEST_CASE("nr of parabolics, tori and reductive algebras") {
  auto sl4 = make_sl(4);
  Subalg b = borel(sl4);
  CHECK(nilradical_nr(b) == derived(b));
  Subalg t = centralizer(sl4, diag({1, 2, 3, -6}));
  CHECK(nilradical_nr(t).dim() == 0);
  CHECK(nilradical_nr(Subalg::whole(sl4)).dim() == 0);
  // isotropic toral-plus-nilpotent example where a Lie-level trace test fails
  auto gl2 = make_gl(2);
  Subalg iso = Subalg::span(gl2, {diag({1, Q::i()}), matrix_unit(2, 0, 1)});
  CHECK(nilradical_nr(iso) == Subalg::span(gl2, {matrix_unit(2, 0, 1)}));
  auto gl3 = make_gl(3);
  CHECK(nilradical_nr(Subalg::span(gl3, {identity<Q>(3)})).dim() == 0);
}

TEST_CASE("Jordan-Chevalley decomposition") {
  auto d = jordan_chevalley(diag({1, 2, 2}));
  CHECK(d.semisimple == diag({1, 2, 2}));
  CHECK(is_zero(d.nilpotent));
  DenseMatrix u = mat(3, {0, 1, 5, 0, 0, 1, 0, 0, 0});
  auto e = jordan_chevalley(u);
  CHECK(is_zero(e.semisimple));
  CHECK(e.nilpotent == u);
  auto f = jordan_chevalley(mat(2, {1, 1, 0, 1}));
  CHECK(f.semisimple == identity<Q>(2));
  CHECK(f.nilpotent == matrix_unit(2, 0, 1));
  DenseMatrix g = mat(3, {2, 1, 0, 0, 2, 0, 0, 0, Q::i()});
  auto h = jordan_chevalley(g);
  CHECK(h.semisimple == diag({2, 2, Q::i()}));
  auto again = jordan_chevalley(h.semisimple);
  CHECK(again.semisimple == h.semisimple);
  CHECK(is_zero(again.nilpotent));
}

TEST_CASE("splittable evidence") {
  auto sl3 = make_sl(3);
  auto ev = splittable_evidence(borel(sl3), 20, 7);
  CHECK(ev.pass);
  CHECK(ev.checked == 25);
  auto gl2 = make_gl(2);
  Subalg bad = Subalg::span(gl2, {mat(2, {1, 1, 0, 1})});
  auto ev2 = splittable_evidence(bad, 0, 7);
  CHECK_FALSE(ev2.pass);
  REQUIRE(ev2.witness.has_value());
  CHECK(*ev2.witness == mat(2, {1, 1, 0, 1}));
}

TEST_CASE("maximal tori") {
  auto sl2 = make_sl(2);
  CHECK(maximal_torus(Subalg::whole(sl2), 1).dim() == 1);
  auto sl4 = make_sl(4);
  Subalg t = centralizer(sl4, diag({1, 2, 3, -6}));
  CHECK(maximal_torus(t, 3) == t);
  CHECK(rank_of(Subalg::whole(sl4), 11) == 3);
  CHECK(rank_of(Subalg::whole(realize_so(8).algebra()), 5) == 4);
  CHECK_THROWS_AS(maximal_torus(borel(sl4), 1), VerificationError);
}

TEST_CASE("parabolic from a grading element") {
  auto sl3 = make_sl(3);
  CHECK(parabolic_from_element(sl3, zeros<Q>(3, 3)) == Subalg::whole(sl3));
  Subalg q = parabolic_from_element(sl3, diag({Q(0, 1, 3, 1), Q(0, 1, 1, 1), Q(0, 1, -4, 1)}));
  CHECK(q == borel(sl3));
  Subalg p = parabolic_from_element(sl3, diag({Q::i(), Q::i(), Q(0, 1, -2, 1)}));
  CHECK(p.dim() == 6);
  CHECK(join(p, conj(p)) == Subalg::whole(sl3));
  CHECK(meet(p, conj(p)) == centralizer(sl3, diag({Q::i(), Q::i(), Q(0, 1, -2, 1)})));
  CHECK_THROWS_AS(parabolic_from_element(sl3, diag({1, 1, -2})), DimensionError);
}

TEST_CASE("weight realizations agree with the root tables") {
  for (auto real : {realize_sl(4), realize_so(7), realize_so(8), realize_sp(3)}) {
    const auto& sys = real.roots();
    for (std::size_t a = 0; a < sys.size(); ++a) {
      const Vector& x = real.root_vector(static_cast<int>(a));
      for (const auto& h : sys.full_cartan().vectors()) {
        Vector ad = real.algebra()->bracket(real.toral(h), x);
        CHECK(ad == x * (sys.evaluate(static_cast<int>(a), h) * Q::i()));
      }
      CHECK(Subalg(real.algebra(), Space::span(real.algebra()->dim(), std::vector<Vector>{real.algebra()->sigma(x)}))
                .contains(real.root_vector(sys.negative(static_cast<int>(a)))));
    }
    auto back = real.to_regular(real.embed(RegularSubalgebra::whole(sys)));
    REQUIRE(back.has_value());
    CHECK(*back == RegularSubalgebra::whole(sys));
  }
}
