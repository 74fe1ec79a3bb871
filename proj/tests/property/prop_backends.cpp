#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crlie/fibration/fibration.hpp"
#include "../support/gen.hpp"

using namespace crlie;

namespace {

constexpr int kCases = 220;

struct Pair {
  WeightRealization w;
  MatrixBackend mb;
  RegularBackend rb;

  explicit Pair(WeightRealization real) : w(std::move(real)), mb(w.algebra()), rb(w.roots_ptr()) {}
  Subalg up(const RegularSubalgebra& r) const { return w.embed(r); }
};

}  // namespace

TEST_CASE("lattice and closure operations agree") {
  gen::Rng g(501);
  for (int t = 0; t < kCases; ++t) {
    Pair p(gen::realization(g));
    const auto& sys = p.w.roots();
    const auto a = gen::regular(g, sys);
    const auto b = gen::regular(g, sys);
    INFO("case " << t << " " << p.w.algebra()->label());
    CHECK(p.w.to_regular(p.up(a)) == a);
    CHECK(p.up(p.rb.meet(a, b)) == p.mb.meet(p.up(a), p.up(b)));
    CHECK(p.up(p.rb.join(a, b)) == p.mb.join(p.up(a), p.up(b)));
    CHECK(p.up(p.rb.conj(a)) == p.mb.conj(p.up(a)));
    CHECK(p.up(p.rb.lie_closure(p.rb.join(a, b))) == p.mb.lie_closure(p.mb.join(p.up(a), p.up(b))));
    CHECK(p.up(p.rb.module_closure(b, a)) == p.mb.module_closure(p.up(b), p.up(a)));
    CHECK(p.up(p.rb.derived(a)) == p.mb.derived(p.up(a)));
    CHECK(p.up(p.rb.normalizer(a)) == p.mb.normalizer(p.up(a)));
    CHECK(p.up(p.rb.nr(a)) == p.mb.nr(p.up(a)));
    CHECK(p.up(levi_intersection(p.rb, a)) == levi_intersection(p.mb, p.up(a)));
  }
}

TEST_CASE("CR data and regularization agree") {
  gen::Rng g(502);
  for (int t = 0; t < kCases; ++t) {
    Pair p(gen::realization(g));
    const auto r = gen::regular(g, p.w.roots());
    const Subalg m = p.up(r);
    INFO("case " << t << " " << p.w.algebra()->label() << " " << r.roots().to_string());
    CHECK(cr_dims(p.rb, r) == cr_dims(p.mb, m));
    CHECK(is_n_reductive(p.rb, r).holds == is_n_reductive(p.mb, m).holds);
    CHECK(regularity_type(p.rb, r) == regularity_type(p.mb, m));

    const auto rc = regularize_regular(p.rb, r);
    const auto mc = regularize_matrix(p.mb, m);
    REQUIRE(rc.steps.size() == mc.steps.size());
    CHECK(rc.stabilized_at == mc.stabilized_at);
    for (std::size_t i = 0; i < rc.steps.size(); ++i) {
      CHECK(rc.steps[i].dim_v == mc.steps[i].dim_v);
      CHECK(rc.steps[i].dim_nr == mc.steps[i].dim_nr);
      CHECK(p.up(rc.steps[i].v) == mc.steps[i].v);
    }
    CHECK(p.up(rc.result.q) == mc.result.q);
    CHECK(mc.result.certificate.ok());

    const auto rf = classify_map(p.rb, r, rc.result.q).flags;
    const auto mf = classify_map(p.mb, m, mc.result.q).flags;
    CHECK(rf.is_submersion == mf.is_submersion);
    CHECK(rf.is_spread == mf.is_spread);
    CHECK(rf.fibers_totally_real == mf.fibers_totally_real);
    CHECK(rf.fibers_totally_complex == mf.fibers_totally_complex);
    CHECK(rf.is_deployment == mf.is_deployment);
  }
}
