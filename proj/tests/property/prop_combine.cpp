#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crlie/fibration/fibration.hpp"
#include "../support/gen.hpp"

using namespace crlie;

namespace {

constexpr int kCases = 250;

std::vector<RegularSubalgebra> par_of(const RegularBackend& b, const RegularSubalgebra& v,
                                      const std::vector<ParabolicRootSet>& all) {
  std::vector<RegularSubalgebra> out;
  for (const auto& p : all) {
    auto q = RegularSubalgebra::from_parabolic(b.system(), p);
    if (par_membership(b, v, q)) out.push_back(std::move(q));
  }
  return out;
}

}  // namespace

TEST_CASE("combined parabolics are certified and stay in Par(v)") {
  gen::Rng g(701);
  int pairs = 0;
  for (int t = 0; t < kCases; ++t) {
    auto sys = gen::system(g, 3);
    RegularBackend b(sys);
    const auto v = gen::regular(g, *sys);
    const auto par = par_of(b, v, enumerate_parabolics(*sys));
    INFO("case " << t << " " << sys->name() << " " << v.roots().to_string());
    if (par.empty()) continue;
    for (int k = 0; k < 3; ++k) {
      const auto& q1 = par[static_cast<std::size_t>(g.below(static_cast<int>(par.size())))];
      const auto& q2 = par[static_cast<std::size_t>(g.below(static_cast<int>(par.size())))];
      const auto d = combine_parabolics(b, v, q1, q2);
      ++pairs;
      CHECK(d.certificate.ok());
      CHECK(par_membership(b, v, d.q));
      CHECK(q1.contains(d.q));
      CHECK(d.q.contains(b.meet(q1, q2)));
      CHECK(b.nr(d.q).contains(b.nr(q1)));
      if (q1.contains(q2)) CHECK(d.q == q2);
    }
  }
  CHECK(pairs >= 200);
}

TEST_CASE("lifts of n-reductive v strengthen it") {
  gen::Rng g(702);
  int lifts = 0;
  for (int t = 0; t < kCases; ++t) {
    auto sys = gen::system(g, 3);
    RegularBackend b(sys);
    const auto v = gen::regular(g, *sys);
    INFO("case " << t << " " << sys->name() << " " << v.roots().to_string());
    const bool nred = is_n_reductive(b, v).holds;
    for (const auto& q : par_of(b, v, enumerate_parabolics(*sys))) {
      const auto l = lift(b, v, q);
      ++lifts;
      CHECK(l.input_n_reductive == nred);
      CHECK(l.vq.contains(v));
      CHECK(q.contains(l.vq));
      CHECK(b.nr(l.vq) == b.join(b.nr(v), b.nr(q)));
      if (nred) CHECK(strengthens(b, v, l.vq));
    }
  }
  CHECK(lifts >= 200);
}
