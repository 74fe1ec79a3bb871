#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crlie/fibration/fibration.hpp"
#include "crlie/realforms/realforms.hpp"
#include "../support/families.hpp"

using namespace crlie;

namespace {

struct Built {
  RealForm form;
  RootClassification rc;
  MinimalOrbit orbit;
};

Built build(const std::string& name, const std::vector<int>& crosses) {
  RealForm form = build_real_form(RealFormSpec::parse(name));
  RootClassification rc = classify_roots(form);
  MinimalOrbit orbit = build_minimal_orbit(form, rc, crosses);
  return {form, rc, orbit};
}

RootMask simple_mask(const RootSystem& sys, const std::vector<std::vector<int>>& coeffs) {
  RootMask m;
  for (const auto& c : coeffs) {
    bool found = false;
    for (std::size_t a = 0; a < sys.size(); ++a)
      if (sys.simple_coefficients(static_cast<int>(a)) == c) {
        m.set(a);
        found = true;
      }
    REQUIRE(found);
  }
  return m;
}

}  // namespace

TEST_CASE("real form names") {
  CHECK(RealFormSpec::parse("su:2,3").n() == 5);
  CHECK(RealFormSpec::parse("slH:2").n() == 4);
  CHECK(RealFormSpec::parse("compact-sp:2").name() == "compact-sp:2");
  CHECK_THROWS_AS(RealFormSpec::parse("sp:1,1"), DimensionError);
  CHECK_THROWS_AS(RealFormSpec::parse("su:5,5"), DimensionError);
  CHECK_THROWS_AS(RealFormSpec::parse("su:2"), DimensionError);
}

TEST_CASE("maximal compact subalgebras") {
  CHECK(build_real_form(RealFormSpec::parse("su:1,3")).k->dim() == 9);
  CHECK(build_real_form(RealFormSpec::parse("slH:2")).k->dim() == 10);
  auto su23 = build_real_form(RealFormSpec::parse("su:2,3"));
  CHECK(su23.k->dim() == 12);
  CHECK(rank_of(Subalg::whole(su23.k), 1) == 4);
  CHECK(build_real_form(RealFormSpec::parse("so:3,5")).k->dim() == 13);
  CHECK(build_real_form(RealFormSpec::parse("compact-so:7")).k->dim() == 21);
}

TEST_CASE("root classification") {
  auto compact = build_real_form(RealFormSpec::parse("compact-su:4"));
  auto rc = classify_roots(compact);
  CHECK(rc.compact == compact.roots().all());
  auto su23 = build_real_form(RealFormSpec::parse("su:2,3"));
  auto rc23 = classify_roots(su23);
  const auto& sys = su23.roots();
  CHECK(rc23.imaginary().none());
  CHECK(rc23.real == (simple_mask(sys, {{0, 1, 1, 0}, {1, 1, 1, 1}}) | sys.negate(simple_mask(sys, {{0, 1, 1, 0}, {1, 1, 1, 1}}))));
  auto sat = satake_data(su23, rc23);
  CHECK(sat.black.empty());
  CHECK(sat.arrows == std::vector<std::pair<int, int>>{{1, 4}, {2, 3}});
  auto slh = build_real_form(RealFormSpec::parse("slH:2"));
  auto sat_h = satake_data(slh, classify_roots(slh));
  CHECK(sat_h.black == std::vector<int>{1, 3});
  auto su13 = build_real_form(RealFormSpec::parse("su:1,3"));
  auto sat13 = satake_data(su13, classify_roots(su13));
  CHECK(sat13.black == std::vector<int>{2});
  CHECK(sat13.arrows == std::vector<std::pair<int, int>>{{1, 3}});
}

TEST_CASE("su(2,3) minimal orbit, crosses 1 and 3") {
  auto b = build("su:2,3", {1, 3});
  const auto& sys = b.form.roots();
  const auto& s = b.orbit.sets;
  CHECK(s.fn.count() == 8);
  CHECK(s.fr == simple_mask(sys, {{0, 1, 0, 0}, {0, 0, 0, 1}, {0, -1, 0, 0}, {0, 0, 0, -1}}));
  CHECK(s.f_theta_n == simple_mask(sys, {{1, 0, 0, 0}, {0, 0, 1, 0}}));
  CHECK(s.f_theta_r.none());
  CHECK((s.fn & b.rc.real) == simple_mask(sys, {{0, 1, 1, 0}, {1, 1, 1, 1}}));

  const auto& k = b.form.k;
  auto v = family::span(k, 5, {{{0, 0, 1}, {4, 4, 1}}, {{1, 1, 1}, {3, 3, 1}}, {{2, 2, 1}}, {{0, 1, 1}, {4, 3, 1}}, {{2, 1, 1}, {2, 3, 1}}});
  CHECK(b.orbit.v == v);
  CHECK(b.orbit.v.dim() == 4);
  auto n = normalizer(b.orbit.v);
  CHECK(n == join(v, family::span(k, 5, {{{0, 4, 1}, {1, 3, 1}, {3, 1, 1}, {4, 0, 1}}})));

  auto crit = type_criteria(b.form, b.rc, s);
  CHECK_FALSE(crit.type_I);
  REQUIRE(crit.systems.size() == 1);
  REQUIRE(crit.witness_I[0].has_value());
  CHECK(simple_label(sys, crit.witness_I[0]->sum) == "a1+a2+a3");
  // F^theta_r is empty, so the type II condition holds vacuously
  CHECK(crit.type_II);
  MatrixBackend mb(k, 17);
  CHECK(regularity_type(mb, b.orbit.v) == RegularityType::II);
}

TEST_CASE("so(3,5) minimal orbit, cross on a4") {
  auto b = build("so:3,5", {4});
  const auto& sys = b.form.roots();
  const auto& s = b.orbit.sets;
  CHECK(s.f_theta_n == sys.parse_set({"e1+e4", "e2+e4", "e3+e4"}));
  CHECK(s.f_theta_r == sys.parse_set({"e1-e2", "e1-e3", "e2-e3", "-e1+e2", "-e1+e3", "-e2+e3"}));
  auto crit = type_criteria(b.form, b.rc, s);
  std::set<RootMask, bool (*)(const RootMask&, const RootMask&)> systems(mask_less);
  for (const auto& m : crit.systems) systems.insert(m);
  CHECK(systems.size() == 3);
  CHECK(systems.count(sys.parse_set({"e1-e2", "e1+e2"})) == 1);
  CHECK(systems.count(sys.parse_set({"e1-e3", "e1+e3"})) == 1);
  CHECK(systems.count(sys.parse_set({"e2-e3", "e2+e3"})) == 1);
  CHECK_FALSE(crit.type_II);
  MatrixBackend mb(b.form.k, 5);
  CHECK(regularity_type(mb, b.orbit.v) == RegularityType::III);
}

TEST_CASE("sl2(H) minimal orbit is regular") {
  auto b = build("slH:2", {1, 3});
  auto v = family::span(b.form.k, 4,
                        {{{0, 0, 1}, {1, 1, -1}}, {{2, 2, 1}, {3, 3, -1}}, {{0, 1, 1}}, {{0, 3, 1}, {2, 1, 1}}, {{2, 3, 1}}});
  CHECK(b.orbit.v == v);
  auto reg = b.form.k_roots->to_regular(b.orbit.v);
  REQUIRE(reg.has_value());
  const auto& ks = b.form.k_roots->roots();
  CHECK(reg->toral().is_full());
  CHECK(reg->roots() == ks.parse_set({"2e1", "2e2", "e1+e2"}));
  auto crit = type_criteria(b.form, b.rc, b.orbit.sets);
  CHECK(crit.type_I);
  MatrixBackend mb(b.form.k, 2);
  CHECK(regularity_type(mb, b.orbit.v) == RegularityType::I);
  auto chain = regularize_matrix(mb, b.orbit.v);
  CHECK(chain.length() == 2);
  auto q = family::span(b.form.k, 4,
                        {{{0, 0, 1}, {1, 1, -1}}, {{2, 2, 1}, {3, 3, -1}}, {{0, 1, 1}}, {{0, 3, 1}, {2, 1, 1}}, {{2, 3, 1}},
                         {{0, 2, -1}, {3, 1, 1}}, {{2, 0, 1}, {1, 3, -1}}});
  CHECK(chain.result.q == q);
}

TEST_CASE("su(1,3) minimal orbits") {
  auto b = build("su:1,3", {2});
  const auto& k = b.form.k;
  auto lam = std::vector<family::Param>{{{0, 0, 1}, {3, 3, 1}}, {{1, 1, 1}}, {{2, 2, 1}}};
  auto with = [&](std::vector<family::Param> extra) {
    auto ps = lam;
    ps.insert(ps.end(), extra.begin(), extra.end());
    return family::span(k, 4, ps);
  };
  CHECK(b.orbit.v == with({{{0, 2, 1}, {3, 2, 1}}, {{1, 0, 1}, {1, 3, 1}}, {{1, 2, 1}}}));
  CHECK(b.orbit.nr == family::span(k, 4, {{{0, 2, 1}, {3, 2, 1}}, {{1, 0, 1}, {1, 3, 1}}, {{1, 2, 1}}}));
  MatrixBackend mb(k, 4);
  auto chain = regularize_matrix(mb, b.orbit.v);
  std::vector<Eigen::Index> dims;
  for (const auto& st : chain.steps) dims.push_back(st.dim_v);
  CHECK(dims == std::vector<Eigen::Index>{5, 6, 6});
  CHECK(chain.result.q == with({{{0, 2, 1}, {3, 2, 1}}, {{1, 0, 1}, {1, 3, 1}}, {{1, 2, 1}}, {{0, 3, 1}, {3, 0, 1}}}));
  CHECK(cr_dims(mb, b.orbit.v) == CRDims{3, 1});
}

TEST_CASE("su(1,3) with crosses on a1 and a2") {
  auto c = build("su:1,3", {1, 2});
  const auto& k = c.form.k;
  auto with = [&](std::vector<family::Param> extra) {
    std::vector<family::Param> ps{{{0, 0, 1}, {3, 3, 1}}, {{1, 1, 1}}, {{2, 2, 1}}};
    ps.insert(ps.end(), extra.begin(), extra.end());
    return family::span(k, 4, ps);
  };
  const family::Param z2{{0, 2, 1}, {3, 2, 1}}, z1{{1, 2, 1}}, eta{{0, 1, 1}, {3, 1, 1}}, mu{{0, 3, 1}, {3, 0, 1}},
      w{{1, 0, 1}, {1, 3, 1}};
  CHECK(c.orbit.v == with({z2, z1}));
  CHECK(c.orbit.nr == family::span(k, 4, {z2, z1}));
  MatrixBackend mb(k, 4);

  // nr(v) is the nilradical of a maximal parabolic of k, so the chain
  // stops there rather than at a Borel
  auto chain = regularize_matrix(mb, c.orbit.v);
  std::vector<Eigen::Index> dims;
  for (const auto& st : chain.steps) dims.push_back(st.dim_v);
  CHECK(dims == std::vector<Eigen::Index>{4, 7, 7});
  CHECK(chain.result.q == with({z2, z1, eta, mu, w}));

  // the Borel through v containing eta is a minimal element of Par(v)
  auto q = with({z2, z1, eta, mu});
  CHECK(certify_parabolic(mb, q).ok());
  CHECK(par_membership(mb, c.orbit.v, q));
  CHECK(chain.result.q.contains(q));
  auto l = lift(mb, c.orbit.v, q);
  CHECK(strengthens(mb, c.orbit.v, l.vq));
  auto cls = classify_map(mb, l.vq, q).flags;
  CHECK(cls.is_submersion);
  CHECK(cls.fibers_totally_real);
  CHECK(cr_dims(mb, l.vq).cr_codim == 1);
}

TEST_CASE("su(2,3) regularization chain") {
  auto b = build("su:2,3", {1, 3});
  const auto& k = b.form.k;
  std::vector<family::Param> ps{{{0, 0, 1}, {4, 4, 1}}, {{1, 1, 1}, {3, 3, 1}}, {{2, 2, 1}},
                                {{0, 1, 1}, {4, 3, 1}}, {{2, 1, 1}, {2, 3, 1}}};
  auto v1 = ps;
  v1.push_back({{0, 3, 1}, {4, 1, 1}});
  v1.push_back({{0, 4, 1}, {1, 3, 1}, {3, 1, 1}, {4, 0, 1}});
  v1.push_back({{2, 0, 1}, {2, 4, 1}});
  auto v2 = ps;
  v2.push_back({{0, 3, 1}, {4, 1, 1}});
  v2.push_back({{1, 3, 1}, {3, 1, 1}});
  v2.push_back({{0, 4, 1}, {4, 0, 1}});
  v2.push_back({{2, 0, 1}, {2, 4, 1}});
  MatrixBackend mb(k, 9);
  auto chain = regularize_matrix(mb, b.orbit.v);
  REQUIRE(chain.steps.size() == 4);
  CHECK(chain.steps[1].v == family::span(k, 5, v1));
  CHECK(chain.steps[2].v == family::span(k, 5, v2));
  CHECK(chain.steps[2].nr == chain.steps[1].nr);
  CHECK(chain.stabilized_at == 2);
  CHECK(chain.result.q.dim() == 8);
  auto cls = classify_map(mb, b.orbit.v, chain.result.q).flags;
  CHECK_FALSE(cls.is_submersion);
  CHECK(cls.fibers_totally_real);
  // brackets of v + L(q) reach a hyperplane of q only
  auto cm = classify_map(mb, b.orbit.v, chain.result.q);
  CHECK(cm.generated.dim() == 7);
  CHECK(cm.generated == join(join(b.orbit.v, levi_intersection(mb, chain.result.q)),
                             family::span(k, 5, {{{0, 3, 1}, {4, 1, 1}}})));
  CHECK_FALSE(cls.is_spread);
  CHECK_FALSE(cls.is_deployment);
}

TEST_CASE("compact forms") {
  auto b = build("compact-so:7", {1, 2, 3});
  auto theta = theta_sets(b.form, b.rc, {2});
  CHECK(theta.f_theta == theta.f);
  auto reg = b.form.k_roots->to_regular(b.orbit.v);
  REQUIRE(reg.has_value());
  CHECK(reg->roots() == b.form.roots().positive());
  CHECK(type_criteria(b.form, b.rc, b.orbit.sets).type_I);
}
