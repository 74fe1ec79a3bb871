#include <algorithm>
#include <atomic>
#include <thread>

#include "crlie/cli/cli.hpp"
#include "crlie/fibration/fibration.hpp"
#include "crlie/realforms/realforms.hpp"

namespace crlie::cli {

namespace {

Json matrix_json(const DenseMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json space_json(const MatrixBackend&, const Subalg& s) {
  Json basis = Json::array();
  for (const auto& m : s.matrices()) basis.push_back(matrix_json(m));
  return {{"dim", s.dim()}, {"basis", std::move(basis)}};
}

Json space_json(const RegularBackend&, const RegularSubalgebra& s) {
  return {{"dim", s.dim()}, {"toral_dim", s.toral().dim()}, {"roots", s.system().format_set(s.roots())}};
}

Json mask_json(const RootSystem& sys, const RootMask& m) { return sys.format_set(m); }

Json zroots_json(const RootSystem& sys, const ParabolicRootSet& p) {
  const auto z = z_root_decomposition(sys, p);
  Json list = Json::array();
  for (const auto& r : z.zroots)
    list.push_back({{"label", zroot_label(r)}, {"positive", r.positive}, {"roots", mask_json(sys, r.component)}});
  Json simple = Json::array();
  for (auto i : z.simple) simple.push_back(zroot_label(z.zroots[i]));
  return {{"center_dim", z.center.dim()}, {"zroots", std::move(list)}, {"simple", std::move(simple)}};
}

Json parabolic_json(const RootSystem& sys, const ParabolicRootSet& p) {
  return {{"roots", mask_json(sys, p.q)},
          {"levi_roots", mask_json(sys, p.qr)},
          {"nilradical_roots", mask_json(sys, p.qn)},
          {"dim", static_cast<Eigen::Index>(p.q.count()) + sys.full_cartan().dim()},
          {"z", zroots_json(sys, p)}};
}

Json flags_json(const MapClassification& f) {
  return {{"cr", f.is_cr},
          {"submersion", f.is_submersion},
          {"spread", f.is_spread},
          {"deployment", f.is_deployment},
          {"fibers_totally_real", f.fibers_totally_real},
          {"fibers_totally_complex", f.fibers_totally_complex}};
}

Json certificate_json(const ParabolicCertificate& c) {
  return {{"self_normalizing", c.self_normalizing},
          {"q_plus_conj_is_k", c.q_plus_conj_is_k},
          {"triple_decomposition", c.triple_decomposition},
          {"ok", c.ok()}};
}

struct Context {
  const Problem* problem = nullptr;
  std::shared_ptr<const RootSystem> sys;
  std::optional<RealForm> form;
  std::optional<RootClassification> rc;
  std::optional<MinimalOrbit> orbit;
  AmbientPtr k;
  std::uint64_t seed = default_seed;
  int rank_cap = default_rank_cap;
};

Subspace<GaussRational> toral_of(const RootSystem& sys, const SubSpec& s) {
  if (!s.toral) return sys.full_cartan();
  std::vector<Vector> hs;
  for (const auto& h : *s.toral) {
    if (static_cast<int>(h.size()) != sys.coord_dim())
      throw DimensionError("toral vector has " + std::to_string(h.size()) + " coordinates, expected " +
                           std::to_string(sys.coord_dim()));
    Vector v(sys.coord_dim());
    for (std::size_t i = 0; i < h.size(); ++i) v(static_cast<Eigen::Index>(i)) = h[i];
    if (!sys.full_cartan().contains(v)) throw DimensionError("toral vector is outside the Cartan subalgebra");
    hs.push_back(std::move(v));
  }
  return Subspace<GaussRational>::span(sys.coord_dim(), hs);
}

RegularSubalgebra regular_from_roots(const RootSystem& sys, const SubSpec& s) {
  return RegularSubalgebra(sys, toral_of(sys, s), sys.parse_set(s.roots));
}

RegularSubalgebra to_space(const RegularBackend&, const Context& ctx, const SubSpec& s) {
  switch (s.kind) {
    case SubSpec::Kind::Roots: return regular_from_roots(*ctx.sys, s);
    case SubSpec::Kind::MinimalOrbit:
      return RegularSubalgebra::from_parabolic(*ctx.sys, parabolic_from_crosses(*ctx.sys, ctx.problem->crosses));
    case SubSpec::Kind::Matrices: break;
  }
  throw DimensionError("matrix subalgebras need a matrix ambient");
}

Subalg to_space(const MatrixBackend&, const Context& ctx, const SubSpec& s) {
  switch (s.kind) {
    case SubSpec::Kind::Matrices:
      if (s.matrices.front().rows() != ctx.k->n())
        throw DimensionError("subalgebra matrices have size " + std::to_string(s.matrices.front().rows()) +
                             ", ambient uses " + std::to_string(ctx.k->n()));
      for (const auto& m : s.matrices)
        if (!Subalg::whole(ctx.k).contains_matrix(m)) throw DimensionError("a subalgebra matrix lies outside the ambient");
      return Subalg::span(ctx.k, s.matrices);
    case SubSpec::Kind::MinimalOrbit:
      if (!ctx.orbit) throw DimensionError("the minimal-orbit directive needs a real form ambient");
      return ctx.orbit->v;
    case SubSpec::Kind::Roots:
      if (!ctx.form || !ctx.form->k_roots) throw DimensionError("root subalgebras need a root realization of k");
      return ctx.form->k_roots->embed(regular_from_roots(ctx.form->k_roots->roots(), s));
  }
  throw DimensionError("unsupported subalgebra source");
}

std::optional<RootMask> contains_mask(const RootSystem& sys, const Problem& p) {
  if (!p.contains) return std::nullopt;
  return sys.parse_set(*p.contains);
}

// Root view used by the searches over Par(v).
struct RegularView {
  std::shared_ptr<const RootSystem> sys;
  RegularSubalgebra v;
};

RegularView regular_view(const RegularBackend& b, const Context&, const RegularSubalgebra& v) {
  return {b.system_ptr(), v};
}

RegularView regular_view(const MatrixBackend&, const Context& ctx, const Subalg& v) {
  if (!ctx.form || !ctx.form->k_roots) throw DimensionError("this command needs a root realization of k");
  auto r = ctx.form->k_roots->to_regular(v);
  if (!r) throw DimensionError("v is not stable under the Cartan subalgebra of k");
  return {ctx.form->k_roots->roots_ptr(), *r};
}

template <class B>
Json regularize_json(const B& b, const RegularizationChain<typename B::Space>& chain) {
  Json steps = Json::array();
  for (const auto& st : chain.steps) steps.push_back({{"dim_v", st.dim_v}, {"dim_nr", st.dim_nr}});
  Json out{{"steps", std::move(steps)},
           {"stabilized_at", chain.stabilized_at},
           {"length", chain.length()},
           {"certificate", certificate_json(chain.result.certificate)},
           {"q", space_json(b, chain.result.q)},
           {"nr_q", space_json(b, b.nr(chain.result.q))}};
  if constexpr (std::is_same_v<B, RegularBackend>) out["parabolic"] = parabolic_json(b.system(), to_root_set(chain.result));
  return out;
}

template <class B>
RegularizationChain<typename B::Space> chain_of(const B& b, const typename B::Space& v) {
  if constexpr (std::is_same_v<B, MatrixBackend>) return regularize_matrix(b, v);
  else return regularize_regular(b, v);
}

template <class B>
typename B::Space target_of(const B& b, const Context& ctx, const typename B::Space& v) {
  if (ctx.problem->target) return to_space(b, ctx, *ctx.problem->target);
  return chain_of(b, v).result.q;
}

template <class B>
Json run_with(const B& b, const Context& ctx, const typename B::Space& v, Command cmd) {
  Json r;
  if (!b.is_subalgebra(v)) throw DimensionError("v is not a subalgebra");
  CRAlgebra<B> cr(b, v);
  r["dims"] = {{"k", b.dim(b.whole())}, {"v", b.dim(v)}, {"nr", b.dim(cr.nr())}, {"levi", b.dim(cr.levi())}};
  switch (cmd) {
    case Command::Analyze: {
      const auto d = cr.dims();
      r["cr"] = {{"cr_dim", d.cr_dim}, {"cr_codim", d.cr_codim}};
      const bool nred = cr.n_reductive();
      r["flags"] = {{"n_reductive", nred}, {"regularity", to_string(cr.regularity())}};
      r["v"] = space_json(b, v);
      r["nr"] = space_json(b, cr.nr());
      r["levi"] = space_json(b, cr.levi());
      break;
    }
    case Command::Regularize: {
      r["chain"] = regularize_json(b, chain_of(b, v));
      break;
    }
    case Command::ParMax:
    case Command::ParMin: {
      auto rv = regular_view(b, ctx, v);
      auto found = cmd == Command::ParMax ? maximal_par(rv.v, contains_mask(*rv.sys, *ctx.problem), ctx.rank_cap)
                                          : minimal_par(rv.v, ctx.rank_cap);
      Json list = Json::array();
      for (const auto& p : found) list.push_back(parabolic_json(*rv.sys, p));
      r["parabolics"] = std::move(list);
      r["rank_cap"] = ctx.rank_cap;
      break;
    }
    case Command::Fibration: {
      const auto e = target_of(b, ctx, v);
      const auto m = classify_map(b, v, e);
      r["target"] = space_json(b, e);
      r["map"] = flags_json(m.flags);
      r["map"]["generated_dim"] = b.dim(m.generated);
      const bool in_par = par_membership(b, v, e);
      r["in_par"] = in_par;
      if (in_par && cr.n_reductive()) {
        const auto d = deployment_verify(b, v, e);
        r["deployment"] = {{"lie_generated", d.lie_generated}, {"module_generated", d.module_generated}, {"holds", d.holds()}};
      }
      break;
    }
    case Command::Lift: {
      const auto q = target_of(b, ctx, v);
      const auto l = lift(b, v, q);
      const auto d = cr_dims(b, l.vq);
      r["target"] = space_json(b, q);
      r["lift"] = {{"vq", space_json(b, l.vq)},
                   {"input_n_reductive", l.input_n_reductive},
                   {"strengthens", strengthens(b, v, l.vq)},
                   {"cr", {{"cr_dim", d.cr_dim}, {"cr_codim", d.cr_codim}}},
                   {"map", flags_json(classify_map(b, l.vq, q).flags)}};
      const auto lq = levi_intersection(b, q);
      if (b.contains(lq, cr.levi())) {
        const auto h = homotopic_characteristic(b, q, cr.levi());
        r["homotopic"] = {{"value", h.value},
                          {"rank_s", h.rank_s},
                          {"tau_meet_s", h.tau_meet_s},
                          {"torus_meet_s_in_tau", h.torus_meet_s_in_tau},
                          {"t_is_tau_plus_z", h.t_is_tau_plus_z}};
      }
      break;
    }
    case Command::Corpus: throw DimensionError("corpus is not a per-problem command");
  }
  return r;
}

Json real_form_json(const Context& ctx) {
  const auto& form = *ctx.form;
  const auto& rc = *ctx.rc;
  const auto& sys = form.roots();
  const auto sat = satake_data(form, rc);
  Json arrows = Json::array();
  for (const auto& [i, j] : sat.arrows) arrows.push_back({i, j});
  Json out{{"name", form.spec.name()},
           {"k_dim", form.k->dim()},
           {"satake", {{"black", sat.black}, {"arrows", std::move(arrows)}}},
           {"root_kinds",
            {{"real", rc.real.count()},
             {"compact", rc.compact.count()},
             {"noncompact", rc.noncompact.count()},
             {"complex", rc.complex_roots.count()}}}};
  if (!ctx.orbit) return out;
  const auto& s = ctx.orbit->sets;
  out["theta_sets"] = {{"F", mask_json(sys, s.f)},
                       {"F_n", mask_json(sys, s.fn)},
                       {"F_r", mask_json(sys, s.fr)},
                       {"F_star", mask_json(sys, s.f_star)},
                       {"F_theta", mask_json(sys, s.f_theta)},
                       {"F_theta_n", mask_json(sys, s.f_theta_n)},
                       {"F_theta_r", mask_json(sys, s.f_theta_r)}};
  const auto tc = type_criteria(form, rc, s);
  auto witnesses = [&](const std::vector<std::optional<CriterionWitness>>& ws) {
    Json a = Json::array();
    for (const auto& w : ws) {
      if (!w) a.push_back(nullptr);
      else
        a.push_back({{"alpha", sys.format(w->alpha)},
                     {"beta", sys.format(w->beta)},
                     {"sum", sys.format(w->sum)},
                     {"sum_simple", simple_label(sys, w->sum)}});
    }
    return a;
  };
  Json systems = Json::array();
  for (const auto& m : tc.systems) systems.push_back(mask_json(sys, m));
  out["type_criteria"] = {{"type_I", tc.type_I},
                          {"type_II", tc.type_II},
                          {"systems", std::move(systems)},
                          {"witness_I", witnesses(tc.witness_I)},
                          {"witness_II", witnesses(tc.witness_II)}};
  return out;
}

}  // namespace

Json run(Command command, const Problem& problem, const RunOptions& opts) {
  Context ctx;
  ctx.problem = &problem;
  ctx.seed = opts.seed.value_or(problem.seed.value_or(default_seed));
  ctx.rank_cap = opts.rank_cap.value_or(problem.rank_cap.value_or(default_rank_cap));

  Json report;
  report["command"] = to_string(command);
  report["seed"] = ctx.seed;
  report["input"] = problem.source;

  switch (problem.ambient) {
    case Problem::AmbientKind::RootSystem: {
      const auto& name = problem.ambient_name;
      ctx.sys = std::make_shared<const RootSystem>(parse_family(name.substr(0, 1)), std::stoi(name.substr(1)));
      RegularBackend b(ctx.sys);
      report["backend"] = "regular";
      report.update(run_with(b, ctx, to_space(b, ctx, problem.subalgebra), command));
      return report;
    }
    case Problem::AmbientKind::RealForm: {
      ctx.form = build_real_form(RealFormSpec::parse(problem.ambient_name));
      ctx.rc = classify_roots(*ctx.form);
      if (!problem.crosses.empty()) ctx.orbit = build_minimal_orbit(*ctx.form, *ctx.rc, problem.crosses);
      ctx.k = ctx.form->k;
      report["real_form"] = real_form_json(ctx);
      break;
    }
    case Problem::AmbientKind::Matrices:
      ctx.k = std::make_shared<const AmbientAlgebra>(problem.ambient_name, problem.ambient_basis.front().rows(),
                                                     problem.ambient_basis);
      break;
  }
  MatrixBackend b(ctx.k, ctx.seed);
  report["backend"] = "matrix";
  report.update(run_with(b, ctx, to_space(b, ctx, problem.subalgebra), command));
  return report;
}

std::vector<std::string> match_expectations(const Json& expect, const Json& report) {
  std::vector<std::string> out;
  auto walk = [&](auto&& self, const Json& e, const Json& r, const std::string& path) -> void {
    if (e.is_object()) {
      if (!r.is_object()) {
        out.push_back(path + ": expected an object");
        return;
      }
      for (const auto& [k, v] : e.items()) {
        if (!r.contains(k)) out.push_back(path + "." + k + ": missing");
        else self(self, v, r[k], path + "." + k);
      }
      return;
    }
    if (e.is_array() && r.is_array() && e.size() == r.size() &&
        std::any_of(e.begin(), e.end(), [](const Json& x) { return x.is_structured(); })) {
      for (std::size_t i = 0; i < e.size(); ++i) self(self, e[i], r[i], path + "[" + std::to_string(i) + "]");
      return;
    }
    if (e != r) out.push_back(path + ": expected " + e.dump() + ", got " + r.dump());
  };
  walk(walk, expect, report, "$");
  return out;
}

Json run_corpus(const std::filesystem::path& dir, const RunOptions& opts) {
  std::vector<std::filesystem::path> files;
  if (!std::filesystem::is_directory(dir)) throw ProblemError({dir.string() + ": not a directory"});
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());

  std::vector<Json> results(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      Json res{{"name", files[i].filename().string()}};
      try {
        const Problem p = load_problem(files[i]);
        if (!p.command) throw ProblemError({"$.options.command: corpus fixtures need a command"});
        res["command"] = to_string(*p.command);
        const Json report = run(*p.command, p, opts);
        const auto mism = match_expectations(p.expect, report);
        res["mismatches"] = mism;
        res["status"] = mism.empty() ? "pass" : "fail";
      } catch (const ProblemError& e) {
        res["status"] = "schema_error";
        res["error"] = e.what();
      } catch (const DimensionError& e) {
        res["status"] = "input_error";
        res["error"] = e.what();
      } catch (const std::exception& e) {
        res["status"] = "verification_error";
        res["error"] = e.what();
      }
      results[i] = std::move(res);
    }
  };
  const int jobs = std::max(1, std::min<int>(opts.jobs, static_cast<int>(files.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::size_t passed = 0;
  for (const auto& r : results) passed += r["status"] == "pass" ? 1 : 0;
  return {{"command", "corpus"},
          {"fixtures", results},
          {"passed", passed},
          {"failed", files.size() - passed}};
}

namespace {

void emit_text(const Json& j, const std::string& path, std::string& out) {
  auto scalar = [](const Json& x) { return x.is_string() ? x.get<std::string>() : x.dump(); };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) emit_text(v, path.empty() ? k : path + "." + k, out);
    return;
  }
  if (j.is_array()) {
    const bool flat = std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_primitive(); });
    if (flat) {
      std::string line;
      for (const auto& x : j) line += (line.empty() ? "" : ", ") + scalar(x);
      out += path + " = {" + line + "}\n";
      return;
    }
    for (std::size_t i = 0; i < j.size(); ++i) emit_text(j[i], path + "[" + std::to_string(i) + "]", out);
    return;
  }
  out += path + " = " + scalar(j) + "\n";
}

}  // namespace

std::string emit(const Json& report, Format format) {
  if (format == Format::Json) return report.dump(2) + "\n";
  std::string out;
  emit_text(report, "", out);
  return out;
}

}  // namespace crlie::cli
