#include <fstream>
#include <set>
#include <sstream>

#include "crlie/cli/cli.hpp"
#include "crlie/realforms/realforms.hpp"

namespace crlie::cli {

namespace {

std::string join_lines(const std::vector<std::string>& v) {
  std::string out = "invalid problem:";
  for (const auto& s : v) out += "\n  " + s;
  return out;
}

struct Checker {
  std::vector<std::string> errors;

  void fail(const std::string& path, const std::string& msg) { errors.push_back(path + ": " + msg); }

  void unknown_keys(const Json& obj, const std::string& path, const std::set<std::string>& allowed) {
    for (const auto& [k, _] : obj.items())
      if (!allowed.count(k)) fail(path + "." + k, "unknown key");
  }

  std::optional<GaussRational> scalar(const Json& j, const std::string& path) {
    try {
      if (j.is_number_integer()) return GaussRational(j.get<long>());
      if (j.is_string()) return GaussRational::parse(j.get<std::string>());
    } catch (const std::exception&) {
    }
    fail(path, "expected an integer or a Gaussian rational string");
    return std::nullopt;
  }

  std::vector<DenseMatrix> matrices(const Json& j, const std::string& path) {
    std::vector<DenseMatrix> out;
    if (!j.is_array() || j.empty()) {
      fail(path, "expected a non-empty list of square matrices");
      return out;
    }
    Eigen::Index n = -1;
    for (std::size_t i = 0; i < j.size(); ++i) {
      const std::string p = path + "[" + std::to_string(i) + "]";
      const Json& m = j[i];
      if (!m.is_array() || m.empty()) {
        fail(p, "expected a list of rows");
        continue;
      }
      const auto rows = static_cast<Eigen::Index>(m.size());
      if (n < 0) n = rows;
      if (rows != n) {
        fail(p, "matrix size differs from the first matrix");
        continue;
      }
      DenseMatrix x = zeros<GaussRational>(n, n);
      bool ok = true;
      for (Eigen::Index r = 0; r < n; ++r) {
        const Json& row = m[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
          fail(p + "[" + std::to_string(r) + "]", "row length differs from the matrix size");
          ok = false;
          continue;
        }
        for (Eigen::Index c = 0; c < n; ++c) {
          auto s = scalar(row[static_cast<std::size_t>(c)], p + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
          if (s) x(r, c) = *s;
          else ok = false;
        }
      }
      if (ok) out.push_back(std::move(x));
    }
    return out;
  }

  std::vector<std::string> strings(const Json& j, const std::string& path) {
    std::vector<std::string> out;
    if (!j.is_array()) {
      fail(path, "expected a list of strings");
      return out;
    }
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (j[i].is_string()) out.push_back(j[i].get<std::string>());
      else fail(path + "[" + std::to_string(i) + "]", "expected a string");
    }
    return out;
  }

  std::optional<SubSpec> sub(const Json& j, const std::string& path, bool allow_orbit) {
    if (j.is_string() && allow_orbit) {
      if (j.get<std::string>() == "minimal-orbit") return SubSpec{SubSpec::Kind::MinimalOrbit, {}, {}, {}};
      fail(path, "the only string directive is \"minimal-orbit\"");
      return std::nullopt;
    }
    if (!j.is_object()) {
      fail(path, "expected an object");
      return std::nullopt;
    }
    unknown_keys(j, path, {"roots", "toral", "matrices", "minimal_orbit"});
    std::vector<std::string> sources;
    for (const char* k : {"roots", "matrices", "minimal_orbit"})
      if (j.contains(k)) sources.push_back(path + "." + k);
    if (sources.size() != 1) {
      if (sources.empty()) fail(path, "needs exactly one of roots, matrices, minimal_orbit");
      else {
        std::string names;
        for (const auto& s : sources) names += (names.empty() ? "" : " and ") + s;
        fail(path, "conflicting sources " + names);
      }
      return std::nullopt;
    }
    SubSpec s;
    if (j.contains("roots")) {
      s.kind = SubSpec::Kind::Roots;
      s.roots = strings(j["roots"], path + ".roots");
      if (j.contains("toral")) {
        const Json& t = j["toral"];
        if (t.is_string() && t == "full") {
        } else if (t.is_string() && t == "zero") {
          s.toral.emplace();
        } else if (t.is_array()) {
          s.toral.emplace();
          for (std::size_t i = 0; i < t.size(); ++i) {
            const std::string p = path + ".toral[" + std::to_string(i) + "]";
            if (!t[i].is_array()) {
              fail(p, "expected a coordinate list");
              continue;
            }
            std::vector<GaussRational> h;
            for (std::size_t c = 0; c < t[i].size(); ++c)
              if (auto x = scalar(t[i][c], p + "[" + std::to_string(c) + "]")) h.push_back(*x);
            s.toral->push_back(std::move(h));
          }
        } else {
          fail(path + ".toral", "expected \"full\", \"zero\" or a list of Cartan vectors");
        }
      }
    } else if (j.contains("matrices")) {
      if (j.contains("toral")) fail(path + ".toral", "only allowed with roots");
      s.kind = SubSpec::Kind::Matrices;
      s.matrices = matrices(j["matrices"], path + ".matrices");
    } else {
      if (!allow_orbit) fail(path + ".minimal_orbit", "not allowed here");
      if (j["minimal_orbit"] != true) fail(path + ".minimal_orbit", "expected true");
      s.kind = SubSpec::Kind::MinimalOrbit;
    }
    return s;
  }
};

}  // namespace

ProblemError::ProblemError(std::vector<std::string> violations)
    : std::invalid_argument(join_lines(violations)), violations_(std::move(violations)) {}

std::optional<Command> parse_command(std::string_view s) {
  for (Command c : {Command::Analyze, Command::Regularize, Command::ParMax, Command::ParMin, Command::Fibration,
                    Command::Lift, Command::Corpus})
    if (s == to_string(c)) return c;
  return std::nullopt;
}

const char* to_string(Command c) {
  switch (c) {
    case Command::Analyze: return "analyze";
    case Command::Regularize: return "regularize";
    case Command::ParMax: return "par-max";
    case Command::ParMin: return "par-min";
    case Command::Fibration: return "fibration";
    case Command::Lift: return "lift";
    case Command::Corpus: return "corpus";
  }
  return "?";
}

Problem parse_problem(const Json& doc) {
  Checker ck;
  Problem p;
  p.source = doc;
  if (!doc.is_object()) throw ProblemError({"$: expected a JSON object"});
  ck.unknown_keys(doc, "$", {"ambient", "subalgebra", "crosses", "options"});

  if (!doc.contains("ambient")) {
    ck.fail("$.ambient", "missing");
  } else if (!doc["ambient"].is_object()) {
    ck.fail("$.ambient", "expected an object");
  } else {
    const Json& a = doc["ambient"];
    ck.unknown_keys(a, "$.ambient", {"root_system", "real_form", "matrices", "label"});
    int sources = 0;
    for (const char* k : {"root_system", "real_form", "matrices"}) sources += a.contains(k) ? 1 : 0;
    if (sources != 1) ck.fail("$.ambient", "needs exactly one of root_system, real_form, matrices");
    if (a.contains("root_system")) {
      p.ambient = Problem::AmbientKind::RootSystem;
      if (!a["root_system"].is_string()) {
        ck.fail("$.ambient.root_system", "expected a name such as \"B3\"");
      } else {
        p.ambient_name = a["root_system"].get<std::string>();
        try {
          if (p.ambient_name.size() < 2) throw RootSystemError("too short");
          RootSystem(parse_family(p.ambient_name.substr(0, 1)), std::stoi(p.ambient_name.substr(1)));
        } catch (const std::exception& e) {
          ck.fail("$.ambient.root_system", std::string("invalid root system: ") + e.what());
        }
      }
    } else if (a.contains("real_form")) {
      p.ambient = Problem::AmbientKind::RealForm;
      if (!a["real_form"].is_string()) {
        ck.fail("$.ambient.real_form", "expected a name such as \"su:2,3\"");
      } else {
        p.ambient_name = a["real_form"].get<std::string>();
        try {
          RealFormSpec::parse(p.ambient_name);
        } catch (const std::exception& e) {
          ck.fail("$.ambient.real_form", e.what());
        }
      }
    } else if (a.contains("matrices")) {
      p.ambient = Problem::AmbientKind::Matrices;
      p.ambient_basis = ck.matrices(a["matrices"], "$.ambient.matrices");
      p.ambient_name = a.value("label", std::string("k"));
    }
  }

  if (!doc.contains("subalgebra")) ck.fail("$.subalgebra", "missing");
  else if (auto s = ck.sub(doc["subalgebra"], "$.subalgebra", true)) p.subalgebra = *s;

  if (doc.contains("crosses")) {
    const Json& c = doc["crosses"];
    if (!c.is_array()) ck.fail("$.crosses", "expected a list of simple-root indices");
    else
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i].is_number_integer() && c[i].get<int>() >= 1) p.crosses.push_back(c[i].get<int>());
        else ck.fail("$.crosses[" + std::to_string(i) + "]", "expected a positive integer");
      }
  }
  if (p.subalgebra.kind == SubSpec::Kind::MinimalOrbit && p.crosses.empty())
    ck.fail("$.crosses", "the minimal-orbit directive needs crosses");

  if (doc.contains("options")) {
    const Json& o = doc["options"];
    if (!o.is_object()) {
      ck.fail("$.options", "expected an object");
    } else {
      ck.unknown_keys(o, "$.options", {"seed", "rank_cap", "command", "target", "contains", "expect", "note"});
      if (o.contains("seed")) {
        if (o["seed"].is_number_unsigned()) p.seed = o["seed"].get<std::uint64_t>();
        else ck.fail("$.options.seed", "expected a non-negative integer");
      }
      if (o.contains("rank_cap")) {
        if (o["rank_cap"].is_number_integer() && o["rank_cap"].get<int>() >= 1) p.rank_cap = o["rank_cap"].get<int>();
        else ck.fail("$.options.rank_cap", "expected a positive integer");
      }
      if (o.contains("command")) {
        auto c = o["command"].is_string() ? parse_command(o["command"].get<std::string>()) : std::nullopt;
        if (!c || *c == Command::Corpus) ck.fail("$.options.command", "expected a command other than corpus");
        else p.command = c;
      }
      if (o.contains("target"))
        if (auto s = ck.sub(o["target"], "$.options.target", false)) p.target = *s;
      if (o.contains("contains")) p.contains = ck.strings(o["contains"], "$.options.contains");
      if (o.contains("expect")) {
        if (o["expect"].is_object()) p.expect = o["expect"];
        else ck.fail("$.options.expect", "expected an object");
      }
    }
  }
  if (!ck.errors.empty()) throw ProblemError(std::move(ck.errors));
  return p;
}

Problem parse_problem_text(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ProblemError({std::string("$: ") + e.what()});
  }
  return parse_problem(doc);
}

Problem load_problem(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ProblemError({path.string() + ": cannot open"});
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_problem_text(ss.str());
}

}  // namespace crlie::cli
