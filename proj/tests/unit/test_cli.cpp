#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sys/wait.h>

#include "crlie/cli/cli.hpp"

using namespace crlie;
using namespace crlie::cli;

namespace {

const std::filesystem::path fixtures = CRLIE_FIXTURE_DIR;

struct Proc {
  int status;
  std::string out;
};

Proc run_cli(const std::string& args) {
  const std::string cmd = std::string(CRLIE_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* f = popen(cmd.c_str(), "r");
  REQUIRE(f != nullptr);
  std::string out;
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, f)) > 0;) out.append(buf, n);
  const int st = pclose(f);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::filesystem::path temp_dir(const std::string& name) {
  auto d = std::filesystem::temp_directory_path() / ("crlie_" + name);
  std::filesystem::remove_all(d);
  std::filesystem::create_directories(d);
  return d;
}

}  // namespace

TEST_CASE("problem schema") {
  auto p = parse_problem_text(R"({"ambient": {"real_form": "compact-sp:2"}, "subalgebra": {"roots": ["2e1"]}})");
  CHECK(p.ambient == Problem::AmbientKind::RealForm);
  CHECK(p.subalgebra.roots == std::vector<std::string>{"2e1"});
  CHECK_FALSE(p.subalgebra.toral.has_value());

  try {
    parse_problem_text(R"({"ambient": {"root_system": "C2"},
                           "subalgebra": {"roots": ["2e1"], "matrices": [[[1]]]}})");
    FAIL("expected a schema error");
  } catch (const ProblemError& e) {
    REQUIRE(e.violations().size() == 1);
    CHECK(e.violations()[0].find("$.subalgebra.roots") != std::string::npos);
    CHECK(e.violations()[0].find("$.subalgebra.matrices") != std::string::npos);
  }

  try {
    parse_problem_text(R"({"ambient": {"root_system": "Q2"}, "subalgebra": "minimal-orbit", "extra": 1,
                           "options": {"seed": -1, "command": "corpus"}})");
    FAIL("expected a schema error");
  } catch (const ProblemError& e) {
    const auto& v = e.violations();
    auto has = [&](const std::string& path) {
      return std::any_of(v.begin(), v.end(), [&](const std::string& s) { return s.rfind(path + ":", 0) == 0; });
    };
    CHECK(has("$.extra"));
    CHECK(has("$.ambient.root_system"));
    CHECK(has("$.crosses"));
    CHECK(has("$.options.seed"));
    CHECK(has("$.options.command"));
  }

  CHECK_THROWS_AS(parse_problem_text("{not json"), ProblemError);
  CHECK_THROWS_AS(parse_problem_text(R"({"ambient": {"matrices": [[[1, 0], [0]]]}, "subalgebra": {"roots": []}})"),
                  ProblemError);
  CHECK_THROWS_AS(parse_problem_text(R"({"ambient": {"root_system": "A2"}, "subalgebra": {"roots": [], "toral": [["x"]]}})"),
                  ProblemError);
}

TEST_CASE("fixture for su(2,3) parses") {
  auto p = load_problem(fixtures / "su23_crosses13_analyze.json");
  CHECK(p.ambient_name == "su:2,3");
  CHECK(p.subalgebra.kind == SubSpec::Kind::MinimalOrbit);
  CHECK(p.crosses == std::vector<int>{1, 3});
  CHECK(p.command == Command::Analyze);
  CHECK(p.expect.is_object());
}

TEST_CASE("reports") {
  RunOptions opts;
  auto zero = parse_problem_text(R"({"ambient": {"root_system": "B2"}, "subalgebra": {"roots": [], "toral": "zero"}})");
  auto r = run(Command::Analyze, zero, opts);
  CHECK(r["dims"]["v"] == 0);
  CHECK(r["dims"]["nr"] == 0);
  CHECK(r["flags"]["n_reductive"] == true);
  CHECK(r["seed"] == default_seed);

  auto ex92 = load_problem(fixtures / "su13_cross2_analyze.json");
  const auto a = emit(run(Command::Analyze, ex92, opts), Format::Json);
  CHECK(a.find("\"cr_dim\": 3") != std::string::npos);
  CHECK(a.find("\"cr_codim\": 1") != std::string::npos);
  CHECK(a == emit(run(Command::Analyze, ex92, opts), Format::Json));
  CHECK(Json::parse(a) == run(Command::Analyze, ex92, opts));

  auto sp = load_problem(fixtures / "sp2_horocyclic_regularize.json");
  auto chain = run(Command::Regularize, sp, opts)["chain"];
  CHECK(chain["length"] == 2);
  CHECK(chain["parabolic"]["levi_roots"] == Json::array({"e1-e2", "-e1+e2"}));
  const auto text = emit(run(Command::Regularize, sp, opts), Format::Text);
  CHECK(text.find("chain.parabolic.levi_roots = {e1-e2, -e1+e2}") != std::string::npos);

  RunOptions seeded;
  seeded.seed = 7;
  CHECK(run(Command::Analyze, ex92, seeded)["seed"] == 7);

  // matrix input needs a matrix ambient
  auto bad = parse_problem_text(R"({"ambient": {"root_system": "A1"}, "subalgebra": {"matrices": [[[0, 1], [0, 0]]]}})");
  CHECK_THROWS_AS(run(Command::Analyze, bad, opts), DimensionError);
  // not closed under brackets
  auto open = parse_problem_text(R"({"ambient": {"root_system": "A2"}, "subalgebra": {"roots": ["e1-e2", "e2-e1"], "toral": "zero"}})");
  CHECK_THROWS_AS(run(Command::Analyze, open, opts), DimensionError);
}

TEST_CASE("explicit matrix ambient") {
  // sl2 with the diagonal Borel
  auto p = parse_problem_text(R"({
    "ambient": {"matrices": [[[1, 0], [0, -1]], [[0, 1], [0, 0]], [[0, 0], [1, 0]]], "label": "sl2"},
    "subalgebra": {"matrices": [[[1, 0], [0, -1]], [[0, 1], [0, 0]]]}})");
  auto r = run(Command::Regularize, p, {});
  CHECK(r["backend"] == "matrix");
  CHECK(r["chain"]["length"] == 1);
  CHECK(r["chain"]["q"]["dim"] == 2);
  CHECK(run(Command::Analyze, p, {})["cr"] == Json{{"cr_dim", 1}, {"cr_codim", 0}});
}

TEST_CASE("expectation matching") {
  Json report = {{"a", {{"b", 1}, {"c", {1, 2}}}}, {"l", Json::array({{{"x", 1}, {"y", 2}}})}};
  CHECK(match_expectations({{"a", {{"b", 1}}}}, report).empty());
  CHECK(match_expectations({{"l", Json::array({{{"y", 2}}})}}, report).empty());
  CHECK(match_expectations({{"a", {{"c", {1}}}}}, report).size() == 1);
  CHECK(match_expectations({{"z", 1}}, report) == std::vector<std::string>{"$.z: missing"});
}

TEST_CASE("binary exit codes and determinism") {
  const auto file = (fixtures / "so7_regularize.json").string();
  auto a = run_cli("regularize " + file);
  auto b = run_cli("regularize " + file);
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(Json::parse(a.out)["chain"]["length"] == 3);
  CHECK(run_cli("analyze " + file + " --format text").out.find("dims.v = 2") != std::string::npos);

  CHECK(run_cli("frobnicate " + file).status == 1);
  CHECK(run_cli("analyze /nonexistent.json").status == 1);
  CHECK(run_cli("analyze " + file + " --format xml").status == 1);

  auto dir = temp_dir("corpus");
  std::filesystem::copy_file(fixtures / "sp2_horocyclic_regularize.json", dir / "a.json");
  CHECK(run_cli("corpus " + dir.string() + " --jobs 2").status == 0);
  std::ofstream(dir / "b.json") << R"({"ambient": {"root_system": "A2"}, "subalgebra": {"roots": ["e1-e2"]},
    "options": {"command": "analyze", "expect": {"dims": {"v": 99}}}})";
  auto failing = run_cli("corpus " + dir.string());
  CHECK(failing.status == 2);
  CHECK(Json::parse(failing.out)["failed"] == 1);
  std::ofstream(dir / "c.json") << R"({"ambient": {}})";
  CHECK(run_cli("corpus " + dir.string()).status == 1);
  std::filesystem::remove_all(dir);
}

TEST_CASE("bundled corpus") {
  RunOptions opts;
  opts.jobs = 2;
  auto r = run_corpus(fixtures, opts);
  for (const auto& f : r["fixtures"]) {
    INFO(f.dump());
    CHECK(f["status"] == "pass");
  }
  CHECK(r["failed"] == 0);
}
