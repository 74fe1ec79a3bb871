#include <iostream>
#include <iterator>
#include <string>

#include <CLI11.hpp>

#include "crlie/cli/cli.hpp"
#include "crlie/errors.hpp"
#include "crlie/rootsys/root_system.hpp"

using namespace crlie;

namespace {

cli::Problem read_problem(const std::string& path) {
  if (path != "-") return cli::load_problem(path);
  std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
  return cli::parse_problem_text(text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with CR algebras and parabolic regularization"};
  std::string command;
  std::string input;
  std::string format = "json";
  cli::RunOptions opts;
  std::uint64_t seed = 0;
  int rank_cap = 0;
  app.add_option("command", command, "analyze | regularize | par-max | par-min | fibration | lift | corpus")->required();
  app.add_option("input", input, "problem file ('-' for stdin), or fixture directory for corpus");
  app.add_option("--format", format, "json | text")->check(CLI::IsMember({"json", "text"}));
  auto* seed_opt = app.add_option("--seed", seed, "seed for the randomized steps of the matrix backend");
  auto* cap_opt = app.add_option("--rank-cap", rank_cap, "largest rank for exhaustive parabolic searches")
                      ->check(CLI::PositiveNumber);
  app.add_option("--jobs", opts.jobs, "parallel fixtures for corpus")->check(CLI::PositiveNumber);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }
  if (*seed_opt) opts.seed = seed;
  if (*cap_opt) opts.rank_cap = rank_cap;
  const auto fmt = format == "text" ? cli::Format::Text : cli::Format::Json;

  const auto cmd = cli::parse_command(command);
  if (!cmd) {
    std::cerr << "unknown command '" << command << "'\n";
    return 1;
  }
  try {
    if (*cmd == cli::Command::Corpus) {
#ifdef CRLIE_DEFAULT_FIXTURES
      if (input.empty()) input = CRLIE_DEFAULT_FIXTURES;
#endif
      if (input.empty()) {
        std::cerr << "corpus needs a fixture directory\n";
        return 1;
      }
      const auto report = cli::run_corpus(input, opts);
      std::cout << cli::emit(report, fmt);
      if (report["failed"] == 0) return 0;
      for (const auto& f : report["fixtures"])
        if (f["status"] == "schema_error" || f["status"] == "input_error") return 1;
      return 2;
    }
    if (input.empty()) {
      std::cerr << command << " needs a problem file\n";
      return 1;
    }
    const auto problem = read_problem(input);
    std::cout << cli::emit(cli::run(*cmd, problem, opts), fmt);
    return 0;
  } catch (const cli::ProblemError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const DimensionError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const RootSystemError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
