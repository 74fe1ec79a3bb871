#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "crlie/matrixlie/ambient.hpp"

namespace crlie::cli {

using Json = nlohmann::json;

/// Schema violations, one message per offending field path.
class ProblemError : public std::invalid_argument {
 public:
  explicit ProblemError(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

enum class Command { Analyze, Regularize, ParMax, ParMin, Fibration, Lift, Corpus };
std::optional<Command> parse_command(std::string_view s);
const char* to_string(Command c);

enum class Format { Json, Text };

/// A subalgebra (or target) source. Roots: toral is nullopt for the full
/// Cartan, an empty list for zero.
struct SubSpec {
  enum class Kind { Roots, Matrices, MinimalOrbit };
  Kind kind = Kind::Roots;
  std::vector<std::string> roots;
  std::optional<std::vector<std::vector<GaussRational>>> toral;
  std::vector<DenseMatrix> matrices;
};

struct Problem {
  enum class AmbientKind { RootSystem, RealForm, Matrices };
  AmbientKind ambient = AmbientKind::RootSystem;
  std::string ambient_name;
  std::vector<DenseMatrix> ambient_basis;
  SubSpec subalgebra;
  std::vector<int> crosses;

  std::optional<std::uint64_t> seed;
  std::optional<int> rank_cap;
  std::optional<Command> command;
  std::optional<SubSpec> target;
  std::optional<std::vector<std::string>> contains;
  Json expect;  // null when absent

  Json source;
};

Problem parse_problem(const Json& doc);
Problem parse_problem_text(std::string_view text);
Problem load_problem(const std::filesystem::path& path);

struct RunOptions {
  std::optional<std::uint64_t> seed;
  std::optional<int> rank_cap;
  int jobs = 1;
};

inline constexpr std::uint64_t default_seed = 0x5eed;
inline constexpr int default_rank_cap = 6;

/// Report for one problem. Throws DimensionError on bad input and
/// VerificationError when an internal certificate fails.
Json run(Command command, const Problem& problem, const RunOptions& opts);

/// Runs every *.json fixture in dir (sorted by name) with its
/// options.command and compares against options.expect.
Json run_corpus(const std::filesystem::path& dir, const RunOptions& opts);

/// Paths in expect whose values differ from the report. Objects match as
/// subsets, arrays holding objects or arrays element by element, everything
/// else by equality.
std::vector<std::string> match_expectations(const Json& expect, const Json& report);

std::string emit(const Json& report, Format format);

}  // namespace crlie::cli
