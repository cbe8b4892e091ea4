#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "adjlab/blowup.hpp"
#include "adjlab/polynomial.hpp"

namespace adjlab {

struct BranchSpec {
  std::vector<std::string> param;
  double radius = 1.0;
  std::optional<std::size_t> mu;  // 0-based
};

struct GraphSpec {
  std::string dependent;
  std::string num;
  std::string den = "1";
  std::vector<std::string> region;
  std::optional<std::string> radial;
  std::optional<std::size_t> mu;  // 0-based
};

/// Parsed problem file. Optional numeric fields fall back to the defaults
/// below unless overridden on the command line.
struct ProblemSpec {
  std::string name;
  std::vector<std::string> variables;
  Polynomial f;
  std::optional<std::vector<BlowupCenter>> blowup_script;
  bool snc_assertion = false;
  bool normal = false;
  std::vector<std::string> g_list;
  std::optional<std::vector<std::string>> witnesses;
  std::optional<std::size_t> mu;  // 0-based default for adjunction
  std::vector<BranchSpec> branches;
  std::vector<GraphSpec> graphs;

  int k_min = 2;
  int k_max = 12;
  std::size_t samples = 20000;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> degree_bound;
  int max_steps = 32;
  std::size_t quadrature_nodes = 32;
  std::size_t mu_samples = 100;

  std::string input_hash;  // FNV-1a 64 of the canonical JSON text
};

/// Validates the problem: f parses, g_list parses, branches and graphs lie
/// on f = 0. Throws Error subclasses with the offending key in the message.
ProblemSpec load_problem(const nlohmann::json& doc);
ProblemSpec load_problem_file(const std::string& path);

std::string fnv1a64_hex(const std::string& text);

enum class Stage { resolve, multiplier, adjunct, l2, report };

struct RunResult {
  nlohmann::json report;
  int exit_code = 0;  // 0 ok, 1 disagreement
};

/// Runs the stages needed for `stage` and assembles the JSON report.
/// Errors propagate as StageError.
RunResult run_pipeline(const ProblemSpec& spec, Stage stage, std::uint64_t seed);

/// Error tagged with the pipeline stage that raised it.
class StageError : public std::runtime_error {
 public:
  StageError(std::string stage, const std::string& message)
      : std::runtime_error("[" + stage + "] " + message), stage_(std::move(stage)) {}
  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

/// Short human-readable rendering of a report.
std::string text_report(const nlohmann::json& report);

/// "adjlab <version> (<arithmetic backend>)".
std::string version_string();

}  // namespace adjlab
