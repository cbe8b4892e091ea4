#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <regex>

#include "adjlab/errors.hpp"
#include "adjlab/multiplier.hpp"
#include "adjlab/pipeline.hpp"

namespace {

struct CommonOptions {
  std::string input;
  std::string output;
  std::optional<std::uint64_t> seed;
  std::string shells;
  std::optional<std::size_t> samples;
  std::optional<std::uint64_t> degree_bound;
  std::optional<int> max_steps;
  std::string format = "json";
};

void add_output_options(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("-o,--output", opts.output, "Write the report to this file instead of stdout");
  cmd->add_option("--format", opts.format, "Report format")->check(CLI::IsMember({"json", "text"}));
}

void add_problem_options(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("-i,--input", opts.input, "Problem file (JSON)")->required()->check(CLI::ExistingFile);
  add_output_options(cmd, opts);
  cmd->add_option("--seed", opts.seed, "Random seed (default: problem file, then ADJLAB_SEED, then 42)");
  cmd->add_option("--shells", opts.shells, "Dyadic shell range KMIN:KMAX");
  cmd->add_option("--samples", opts.samples, "Monte Carlo samples per shell");
  cmd->add_option("--degree-bound", opts.degree_bound, "Monomial enumeration degree bound");
  cmd->add_option("--max-steps", opts.max_steps, "Blow-up limit of the automatic resolver");
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw adjlab::Error("cannot write '" + path + "'");
  out << text;
}

std::uint64_t choose_seed(const CommonOptions& opts, const adjlab::ProblemSpec& spec) {
  if (opts.seed) return *opts.seed;
  if (spec.seed) return *spec.seed;
  if (const char* env = std::getenv("ADJLAB_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw adjlab::Error("ADJLAB_SEED is not an unsigned integer");
    }
  }
  return 42;
}

int run_problem(const CommonOptions& opts, adjlab::Stage stage) {
  adjlab::ProblemSpec spec = adjlab::load_problem_file(opts.input);
  if (!opts.shells.empty()) {
    const auto colon = opts.shells.find(':');
    if (colon == std::string::npos) throw adjlab::Error("--shells expects KMIN:KMAX");
    spec.k_min = std::stoi(opts.shells.substr(0, colon));
    spec.k_max = std::stoi(opts.shells.substr(colon + 1));
  }
  if (opts.samples) spec.samples = *opts.samples;
  if (opts.degree_bound) spec.degree_bound = *opts.degree_bound;
  if (opts.max_steps) spec.max_steps = *opts.max_steps;
  const auto result = adjlab::run_pipeline(spec, stage, choose_seed(opts, spec));
  emit(opts.format == "text" ? adjlab::text_report(result.report) : result.report.dump(2) + "\n", opts.output);
  return result.exit_code;
}

// Variables in order of first appearance in the ideal text.
std::vector<std::string> infer_variables(const std::string& text) {
  std::vector<std::string> vars;
  static const std::regex ident("[A-Za-z_][A-Za-z0-9_]*");
  for (auto it = std::sregex_iterator(text.begin(), text.end(), ident); it != std::sregex_iterator(); ++it) {
    const std::string name = it->str();
    if (std::find(vars.begin(), vars.end(), name) == vars.end()) vars.push_back(name);
  }
  return vars;
}

int run_howald(const std::string& ideal_text, const std::string& c_text, const std::string& vars_text,
               const CommonOptions& opts) {
  std::vector<std::string> vars;
  if (vars_text.empty()) {
    vars = infer_variables(ideal_text);
  } else {
    std::stringstream ss(vars_text);
    std::string v;
    while (std::getline(ss, v, ',')) vars.push_back(v);
  }
  const auto ideal = adjlab::parse_monomial_ideal(ideal_text, vars);
  const adjlab::Rational c = adjlab::parse_rational(c_text);
  const auto gens = adjlab::howald_generators(ideal, c, opts.degree_bound);
  nlohmann::json rep = {{"tool", {{"name", "adjlab"}, {"version", ADJLAB_VERSION}}},
                        {"variables", vars},
                        {"ideal", adjlab::format(ideal)},
                        {"c", adjlab::to_string(c)}};
  if (gens.is_unit()) {
    rep["generators"] = "unit";
  } else {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& g : gens.generators) list.push_back(adjlab::format_monomial(g, vars));
    rep["generators"] = list;
  }
  if (opts.format == "text") {
    emit("J(" + adjlab::to_string(c) + " * (" + adjlab::format(ideal) + ")) = (" + adjlab::format(gens) + ")\n",
         opts.output);
  } else {
    emit(rep.dump(2) + "\n", opts.output);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multiplier ideals, residues and L2 checks for hypersurface singularities"};
  app.set_version_flag("--version", adjlab::version_string());
  app.require_subcommand(1);

  struct Entry {
    const char* name;
    const char* help;
    adjlab::Stage stage;
  };
  const Entry entries[] = {
      {"resolve", "Resolve the singularity and list the exceptional divisors", adjlab::Stage::resolve},
      {"multiplier", "Multiplier ideal, lct, canonical test and witnesses", adjlab::Stage::multiplier},
      {"adjunct", "Residue forms and their identity and consistency checks", adjlab::Stage::adjunct},
      {"l2", "Dyadic shell masses and the exact/numerical agreement matrix", adjlab::Stage::l2},
      {"report", "Run every stage", adjlab::Stage::report},
  };
  std::vector<CommonOptions> opts(std::size(entries) + 1);
  std::vector<CLI::App*> cmds;
  for (std::size_t i = 0; i < std::size(entries); ++i) {
    cmds.push_back(app.add_subcommand(entries[i].name, entries[i].help));
    add_problem_options(cmds.back(), opts[i]);
  }
  CommonOptions& hopts = opts.back();
  std::string ideal_text, c_text = "1", vars_text;
  CLI::App* howald = app.add_subcommand("howald", "Multiplier ideal of a monomial ideal from its Newton polyhedron");
  howald->add_option("--ideal", ideal_text, "Generators, e.g. \"z1^3,z2^2\"")->required();
  howald->add_option("--c", c_text, "Coefficient (rational)");
  howald->add_option("--vars", vars_text, "Comma separated variables (default: order of appearance)");
  howald->add_option("--degree-bound", hopts.degree_bound, "Monomial enumeration degree bound");
  add_output_options(howald, hopts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (howald->parsed()) return run_howald(ideal_text, c_text, vars_text, hopts);
    for (std::size_t i = 0; i < cmds.size(); ++i) {
      if (cmds[i]->parsed()) return run_problem(opts[i], entries[i].stage);
    }
  } catch (const adjlab::StageError& e) {
    std::cerr << "adjlab: error " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "adjlab: error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
