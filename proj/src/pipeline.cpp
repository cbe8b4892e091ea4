#include "adjlab/pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "adjlab/adjunction.hpp"
#include "adjlab/errors.hpp"
#include "adjlab/l2check.hpp"
#include "adjlab/multiplier.hpp"
#include "adjlab/resolution.hpp"

namespace adjlab {

using nlohmann::json;

std::string fnv1a64_hex(const std::string& text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

std::string version_string() { return std::string("adjlab ") + ADJLAB_VERSION + " (" + arithmetic_backend() + ")"; }

namespace {

const std::set<std::string> kProblemKeys = {
    "name",    "variables",  "f",       "blowup_script", "snc_assertion", "normal",          "g_list",
    "witnesses", "mu",       "branches", "graphs",       "shells",        "samples",         "seed",
    "degree_bound", "max_steps", "quadrature_nodes", "mu_samples"};

std::size_t variable_index(const std::vector<std::string>& vars, const std::string& name, const std::string& key) {
  const auto it = std::find(vars.begin(), vars.end(), name);
  if (it == vars.end()) throw Error(key + ": unknown variable '" + name + "'");
  return static_cast<std::size_t>(it - vars.begin());
}

std::size_t one_based_mu(const json& j, std::size_t n, const std::string& key) {
  const auto mu = j.get<long>();
  if (mu < 1 || static_cast<std::size_t>(mu) > n) throw Error(key + ": mu must be in 1.." + std::to_string(n));
  return static_cast<std::size_t>(mu - 1);
}

template <typename T>
T get_or(const json& doc, const char* key, T fallback) {
  return doc.contains(key) ? doc.at(key).get<T>() : fallback;
}

GraphChart make_graph(const GraphSpec& g, const Polynomial& f) {
  const auto& vars = f.variables();
  GraphChart chart;
  chart.dependent = variable_index(vars, g.dependent, "graphs.dependent");
  chart.num = parse_poly(g.num, vars);
  chart.den = parse_poly(g.den, vars);
  for (const auto& r : g.region) chart.region.push_back(parse_region_constraint(r, vars));
  if (g.radial) chart.radial = variable_index(vars, *g.radial, "graphs.radial");
  validate_graph(f, chart);
  return chart;
}

}  // namespace

ProblemSpec load_problem(const json& doc) {
  if (!doc.is_object()) throw Error("problem file must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (!kProblemKeys.count(key)) throw Error("unknown problem key '" + key + "'");
  }
  ProblemSpec spec;
  try {
    spec.name = get_or<std::string>(doc, "name", "");
    spec.variables = doc.at("variables").get<std::vector<std::string>>();
    spec.f = parse_poly(doc.at("f").get<std::string>(), spec.variables);
    if (spec.f.is_zero()) throw ZeroPolynomialError("f must be nonzero");
    const std::size_t n = spec.variables.size();

    if (doc.contains("blowup_script")) {
      std::vector<BlowupCenter> script;
      for (const auto& step : doc.at("blowup_script")) {
        BlowupCenter c;
        c.chart_id = step.at("chart").get<std::string>();
        for (const auto& q : step.at("point")) {
          c.point.push_back(q.is_string() ? parse_rational(q.get<std::string>()) : Rational(q.get<long>()));
        }
        script.push_back(std::move(c));
      }
      spec.blowup_script = std::move(script);
    }
    spec.snc_assertion = get_or(doc, "snc_assertion", false);
    spec.normal = get_or(doc, "normal", false);
    spec.g_list = get_or(doc, "g_list", std::vector<std::string>{"1"});
    for (const auto& g : spec.g_list) parse_poly(g, spec.variables);
    if (doc.contains("witnesses")) {
      spec.witnesses = doc.at("witnesses").get<std::vector<std::string>>();
      for (const auto& w : *spec.witnesses) parse_poly(w, spec.variables);
    }
    if (doc.contains("mu")) spec.mu = one_based_mu(doc.at("mu"), n, "mu");

    for (const auto& b : get_or(doc, "branches", json::array())) {
      BranchSpec branch;
      branch.param = b.at("param").get<std::vector<std::string>>();
      branch.radius = get_or(b, "radius", 1.0);
      if (b.contains("mu")) branch.mu = one_based_mu(b.at("mu"), n, "branches.mu");
      make_branch(spec.f, branch.param, branch.radius);
      spec.branches.push_back(std::move(branch));
    }
    for (const auto& g : get_or(doc, "graphs", json::array())) {
      GraphSpec graph;
      graph.dependent = g.at("dependent").get<std::string>();
      graph.num = g.at("G_num").get<std::string>();
      graph.den = get_or<std::string>(g, "G_den", "1");
      graph.region = g.at("region").get<std::vector<std::string>>();
      if (g.contains("radial")) graph.radial = g.at("radial").get<std::string>();
      if (g.contains("mu")) graph.mu = one_based_mu(g.at("mu"), n, "graphs.mu");
      make_graph(graph, spec.f);
      spec.graphs.push_back(std::move(graph));
    }

    if (doc.contains("shells")) {
      const auto shells = doc.at("shells").get<std::vector<int>>();
      if (shells.size() != 2) throw Error("shells must be [k_min, k_max]");
      spec.k_min = shells[0];
      spec.k_max = shells[1];
    }
    spec.samples = get_or<std::size_t>(doc, "samples", spec.samples);
    if (doc.contains("seed")) spec.seed = doc.at("seed").get<std::uint64_t>();
    if (doc.contains("degree_bound")) spec.degree_bound = doc.at("degree_bound").get<std::uint64_t>();
    spec.max_steps = get_or(doc, "max_steps", spec.max_steps);
    spec.quadrature_nodes = get_or<std::size_t>(doc, "quadrature_nodes", spec.quadrature_nodes);
    spec.mu_samples = get_or<std::size_t>(doc, "mu_samples", spec.mu_samples);
  } catch (const json::exception& e) {
    throw Error(std::string("problem file: ") + e.what());
  }
  spec.input_hash = fnv1a64_hex(doc.dump());
  return spec;
}

ProblemSpec load_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read problem file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw Error("'" + path + "' is not valid JSON: " + e.what());
  }
  return load_problem(doc);
}

namespace {

json residue_json(const ResidueForm& r) {
  return {{"sign", r.sign}, {"mu", r.mu + 1}, {"numerator", format(r.numerator)}, {"denominator", format(r.denominator)}};
}

json ideal_json(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) return "unit";
  json out = json::array();
  for (const auto& g : ideal.generators) out.push_back(format_monomial(g, ideal.variables));
  return out;
}

json report_json(const DyadicReport& r) {
  return {{"k_min", r.k_min},     {"k_max", r.k_max},         {"masses", r.masses},
          {"errors", r.errors},   {"ratio", r.ratio},         {"ratio_sigma", r.ratio_sigma},
          {"verdict", to_string(r.verdict)}, {"method", r.method}, {"samples", r.samples},
          {"seed", r.seed},       {"discarded", r.discarded}};
}

template <typename Fn>
auto stage(const char* name, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const StageError&) {
    throw;
  } catch (const std::exception& e) {
    throw StageError(name, e.what());
  }
}

bool all_monomials(const std::vector<Polynomial>& polys) {
  return std::all_of(polys.begin(), polys.end(), [](const Polynomial& p) {
    return p.size() == 1 && p.leading_term().second == 1;
  });
}

}  // namespace

RunResult run_pipeline(const ProblemSpec& spec, Stage target, std::uint64_t seed) {
  RunResult result;
  json& rep = result.report;
  const auto& vars = spec.variables;
  const bool want_multiplier = target == Stage::multiplier || target == Stage::report;
  const bool want_adjunct = target == Stage::adjunct || target == Stage::report;
  const bool want_l2 = target == Stage::l2 || target == Stage::report;
  bool consistent = true;

  rep["tool"] = {{"name", "adjlab"}, {"version", ADJLAB_VERSION}, {"backend", arithmetic_backend()}};
  rep["input_hash"] = spec.input_hash;
  rep["problem"] = spec.name;
  rep["variables"] = vars;
  rep["f"] = format(spec.f);
  rep["parameters"] = {{"shells", {spec.k_min, spec.k_max}},
                       {"samples", spec.samples},
                       {"seed", seed},
                       {"max_steps", spec.max_steps},
                       {"quadrature_nodes", spec.quadrature_nodes},
                       {"mu_samples", spec.mu_samples}};
  if (spec.degree_bound) rep["parameters"]["degree_bound"] = *spec.degree_bound;

  const ResolutionTree tree = stage("resolve", [&] {
    if (spec.blowup_script) return resolve_scripted(spec.f, *spec.blowup_script, spec.snc_assertion);
    if (spec.f.nvars() != 2) throw Error("automatic resolution covers plane curves; give a blowup_script");
    return resolve_plane_curve(spec.f, spec.max_steps);
  });
  {
    json divisors = json::array();
    for (const auto& d : tree.divisors()) {
      json point = json::array();
      for (const auto& q : d.center.point) point.push_back(to_string(q));
      divisors.push_back({{"name", "E" + std::to_string(d.id)},
                          {"m", d.m},
                          {"k", d.k},
                          {"center_chart", d.center.chart_id},
                          {"center", point},
                          {"birth_chart", d.birth_chart}});
    }
    rep["resolution"] = {{"method", spec.blowup_script ? "scripted" : "automatic"},
                         {"blowups", tree.divisors().size()},
                         {"charts", tree.charts().size()},
                         {"divisors", divisors},
                         {"snc_status", to_string(tree.snc_status())}};
    if (!tree.snc_witness().empty()) rep["resolution"]["snc_witness"] = tree.snc_witness();
  }

  if (want_multiplier) {
    stage("multiplier", [&] {
      const MultiplierReport m = multiplier_generators(tree, spec.degree_bound);
      rep["multiplier"] = {{"thresholds", m.thresholds},
                           {"generators", m.generators ? ideal_json(*m.generators) : json("non_monomial_unsupported")},
                           {"lct", to_string(m.lct)},
                           {"is_unit", m.is_unit},
                           {"canonical", to_string(canonical_test(tree, spec.normal))},
                           {"degree_bound", m.degree_bound}};

      json w;
      if (tree.monomial_centers()) {
        w["found"] = ideal_json(find_ef_witnesses(tree));
      } else {
        w["found"] = "non_monomial_unsupported";
      }
      if (spec.witnesses) {
        std::vector<Polynomial> given;
        for (const auto& s : *spec.witnesses) given.push_back(parse_poly(s, vars));
        w["given"] = *spec.witnesses;
        w["given_valid"] = witness_set_valid(given, tree);
        if (!w["given_valid"].get<bool>()) consistent = false;
        if (all_monomials(given) && m.generators) {
          std::vector<Monomial> gens;
          for (const auto& p : given) gens.push_back(p.leading_term().first);
          const MonomialIdeal ideal = MonomialIdeal::from_generators(vars, gens);
          const MonomialIdeal oracle = howald_generators(ideal, 1);
          const bool agrees = oracle == *m.generators;
          rep["howald"] = {{"ideal", format(ideal)}, {"c", "1"}, {"generators", ideal_json(oracle)}, {"agrees", agrees}};
          if (!agrees) consistent = false;
        }
      }
      rep["witnesses"] = w;
    });
  }

  const bool exact_available = tree.snc_status() != SncStatus::unverified;
  if (want_adjunct) {
    stage("adjunct", [&] {
      json forms = json::array();
      const auto mus = admissible_mus(spec.f);
      for (const auto& gs : spec.g_list) {
        const MeromorphicTopForm omega{parse_poly(gs, vars), spec.f};
        const std::size_t mu = spec.mu.value_or(default_mu(spec.f));
        const ResidueForm r = adjunction_map(omega, mu);
        bool identity_all = true;
        for (std::size_t other : mus) identity_all = identity_all && residue_identity_check(omega, adjunction_map(omega, other));
        double deviation = 0.0;
        std::size_t pairs = 0;
        for (std::size_t a = 0; a < mus.size(); ++a) {
          for (std::size_t b = a + 1; b < mus.size(); ++b) {
            deviation = std::max(deviation, mu_consistency_check(omega, mus[a], mus[b], spec.mu_samples, seed).max_deviation);
            ++pairs;
          }
        }
        json entry = {{"g", gs},
                      {"residue", residue_json(r)},
                      {"simplified", residue_json(simplified(r))},
                      {"identity_check", residue_identity_check(omega, r)},
                      {"identity_check_all_mu", identity_all},
                      {"mu_consistency", {{"pairs", pairs}, {"samples", spec.mu_samples}, {"max_deviation", deviation}}}};
        entry["l2_criterion"] = exact_available ? json(l2_criterion(omega, tree)) : json(nullptr);
        if (!identity_all) consistent = false;
        forms.push_back(entry);
      }
      rep["adjunction"] = forms;
    });
  }

  if (want_l2) {
    stage("l2", [&] {
      json charts = json::array();
      json agreement = json::array();
      for (const auto& gs : spec.g_list) {
        const MeromorphicTopForm omega{parse_poly(gs, vars), spec.f};
        std::vector<Verdict> verdicts;
        for (std::size_t i = 0; i < spec.branches.size(); ++i) {
          const auto& b = spec.branches[i];
          const std::size_t mu = b.mu.value_or(spec.mu.value_or(default_mu(spec.f)));
          const auto param = make_branch(spec.f, b.param, b.radius);
          const auto r = curve_branch_mass(adjunction_map(omega, mu), param, spec.k_min, spec.k_max,
                                           spec.quadrature_nodes);
          json entry = {{"g", gs}, {"chart", "branch " + std::to_string(i + 1)}, {"param", b.param}, {"mu", mu + 1}};
          entry["report"] = report_json(r);
          charts.push_back(entry);
          verdicts.push_back(r.verdict);
        }
        for (std::size_t i = 0; i < spec.graphs.size(); ++i) {
          const auto& g = spec.graphs[i];
          const GraphChart chart = make_graph(g, spec.f);
          std::size_t mu;
          if (g.mu) {
            mu = *g.mu;
          } else if (spec.mu) {
            mu = *spec.mu;
          } else {
            mu = spec.f.depends_on(chart.dependent) ? chart.dependent : default_mu(spec.f);
          }
          const auto r = graph_chart_mass(adjunction_map(omega, mu), chart, spec.k_min, spec.k_max, spec.samples,
                                          seed);
          json entry = {{"g", gs},
                        {"chart", "graph " + std::to_string(i + 1)},
                        {"graph", g.dependent + " = (" + g.num + ")/(" + g.den + ")"},
                        {"region", g.region},
                        {"mu", mu + 1}};
          entry["report"] = report_json(r);
          charts.push_back(entry);
          verdicts.push_back(r.verdict);
        }
        if (verdicts.empty()) continue;
        Verdict combined = Verdict::convergent;
        for (Verdict v : verdicts) {
          if (v == Verdict::divergent) {
            combined = Verdict::divergent;
            break;
          }
          if (v == Verdict::inconclusive) combined = Verdict::inconclusive;
        }
        json entry = {{"g", gs}, {"numeric", to_string(combined)}};
        if (!exact_available) {
          entry["exact"] = nullptr;
          entry["status"] = "numeric_inconclusive";
        } else {
          const bool exact = l2_criterion(omega, tree);
          entry["exact"] = exact;
          if (combined == Verdict::inconclusive) {
            entry["status"] = "numeric_inconclusive";
          } else if ((combined == Verdict::convergent) == exact) {
            entry["status"] = "agree";
          } else {
            entry["status"] = "disagree";
            consistent = false;
          }
        }
        agreement.push_back(entry);
      }
      rep["l2"] = charts;
      rep["agreement"] = agreement;
    });
  }

  rep["status"] = consistent ? "ok" : "disagree";
  result.exit_code = consistent ? 0 : 1;
  return result;
}

std::string text_report(const json& rep) {
  std::ostringstream os;
  os << (rep.value("problem", "").empty() ? std::string("problem") : rep["problem"].get<std::string>()) << ": f = "
     << rep["f"].get<std::string>() << "\n";
  const auto& res = rep["resolution"];
  os << "resolution: " << res["method"].get<std::string>() << ", " << res["blowups"] << " blow-ups, snc "
     << res["snc_status"].get<std::string>() << "\n";
  for (const auto& d : res["divisors"]) {
    os << "  " << d["name"].get<std::string>() << ": m = " << d["m"] << ", k = " << d["k"] << "\n";
  }
  auto list = [](const json& j) {
    if (j.is_string()) return j.get<std::string>();
    std::string s;
    for (const auto& x : j) s += (s.empty() ? "" : ", ") + x.get<std::string>();
    return "(" + s + ")";
  };
  if (rep.contains("multiplier")) {
    const auto& m = rep["multiplier"];
    os << "multiplier ideal: " << list(m["generators"]) << "\n";
    os << "lct: " << m["lct"].get<std::string>() << "\n";
    os << "canonical: " << m["canonical"].get<std::string>() << "\n";
  }
  if (rep.contains("witnesses")) os << "witnesses: " << list(rep["witnesses"]["found"]) << "\n";
  if (rep.contains("howald")) {
    os << "howald oracle: " << list(rep["howald"]["generators"])
       << (rep["howald"]["agrees"].get<bool>() ? " (agrees)" : " (DISAGREES)") << "\n";
  }
  if (rep.contains("adjunction")) {
    for (const auto& a : rep["adjunction"]) {
      const auto& s = a["simplified"];
      os << "residue g = " << a["g"].get<std::string>() << ": " << (s["sign"].get<int>() < 0 ? "-" : "") << "("
         << s["numerator"].get<std::string>() << ") / (" << s["denominator"].get<std::string>() << "), omit "
         << rep["variables"][s["mu"].get<std::size_t>() - 1].get<std::string>()
         << ", identity " << (a["identity_check"].get<bool>() ? "ok" : "FAILED") << ", mu deviation "
         << a["mu_consistency"]["max_deviation"].get<double>() << "\n";
    }
  }
  if (rep.contains("l2")) {
    for (const auto& c : rep["l2"]) {
      os << "l2 g = " << c["g"].get<std::string>() << ", " << c["chart"].get<std::string>() << ": ratio "
         << c["report"]["ratio"].get<double>() << " +- " << c["report"]["ratio_sigma"].get<double>() << ", "
         << c["report"]["verdict"].get<std::string>() << "\n";
    }
    for (const auto& a : rep["agreement"]) {
      os << "agreement g = " << a["g"].get<std::string>() << ": " << a["status"].get<std::string>() << "\n";
    }
  }
  os << "status: " << rep["status"].get<std::string>() << "\n";
  return os.str();
}

}  // namespace adjlab
