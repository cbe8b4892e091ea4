#include "adjlab/l2check.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <limits>
#include <regex>
#include <sstream>
#include <thread>

#include "adjlab/errors.hpp"

namespace adjlab {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::convergent:
      return "convergent";
    case Verdict::divergent:
      return "divergent";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

BranchParam make_branch(const Polynomial& f, const std::vector<std::string>& components, double radius) {
  if (components.size() != f.nvars()) {
    throw ShapeError("branch needs " + std::to_string(f.nvars()) + " components");
  }
  if (!(radius > 0.0)) throw Error("branch radius must be positive");
  BranchParam param;
  param.radius = radius;
  const std::vector<std::string> t = {"t"};
  for (const auto& c : components) param.components.push_back(parse_poly(c, t));
  if (std::all_of(param.components.begin(), param.components.end(),
                  [](const Polynomial& p) { return p.is_constant(); })) {
    throw Error("branch parameterization is constant");
  }
  const Polynomial on_curve = substitute(f, param.components);
  if (!on_curve.is_zero()) throw Error("branch does not lie on f = 0: f(param) = " + format(on_curve));
  return param;
}

RegionConstraint parse_region_constraint(const std::string& text, const std::vector<std::string>& variables) {
  std::string s;
  for (char ch : text) {
    if (ch != ' ') s += ch;
  }
  static const std::regex pattern(R"(\|([A-Za-z_][A-Za-z0-9_]*)\|<=(?:\|([A-Za-z_][A-Za-z0-9_]*)\||([0-9]*\.?[0-9]+(?:[eE][-+]?[0-9]+)?)))");
  std::smatch m;
  if (!std::regex_match(s, m, pattern)) throw ParseError("region constraint '" + text + "' not understood", 0);
  auto index = [&](const std::string& name) {
    const auto it = std::find(variables.begin(), variables.end(), name);
    if (it == variables.end()) throw ParseError("unknown variable '" + name + "' in region constraint", 0);
    return static_cast<std::size_t>(it - variables.begin());
  };
  RegionConstraint c;
  c.var = index(m[1]);
  if (m[2].matched) {
    c.rhs_var = index(m[2]);
  } else {
    c.bound = std::stod(m[3]);
    if (!(c.bound > 0.0)) throw ParseError("region bound must be positive", 0);
  }
  return c;
}

std::string format(const RegionConstraint& c, const std::vector<std::string>& variables) {
  std::string rhs;
  if (c.rhs_var) {
    rhs = "|" + variables[*c.rhs_var] + "|";
  } else {
    std::ostringstream os;
    os << c.bound;
    rhs = os.str();
  }
  return "|" + variables[c.var] + "|<=" + rhs;
}

void validate_graph(const Polynomial& f, const GraphChart& chart) {
  const std::size_t n = f.nvars();
  if (chart.dependent >= n) throw ShapeError("graph: dependent variable out of range");
  if (chart.num.variables() != f.variables() || chart.den.variables() != f.variables()) {
    throw ShapeError("graph: G must use the problem variables");
  }
  if (chart.den.is_zero()) throw Error("graph: zero denominator");
  if (chart.num.depends_on(chart.dependent) || chart.den.depends_on(chart.dependent)) {
    throw Error("graph: G may not depend on the dependent variable");
  }
  if (chart.region.empty()) throw Error("graph: empty region");
  const auto d = static_cast<unsigned>(std::max<long>(0, f.degree_in(chart.dependent)));
  Polynomial total(f.variables());
  for (const auto& [m, c] : f.terms()) {
    Monomial rest = m;
    const unsigned e = rest[chart.dependent];
    rest[chart.dependent] = 0;
    total += Polynomial::term(f.variables(), rest, c) * chart.num.pow(e) * chart.den.pow(d - e);
  }
  if (!total.is_zero()) throw Error("graph does not lie on f = 0: cleared residual " + format(total));
}

RatioEstimate ratio_estimate(const std::vector<double>& masses, const std::vector<double>& errors) {
  const std::size_t s = masses.size();
  const std::size_t window = (s + 1) / 2;
  const std::size_t first = s - window;
  const std::size_t steps = window - 1;
  if (steps == 0) return {};
  const double a = masses[first];
  const double b = masses.back();
  if (!(a > 0.0) || !(b > 0.0)) return {0.0, 0.0};
  RatioEstimate r;
  r.ratio = std::pow(b / a, 1.0 / static_cast<double>(steps));
  if (!errors.empty()) {
    const double ea = errors[first] / a;
    const double eb = errors.back() / b;
    r.sigma = r.ratio * std::sqrt(ea * ea + eb * eb) / static_cast<double>(steps);
  }
  return r;
}

Verdict verdict(const std::vector<double>& masses) {
  if (masses.size() < 4) throw Error("verdict needs at least 4 shells");
  const std::size_t window = (masses.size() + 1) / 2;
  const std::vector<double> tail(masses.end() - static_cast<std::ptrdiff_t>(window), masses.end());
  if (std::any_of(tail.begin(), tail.end(), [](double m) { return !std::isfinite(m) || m < 0.0; })) {
    return Verdict::inconclusive;
  }
  if (std::all_of(tail.begin(), tail.end(), [](double m) { return m == 0.0; })) return Verdict::convergent;
  if (std::is_sorted(tail.begin(), tail.end())) return Verdict::divergent;
  if (std::any_of(tail.begin(), tail.end(), [](double m) { return m == 0.0; })) return Verdict::inconclusive;
  const double rho = ratio_estimate(masses, {}).ratio;
  if (rho < 1.0 - kVerdictBand) return Verdict::convergent;
  if (rho > 1.0 + kVerdictBand) return Verdict::divergent;
  return Verdict::inconclusive;
}

void gauss_legendre(std::size_t n, std::vector<double>& nodes, std::vector<double>& weights) {
  if (n == 0) throw Error("gauss_legendre: need at least one node");
  // Golub-Welsch: eigenpairs of the Jacobi matrix.
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 1; i < n; ++i) {
    const double k = static_cast<double>(i);
    const double beta = k / std::sqrt(4.0 * k * k - 1.0);
    jacobi(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = beta;
    jacobi(static_cast<Eigen::Index>(i - 1), static_cast<Eigen::Index>(i)) = beta;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
  nodes.resize(n);
  weights.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    nodes[i] = solver.eigenvalues()(static_cast<Eigen::Index>(i));
    const double v = solver.eigenvectors()(0, static_cast<Eigen::Index>(i));
    weights[i] = 2.0 * v * v;
  }
}

namespace {

std::complex<double> eval_t(const Polynomial& p, std::complex<double> t) {
  return evaluate(p, std::span<const std::complex<double>>(&t, 1));
}

}  // namespace

std::complex<double> branch_coefficient(const ResidueForm& residue, const BranchParam& param,
                                        std::complex<double> t) {
  const std::size_t nu = 1 - residue.mu;
  std::vector<std::complex<double>> z;
  for (const auto& c : param.components) z.push_back(eval_t(c, t));
  const std::complex<double> dz = eval_t(partial_derivative(param.components[nu], 0), t);
  return double(residue.sign) * evaluate(residue.numerator, z) * dz / evaluate(residue.denominator, z);
}

DyadicReport curve_branch_mass(const ResidueForm& residue, const BranchParam& param, int k_min, int k_max,
                               std::size_t quadrature_nodes) {
  if (residue.numerator.nvars() != 2 || param.components.size() != 2) {
    throw ShapeError("branch masses need a plane curve");
  }
  if (k_max < k_min) throw Error("empty shell range");
  if (substitute(residue.denominator, param.components).is_zero()) {
    throw Error("residue denominator vanishes identically on the branch");
  }
  std::vector<double> x, w;
  gauss_legendre(quadrature_nodes, x, w);
  const std::size_t n_angle = quadrature_nodes;

  // Precompute the derivative once.
  const std::size_t nu = 1 - residue.mu;
  const Polynomial dparam = partial_derivative(param.components[nu], 0);

  DyadicReport report;
  report.k_min = k_min;
  report.k_max = k_max;
  report.method = "quadrature";
  report.samples = quadrature_nodes;
  for (int k = k_min; k <= k_max; ++k) {
    const double r_out = param.radius * std::ldexp(1.0, -k);
    const double r_in = r_out / 2.0;
    const double half = (r_out - r_in) / 2.0;
    const double mid = (r_out + r_in) / 2.0;
    double mass = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double r = mid + half * x[i];
      double ring = 0.0;
      for (std::size_t j = 0; j < n_angle; ++j) {
        const double theta = 2.0 * std::numbers::pi * (static_cast<double>(j) + 0.5) / static_cast<double>(n_angle);
        const std::complex<double> t = std::polar(r, theta);
        std::vector<std::complex<double>> z;
        for (const auto& c : param.components) z.push_back(eval_t(c, t));
        const std::complex<double> c = double(residue.sign) * evaluate(residue.numerator, z) * eval_t(dparam, t) /
                                       evaluate(residue.denominator, z);
        ring += std::norm(c);
      }
      mass += w[i] * half * r * ring * (2.0 * std::numbers::pi / static_cast<double>(n_angle));
    }
    report.masses.push_back(mass);
    report.errors.push_back(0.0);
  }
  const auto est = ratio_estimate(report.masses, report.errors);
  report.ratio = est.ratio;
  report.ratio_sigma = est.sigma;
  report.verdict = verdict(report.masses);
  return report;
}

namespace {

struct ShellResult {
  double mass = 0.0;
  double error = 0.0;
  std::size_t discarded = 0;
};

struct GraphSampler {
  const ResidueForm& residue;
  const GraphChart& chart;
  std::size_t n = 0;
  std::vector<std::size_t> indep;  // independent variables
  std::size_t radial = 0;
  std::vector<Polynomial> dnum, dden;  // partials of num and den by each variable
  // For each independent non-radial variable: constant caps and whether |radial| caps it.
  std::vector<double> cap;
  std::vector<bool> capped_by_radial;

  double sampling_radius(std::size_t var, double r) const {
    double rad = cap[var];
    if (capped_by_radial[var]) rad = std::min(rad, r);
    return rad;
  }

  ShellResult shell(int k, std::size_t samples, std::uint64_t seed) const {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(k + 1000000)};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double r_out = std::ldexp(1.0, -k);
    const double r_in = r_out / 2.0;
    const double area = std::numbers::pi * (r_out * r_out - r_in * r_in);

    ShellResult out;
    double sum = 0.0, sum_sq = 0.0;
    std::vector<std::complex<double>> z(n);
    Eigen::MatrixXcd jac(static_cast<Eigen::Index>(n - 1), static_cast<Eigen::Index>(n - 1));
    for (std::size_t s = 0; s < samples; ++s) {
      const double rr = std::sqrt(r_in * r_in + u(rng) * (r_out * r_out - r_in * r_in));
      z[radial] = std::polar(rr, 2.0 * std::numbers::pi * u(rng));
      double weight = 1.0;
      for (std::size_t v : indep) {
        if (v == radial) continue;
        const double rad = sampling_radius(v, rr);
        z[v] = std::polar(rad * std::sqrt(u(rng)), 2.0 * std::numbers::pi * u(rng));
        weight *= std::numbers::pi * rad * rad;
      }
      const std::size_t dep = chart.dependent;
      z[dep] = 0.0;
      const std::complex<double> den = evaluate(chart.den, z);
      const std::complex<double> num = evaluate(chart.num, z);
      if (!(std::abs(den) > 1e-300)) {
        ++out.discarded;
        continue;
      }
      z[dep] = num / den;

      bool inside = true;
      for (const auto& c : chart.region) {
        const double rhs = c.rhs_var ? std::abs(z[*c.rhs_var]) : c.bound;
        if (std::abs(z[c.var]) > rhs) inside = false;
      }
      double value = 0.0;
      if (inside) {
        // Jacobian of the kept coordinates (all but mu) by the independent ones.
        Eigen::Index row = 0;
        for (std::size_t a = 0; a < n; ++a) {
          if (a == residue.mu) continue;
          Eigen::Index col = 0;
          for (std::size_t b : indep) {
            std::complex<double> entry;
            if (a == dep) {
              entry = (evaluate(dnum[b], z) * den - num * evaluate(dden[b], z)) / (den * den);
            } else {
              entry = (a == b) ? 1.0 : 0.0;
            }
            jac(row, col++) = entry;
          }
          ++row;
        }
        const std::complex<double> det = n == 2 ? jac(0, 0) : jac.determinant();
        const std::complex<double> h = double(residue.sign) * evaluate(residue.numerator, z) /
                                       evaluate(residue.denominator, z) * det;
        value = std::norm(h) * weight;
        if (!std::isfinite(value)) {
          ++out.discarded;
          continue;
        }
      }
      sum += value;
      sum_sq += value * value;
    }
    const std::size_t kept = samples - out.discarded;
    if (kept == 0) return out;
    const double mean = sum / static_cast<double>(kept);
    const double var = std::max(0.0, sum_sq / static_cast<double>(kept) - mean * mean);
    out.mass = area * mean;
    out.error = area * std::sqrt(var / static_cast<double>(kept));
    return out;
  }
};

}  // namespace

DyadicReport graph_chart_mass(const ResidueForm& residue, const GraphChart& chart, int k_min, int k_max,
                              std::size_t samples_per_shell, std::uint64_t seed, unsigned workers) {
  const std::size_t n = residue.numerator.nvars();
  if (n < 2) throw ShapeError("graph masses need at least two variables");
  if (k_max < k_min) throw Error("empty shell range");
  if (samples_per_shell == 0) throw Error("need at least one sample per shell");
  if (residue.mu >= n || chart.dependent >= n) throw ShapeError("graph: index out of range");
  if (chart.region.empty()) throw NumericError("graph: empty region");

  GraphSampler sampler{residue, chart, n, {}, 0, {}, {}, {}, {}};
  for (std::size_t v = 0; v < n; ++v) {
    if (v != chart.dependent) sampler.indep.push_back(v);
    sampler.dnum.push_back(partial_derivative(chart.num, v));
    sampler.dden.push_back(partial_derivative(chart.den, v));
  }
  if (chart.radial) {
    sampler.radial = *chart.radial;
  } else {
    const auto it = std::find_if(chart.region.begin(), chart.region.end(),
                                 [&](const RegionConstraint& c) { return c.rhs_var.has_value(); });
    if (it == chart.region.end()) throw NumericError("graph: no radial variable; give one explicitly");
    sampler.radial = *it->rhs_var;
  }
  if (sampler.radial == chart.dependent) throw NumericError("graph: the radial variable must be independent");

  sampler.cap.assign(n, std::numeric_limits<double>::infinity());
  sampler.capped_by_radial.assign(n, false);
  for (const auto& c : chart.region) {
    if (c.rhs_var && *c.rhs_var == sampler.radial) {
      sampler.capped_by_radial[c.var] = true;
    } else if (!c.rhs_var) {
      sampler.cap[c.var] = std::min(sampler.cap[c.var], c.bound);
    }
  }
  for (std::size_t v : sampler.indep) {
    if (v != sampler.radial && !sampler.capped_by_radial[v] && !std::isfinite(sampler.cap[v])) {
      throw NumericError("graph: region does not bound " + residue.numerator.variables()[v]);
    }
  }

  const std::size_t shells = static_cast<std::size_t>(k_max - k_min + 1);
  std::vector<ShellResult> results(shells);
  unsigned w = workers ? workers : std::max(1u, std::thread::hardware_concurrency());
  w = static_cast<unsigned>(std::min<std::size_t>(w, shells));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < w; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < shells; i += w) {
        results[i] = sampler.shell(k_min + static_cast<int>(i), samples_per_shell, seed);
      }
    });
  }
  for (auto& th : pool) th.join();

  DyadicReport report;
  report.k_min = k_min;
  report.k_max = k_max;
  report.method = "monte_carlo";
  report.samples = samples_per_shell;
  report.seed = seed;
  for (const auto& r : results) {
    report.masses.push_back(r.mass);
    report.errors.push_back(r.error);
    report.discarded += r.discarded;
  }
  const auto est = ratio_estimate(report.masses, report.errors);
  report.ratio = est.ratio;
  report.ratio_sigma = est.sigma;
  const bool too_many_discards = report.discarded * 100 > samples_per_shell * shells;
  report.verdict = too_many_discards ? Verdict::inconclusive : verdict(report.masses);
  return report;
}

}  // namespace adjlab
