#include <doctest.h>

#include <cmath>
#include <numbers>

#include "adjlab/errors.hpp"
#include "adjlab/l2check.hpp"

using namespace adjlab;

namespace {

const std::vector<std::string> kZ = {"z1", "z2"};
const std::vector<std::string> kXYZ = {"x", "y", "z"};

Polynomial P(const char* text, const std::vector<std::string>& vars) { return parse_poly(text, vars); }

GraphChart graph(const Polynomial& f, const char* dep, const char* num, const char* den,
                 std::initializer_list<const char*> region) {
  const auto& vars = f.variables();
  GraphChart g;
  g.dependent = static_cast<std::size_t>(std::find(vars.begin(), vars.end(), dep) - vars.begin());
  g.num = P(num, vars);
  g.den = P(den, vars);
  for (const char* r : region) g.region.push_back(parse_region_constraint(r, vars));
  validate_graph(f, g);
  return g;
}

// Mass of |h|^2 over the shell 2^{-k-1} < |y| <= 2^{-k} for f = z^2 - x*y^3 on
// the chart x = z^2/y^3, |z| <= |y|, |x| <= 1, where h = -1/y^3. Midpoint grid
// in polar coordinates for y and z with the region tested pointwise.
double negative_control_grid_mass(int k) {
  const int nr = 48, nt = 4, nz = 400;
  const double r_out = std::ldexp(1.0, -k), r_in = r_out / 2;
  double total = 0.0;
  for (int i = 0; i < nr; ++i) {
    const double ry = r_in + (i + 0.5) * (r_out - r_in) / nr;
    for (int a = 0; a < nt; ++a) {
      const std::complex<double> y = std::polar(ry, 2 * std::numbers::pi * (a + 0.5) / nt);
      double inner = 0.0;
      for (int j = 0; j < nz; ++j) {
        const double rz = (j + 0.5) * ry / nz;
        for (int b = 0; b < nt; ++b) {
          const std::complex<double> z = std::polar(rz, 2 * std::numbers::pi * (b + 0.5) / nt);
          const std::complex<double> x = z * z / (y * y * y);
          if (std::abs(x) > 1.0) continue;
          inner += std::norm(-1.0 / (y * y * y)) * rz * (ry / nz) * (2 * std::numbers::pi / nt);
        }
      }
      total += inner * ry * ((r_out - r_in) / nr) * (2 * std::numbers::pi / nt);
    }
  }
  return total;
}

}  // namespace

TEST_CASE("verdict rules") {
  CHECK(verdict({1, 4, 16, 64, 256}) == Verdict::divergent);
  CHECK(verdict({256, 64, 16, 4, 1}) == Verdict::convergent);
  CHECK(verdict({1, 1.05, 0.95, 1.02, 1.0}) == Verdict::inconclusive);
  CHECK(verdict({3, 2, 1, 1}) == Verdict::divergent);
  CHECK(verdict({3, 2, 0, 0}) == Verdict::convergent);
  CHECK_THROWS_AS(verdict({1, 2, 3}), Error);
  const auto est = ratio_estimate({256, 64, 16, 4, 1}, {0, 0, 1.6, 0, 0.1});
  CHECK(est.ratio == doctest::Approx(0.25));
  CHECK(est.sigma == doctest::Approx(0.25 * std::sqrt(0.01 + 0.01) / 2));
}

TEST_CASE("gauss-legendre nodes integrate polynomials exactly") {
  std::vector<double> x, w;
  gauss_legendre(5, x, w);
  double s0 = 0, s8 = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    s0 += w[i];
    s8 += w[i] * std::pow(x[i], 8);
  }
  CHECK(s0 == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(s8 == doctest::Approx(2.0 / 9.0).epsilon(1e-13));
}

TEST_CASE("branch quadrature reproduces closed-form annulus integrals") {
  const Polynomial f = P("z1", kZ);
  const auto branch = make_branch(f, {"0", "t"}, 1.0);
  for (unsigned p = 0; p <= 2; ++p) {
    const MeromorphicTopForm omega{Polynomial::variable(kZ, 1).pow(p), f};
    const auto report = curve_branch_mass(adjunction_map(omega, 0), branch, 2, 6, 32);
    for (int k = 2; k <= 6; ++k) {
      const double r_out = std::ldexp(1.0, -k), r_in = r_out / 2;
      const double exact = std::numbers::pi * (std::pow(r_out, 2 * p + 2) - std::pow(r_in, 2 * p + 2)) / (p + 1);
      CHECK(std::abs(report.masses[k - 2] - exact) <= 1e-10 * exact);
    }
  }
}

TEST_CASE("cusp branch masses") {
  const Polynomial f = P("z1^3 - z2^2", kZ);
  const auto branch = make_branch(f, {"t^2", "t^3"}, 1.0);
  struct Case {
    const char* g;
    double target;
    Verdict v;
    double at_half;  // c(1/2)
  };
  for (const auto& c : {Case{"1", 4.0, Verdict::divergent, 4.0}, Case{"z1", 0.25, Verdict::convergent, 1.0},
                        Case{"z2", 1.0 / 16, Verdict::convergent, 0.5}}) {
    const auto r = adjunction_map({P(c.g, kZ), f}, 1);
    const auto at_half = branch_coefficient(r, branch, {0.5, 0.0});
    CHECK(at_half.real() == doctest::Approx(c.at_half));
    CHECK(at_half.imag() == doctest::Approx(0.0));
    const auto report = curve_branch_mass(r, branch, 2, 12, 32);
    CHECK(report.verdict == c.v);
    CHECK(std::abs(report.ratio - c.target) <= 1e-9 * c.target);
  }
  // Either admissible mu gives the same masses.
  const auto r0 = curve_branch_mass(adjunction_map({P("z1", kZ), f}, 0), branch, 2, 6, 32);
  const auto r1 = curve_branch_mass(adjunction_map({P("z1", kZ), f}, 1), branch, 2, 6, 32);
  for (std::size_t i = 0; i < r0.masses.size(); ++i) CHECK(r0.masses[i] == doctest::Approx(r1.masses[i]));

  CHECK_THROWS_AS(make_branch(f, {"t^2", "t^2"}, 1.0), Error);
  CHECK_THROWS_AS(make_branch(f, {"1", "1"}, 1.0), Error);
  CHECK_THROWS_AS(make_branch(f, {"t^2"}, 1.0), ShapeError);
}

TEST_CASE("region constraints") {
  const auto c = parse_region_constraint(" |z| <= |x| ", kXYZ);
  CHECK(c.var == 2);
  CHECK(*c.rhs_var == 0);
  const auto b = parse_region_constraint("|x|<=1.5", kXYZ);
  CHECK_FALSE(b.rhs_var);
  CHECK(b.bound == 1.5);
  CHECK(format(c, kXYZ) == "|z|<=|x|");
  CHECK(format(b, kXYZ) == "|x|<=1.5");
  CHECK_THROWS_AS(parse_region_constraint("|w|<=1", kXYZ), ParseError);
  CHECK_THROWS_AS(parse_region_constraint("z<=1", kXYZ), ParseError);
}

TEST_CASE("cone graph charts") {
  const Polynomial f = P("z^2 - x*y", kXYZ);
  const auto residue = adjunction_map({P("1", kXYZ), f}, 1);
  const auto first = graph(f, "y", "z^2", "x", {"|z|<=|x|", "|x|<=1"});
  const auto second = graph(f, "x", "z^2", "y", {"|z|<=|y|", "|y|<=1"});
  for (const auto* chart : {&first, &second}) {
    const auto r = graph_chart_mass(residue, *chart, 2, 12, 4000, 42);
    CHECK(r.verdict == Verdict::convergent);
    CHECK(std::abs(r.ratio - 0.25) <= 3 * r.ratio_sigma + 1e-9 * 0.25);
    CHECK(r.discarded == 0);
  }
  CHECK_THROWS_AS(graph(f, "y", "z", "x", {"|z|<=|x|"}), Error);
  CHECK_THROWS_AS(graph(f, "y", "z^2*y", "x", {"|z|<=|x|"}), Error);
  GraphChart unbounded = first;
  unbounded.region = {parse_region_constraint("|x|<=1", kXYZ)};
  CHECK_THROWS_AS(graph_chart_mass(residue, unbounded, 2, 6, 10, 1), NumericError);
}

TEST_CASE("graph masses do not depend on the worker count") {
  const Polynomial f = P("z^2 - x*y^3", kXYZ);
  const auto residue = adjunction_map({P("1 + z", kXYZ), f}, 1);
  const auto chart = graph(f, "x", "z^2", "y^3", {"|z|<=|y|", "|y|<=1", "|x|<=1"});
  const auto a = graph_chart_mass(residue, chart, 2, 9, 2000, 5, 1);
  const auto b = graph_chart_mass(residue, chart, 2, 9, 2000, 5, 4);
  CHECK(a.masses == b.masses);
  CHECK(a.errors == b.errors);
  const auto c = graph_chart_mass(residue, chart, 2, 9, 2000, 6, 4);
  CHECK(a.masses != c.masses);
}

TEST_CASE("negative control diverges and matches a grid integration") {
  const Polynomial f = P("z^2 - x*y^3", kXYZ);
  const auto residue = adjunction_map({P("1", kXYZ), f}, 1);
  const auto chart = graph(f, "x", "z^2", "y^3", {"|z|<=|y|", "|y|<=1", "|x|<=1"});
  const auto report = graph_chart_mass(residue, chart, 2, 9, 20000, 42);
  CHECK(report.verdict == Verdict::divergent);
  CHECK(report.ratio == doctest::Approx(2.0).epsilon(0.1));
  for (int k = 2; k <= 4; ++k) {
    const double grid = negative_control_grid_mass(k);
    const double mc = report.masses[static_cast<std::size_t>(k - 2)];
    CHECK(std::abs(mc - grid) <= 4 * report.errors[static_cast<std::size_t>(k - 2)] + 0.02 * grid);
  }
  CHECK(negative_control_grid_mass(4) / negative_control_grid_mass(3) == doctest::Approx(2.0).epsilon(0.02));
}
