#include "adjlab/adjunction.hpp"

#include <Eigen/Dense>
#include <bit>
#include <cmath>
#include <numbers>
#include <map>
#include <random>

#include "adjlab/errors.hpp"
#include "adjlab/multiplier.hpp"

namespace adjlab {

ResidueForm adjunction_map(const MeromorphicTopForm& omega, std::size_t mu) {
  if (omega.f.is_zero()) throw ZeroPolynomialError("adjunction: f must be nonzero");
  if (omega.g.variables() != omega.f.variables()) throw ShapeError("adjunction: g and f use different variables");
  if (mu >= omega.f.nvars()) throw ShapeError("adjunction: mu out of range");
  Polynomial d = partial_derivative(omega.f, mu);
  if (d.is_zero()) {
    throw Error("adjunction: d f / d " + omega.f.variables()[mu] + " vanishes identically; choose another mu");
  }
  return {mu % 2 == 0 ? 1 : -1, mu, omega.g, std::move(d)};
}

ResidueForm simplified(const ResidueForm& r) {
  ResidueForm out = r;
  if (out.denominator.leading_term().second < 0) {
    out.sign = -out.sign;
    out.denominator = -out.denominator;
  }
  if (out.sign < 0) {
    out.sign = 1;
    out.numerator = -out.numerator;
  }
  return out;
}

std::vector<std::size_t> admissible_mus(const Polynomial& f) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    if (f.depends_on(i)) out.push_back(i);
  }
  return out;
}

std::size_t default_mu(const Polynomial& f) {
  const auto mus = admissible_mus(f);
  if (mus.empty()) throw Error("adjunction: f is constant");
  return mus.back();
}

namespace {

using Form = std::map<std::uint32_t, Polynomial>;  // basis dz_I (bitmask I) -> coefficient

Form wedge(const Form& a, const Form& b, const std::vector<std::string>& vars) {
  Form out;
  for (const auto& [ia, ca] : a) {
    for (const auto& [ib, cb] : b) {
      if (ia & ib) continue;
      // Sign of sorting dz_I ^ dz_J into increasing order.
      int swaps = 0;
      for (std::uint32_t bits = ia; bits; bits &= bits - 1) {
        const int i = std::countr_zero(bits);
        swaps += std::popcount(ib & ((1u << i) - 1));
      }
      Polynomial term = ca * cb;
      if (swaps % 2) term = -term;
      auto [it, inserted] = out.try_emplace(ia | ib, vars);
      it->second += term;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

}  // namespace

bool residue_identity_check(const MeromorphicTopForm& omega, const ResidueForm& residue) {
  const auto& vars = omega.f.variables();
  const std::size_t n = vars.size();
  if (residue.mu >= n || !(residue.numerator == omega.g)) return false;
  if (residue.sign != 1 && residue.sign != -1) return false;

  Form df;
  for (std::size_t j = 0; j < n; ++j) {
    Polynomial d = partial_derivative(omega.f, j);
    if (!d.is_zero()) df.emplace(1u << j, std::move(d));
  }
  const std::uint32_t all = (n == 32) ? ~0u : (1u << n) - 1;
  Form eta;
  const Polynomial coef = Rational(residue.sign) * residue.numerator;
  if (!coef.is_zero()) eta.emplace(all & ~(1u << residue.mu), coef);

  Form expected;
  const Polynomial top = residue.denominator * residue.numerator;
  if (!top.is_zero()) expected.emplace(all, top);
  return wedge(df, eta, vars) == expected;
}

std::complex<double> evaluate_residue(const ResidueForm& r, std::span<const std::complex<double>> point,
                                      const std::vector<std::vector<std::complex<double>>>& frame) {
  const std::size_t n = point.size();
  if (frame.size() + 1 != n) throw ShapeError("evaluate_residue: frame needs n - 1 vectors");
  Eigen::MatrixXcd m(n - 1, n - 1);
  std::size_t row = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == r.mu) continue;
    for (std::size_t k = 0; k + 1 < n; ++k) m(row, k) = frame[k][j];
    ++row;
  }
  const std::complex<double> det = n == 1 ? std::complex<double>(1.0) : m.determinant();
  return double(r.sign) * evaluate(r.numerator, point) / evaluate(r.denominator, point) * det;
}

namespace {

std::complex<double> random_disc_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double radius = std::sqrt(u(rng));
  const double angle = 2.0 * std::numbers::pi * u(rng);
  return std::polar(radius, angle);
}

// Roots of f in variable s with the other coordinates fixed.
std::vector<std::complex<double>> roots_in(const Polynomial& f, std::size_t s,
                                           const std::vector<std::complex<double>>& point) {
  const auto deg = static_cast<std::size_t>(f.degree_in(s));
  std::vector<std::complex<double>> coef(deg + 1, 0.0);
  for (const auto& [m, c] : f.terms()) {
    std::complex<double> v = to_double(c);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i != s) v *= std::pow(point[i], static_cast<int>(m[i]));
    }
    coef[m[s]] += v;
  }
  double scale = 0.0;
  for (const auto& c : coef) scale = std::max(scale, std::abs(c));
  if (deg == 0 || std::abs(coef[deg]) < 1e-12 * scale) return {};
  if (deg == 1) return {-coef[0] / coef[1]};
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(deg, deg);
  for (std::size_t i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
  for (std::size_t i = 0; i < deg; ++i) companion(i, deg - 1) = -coef[i] / coef[deg];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  std::vector<std::complex<double>> out;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) out.push_back(solver.eigenvalues()[i]);
  return out;
}

}  // namespace

ConsistencyReport mu_consistency_check(const MeromorphicTopForm& omega, std::size_t mu1, std::size_t mu2,
                                       std::size_t samples, std::uint64_t seed) {
  const ResidueForm r1 = adjunction_map(omega, mu1);
  const ResidueForm r2 = adjunction_map(omega, mu2);
  const Polynomial& f = omega.f;
  const std::size_t n = f.nvars();

  std::size_t solve_var = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (f.degree_in(i) >= f.degree_in(solve_var)) solve_var = i;
  }
  std::vector<Polynomial> grad;
  for (std::size_t j = 0; j < n; ++j) grad.push_back(partial_derivative(f, j));

  ConsistencyReport report;
  const std::size_t max_attempts = 100 * samples + 100;
  for (std::size_t attempt = 0; report.samples < samples; ++attempt) {
    if (attempt >= max_attempts) {
      throw NumericError("only " + std::to_string(report.samples) + " regular points found in " +
                         std::to_string(max_attempts) + " attempts");
    }
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(attempt)};
    std::mt19937_64 rng(seq);
    std::vector<std::complex<double>> p(n);
    for (auto& z : p) z = random_disc_point(rng);
    const auto roots = roots_in(f, solve_var, p);
    if (roots.empty()) {
      ++report.rejected;
      continue;
    }
    p[solve_var] = roots[std::uniform_int_distribution<std::size_t>(0, roots.size() - 1)(rng)];

    Eigen::VectorXcd g(n);
    for (std::size_t j = 0; j < n; ++j) g(j) = std::conj(evaluate(grad[j], p));
    const double gnorm = g.norm();
    if (!(gnorm > 0.0) || std::abs(g(mu1)) < 1e-8 * gnorm || std::abs(g(mu2)) < 1e-8 * gnorm) {
      ++report.rejected;
      continue;
    }
    // Columns 1..n-1 of Q span the orthogonal complement of conj(grad f),
    // which is the kernel of df.
    const Eigen::MatrixXcd column = g;
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(column);
    const Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(n, n);
    std::vector<std::vector<std::complex<double>>> frame(n - 1, std::vector<std::complex<double>>(n));
    for (std::size_t k = 0; k + 1 < n; ++k) {
      for (std::size_t j = 0; j < n; ++j) frame[k][j] = q(j, k + 1);
    }
    const auto a = evaluate_residue(r1, p, frame);
    const auto b = evaluate_residue(r2, p, frame);
    const double dev = std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-12});
    report.max_deviation = std::max(report.max_deviation, dev);
    ++report.samples;
  }
  return report;
}

bool l2_criterion(const MeromorphicTopForm& omega, const ResolutionTree& tree) {
  if (!(omega.f == tree.f())) throw ShapeError("l2_criterion: form and tree use different f");
  return in_multiplier_ideal(omega.g, tree);
}

}  // namespace adjlab
