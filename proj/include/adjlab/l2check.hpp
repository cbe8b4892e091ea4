#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "adjlab/adjunction.hpp"
#include "adjlab/polynomial.hpp"

namespace adjlab {

enum class Verdict { convergent, divergent, inconclusive };
std::string to_string(Verdict v);

/// t -> (p_1(t), ..., p_n(t)) on the disc |t| <= radius.
struct BranchParam {
  std::vector<Polynomial> components;  // polynomials in the single variable "t"
  double radius = 1.0;
};

/// Parses the component strings over the variable t and checks
/// f(param(t)) == 0 exactly. Throws ParseError or Error.
BranchParam make_branch(const Polynomial& f, const std::vector<std::string>& components, double radius);

/// |var| <= |rhs_var| or |var| <= bound.
struct RegionConstraint {
  std::size_t var = 0;
  std::optional<std::size_t> rhs_var;
  double bound = 0.0;
};

/// Parses "|z|<=|x|" or "|x|<=1".
RegionConstraint parse_region_constraint(const std::string& text, const std::vector<std::string>& variables);
std::string format(const RegionConstraint& c, const std::vector<std::string>& variables);

/// z_dependent = num / den over the other variables, restricted to a region.
struct GraphChart {
  std::size_t dependent = 0;
  Polynomial num;
  Polynomial den;
  std::vector<RegionConstraint> region;
  std::optional<std::size_t> radial;  // defaults to the first |a| <= |b| right-hand side
};

/// Checks that num and den avoid the dependent variable, den != 0 and
/// f(.., num/den, ..) * den^d == 0 exactly. Throws Error otherwise.
void validate_graph(const Polynomial& f, const GraphChart& chart);

struct DyadicReport {
  int k_min = 0;
  int k_max = 0;
  std::vector<double> masses;   // M(k) for k = k_min..k_max
  std::vector<double> errors;   // standard errors (0 for deterministic quadrature)
  double ratio = 0.0;
  double ratio_sigma = 0.0;
  Verdict verdict = Verdict::inconclusive;
  std::string method;           // "quadrature" or "monte_carlo"
  std::size_t samples = 0;      // per shell: quadrature nodes per axis or Monte Carlo samples
  std::uint64_t seed = 0;
  std::size_t discarded = 0;
};

struct RatioEstimate {
  double ratio = 0.0;
  double sigma = 0.0;
};

/// Geometric mean of M(k+1)/M(k) over the last ceil(S/2) shells, with a
/// delta-method standard error from the per-shell errors.
RatioEstimate ratio_estimate(const std::vector<double>& masses, const std::vector<double>& errors);

inline constexpr double kVerdictBand = 0.1;

/// convergent if the ratio is below 1 - 0.1, divergent above 1 + 0.1 or
/// when the masses of the last half never decrease, inconclusive
/// otherwise. Throws Error for fewer than 4 shells.
Verdict verdict(const std::vector<double>& masses);

/// Pull-back coefficient c(t) of a plane-curve residue along a branch.
std::complex<double> branch_coefficient(const ResidueForm& residue, const BranchParam& param,
                                        std::complex<double> t);

/// Shell masses of |c(t)|^2 on the annuli radius*2^{-k-1} <= |t| <= radius*2^{-k}
/// by Gauss-Legendre in r times the trapezoid rule in the angle.
DyadicReport curve_branch_mass(const ResidueForm& residue, const BranchParam& param, int k_min, int k_max,
                               std::size_t quadrature_nodes);

/// Monte Carlo shell masses of |h|^2, h the coefficient of the residue
/// pulled back to the independent coordinates of the graph. Shells are
/// dyadic in the radial variable. Each shell uses its own generator seeded
/// from (seed, k), so results do not depend on `workers`.
DyadicReport graph_chart_mass(const ResidueForm& residue, const GraphChart& chart, int k_min, int k_max,
                              std::size_t samples_per_shell, std::uint64_t seed, unsigned workers = 0);

/// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(std::size_t n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace adjlab
