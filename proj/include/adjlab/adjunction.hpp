#pragma once

#include <complex>
#include <cstdint>
#include <cstddef>
#include <optional>
#include <vector>

#include "adjlab/polynomial.hpp"
#include "adjlab/resolution.hpp"

namespace adjlab {

/// g * dz_1 ^ ... ^ dz_n / f.
struct MeromorphicTopForm {
  Polynomial g;
  Polynomial f;
};

/// sign * g * dz_1 ^ .. (dz_mu omitted) .. ^ dz_n / denominator, restricted
/// to {f = 0}. `mu` is 0-based.
struct ResidueForm {
  int sign = 1;
  std::size_t mu = 0;
  Polynomial numerator;
  Polynomial denominator;
};

/// Residue with sign (-1)^mu (0-based mu) and denominator df/dz_mu.
/// Throws Error when that partial derivative vanishes identically.
ResidueForm adjunction_map(const MeromorphicTopForm& omega, std::size_t mu);

/// Same form with the sign folded into the denominator so that the leading
/// coefficient of the denominator is positive.
ResidueForm simplified(const ResidueForm& r);

/// Variables with a nonzero partial derivative of f.
std::vector<std::size_t> admissible_mus(const Polynomial& f);

/// Last admissible index; throws Error when f is constant.
std::size_t default_mu(const Polynomial& f);

/// Exact check of df ^ (sign * g * dz_hat_mu) = denominator * g * dz_1..dz_n,
/// plus numerator == omega.g and denominator == df/dz_mu up to the sign
/// convention.
bool residue_identity_check(const MeromorphicTopForm& omega, const ResidueForm& residue);

/// Value of the residue on tangent vectors (columns of `frame`, n x (n-1))
/// at a point of V.
std::complex<double> evaluate_residue(const ResidueForm& r, std::span<const std::complex<double>> point,
                                      const std::vector<std::vector<std::complex<double>>>& frame);

struct ConsistencyReport {
  double max_deviation = 0.0;
  std::size_t samples = 0;
  std::size_t rejected = 0;
};

/// Samples regular points of V, evaluates both residues on an orthonormal
/// frame of the tangent space and returns the largest relative deviation.
/// Throws NumericError when not enough regular points are found.
ConsistencyReport mu_consistency_check(const MeromorphicTopForm& omega, std::size_t mu1, std::size_t mu2,
                                       std::size_t samples, std::uint64_t seed);

/// Square-integrability of the residue, decided through the multiplier
/// ideal of the tree.
bool l2_criterion(const MeromorphicTopForm& omega, const ResolutionTree& tree);

}  // namespace adjlab
