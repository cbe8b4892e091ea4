#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "adjlab/blowup.hpp"
#include "adjlab/polynomial.hpp"

namespace adjlab {

enum class SncStatus { verified, asserted, unverified };

std::string to_string(SncStatus status);

/// Exceptional prime divisor E_i of the resolution.
struct ExceptionalDivisor {
  DivisorId id = 0;
  /// Order of the pulled-back f along E_i (coefficient in E_f).
  Exponent m = 0;
  /// Coefficient of E_i in the relative canonical divisor K_{M'/M}.
  Exponent k = 0;
  /// 1-based index of the blow-up that created E_i.
  int birth_step = 0;
  /// First chart in which E_i is a coordinate hyperplane, and that coordinate.
  std::string birth_chart;
  std::size_t birth_variable = 0;
  /// The blown-up point.
  BlowupCenter center;
};

/// Sequence of point blow-ups over the base, with every chart ever created
/// (in creation order) and the exceptional divisors.
class ResolutionTree {
 public:
  explicit ResolutionTree(Polynomial f);

  const std::vector<std::string>& variables() const noexcept { return f_.variables(); }
  std::size_t dimension() const noexcept { return f_.nvars(); }
  const Polynomial& f() const noexcept { return f_; }
  const std::vector<Chart>& charts() const noexcept { return charts_; }
  const std::vector<ExceptionalDivisor>& divisors() const noexcept { return divisors_; }
  SncStatus snc_status() const noexcept { return snc_status_; }
  const std::string& snc_witness() const noexcept { return snc_witness_; }

  const Chart& chart(const std::string& id) const;
  std::size_t chart_index(const std::string& id) const;
  const ExceptionalDivisor& divisor(DivisorId id) const;

  /// Charts in which `id` is a coordinate hyperplane.
  std::vector<const Chart*> charts_containing(DivisorId id) const;

  /// True when every blow-up center was the origin of its chart, so every
  /// chart map is monomial.
  bool monomial_centers() const noexcept { return monomial_centers_; }

  /// Performs one point blow-up, recording m and k of the new divisor.
  /// The discrepancy follows k_new = (n - 1) + sum of k_j over the
  /// exceptional divisors through the center.
  DivisorId blow_up(const BlowupCenter& center);

  void set_snc_status(SncStatus status, std::string witness = {});

 private:
  Polynomial f_;
  std::vector<Chart> charts_;
  std::vector<ExceptionalDivisor> divisors_;
  SncStatus snc_status_ = SncStatus::unverified;
  std::string snc_witness_;
  bool monomial_centers_ = true;
};

struct SncReport {
  SncStatus status = SncStatus::unverified;
  std::string witness;  // empty when verified
};

inline constexpr int kDefaultMaxSteps = 32;

/// Blows up rational non-SNC points of a plane curve until the total
/// transform has simple normal crossings. `forced` centers are executed
/// first. Throws ResolutionError on max_steps, on non-rational required
/// centers (with the witness polynomial) and on non-squarefree input.
ResolutionTree resolve_plane_curve(const Polynomial& f, int max_steps = kDefaultMaxSteps,
                                   const std::vector<BlowupCenter>& forced = {});

/// Executes the given blow-ups. The status is verified when the plane-curve
/// check (or the smooth-hypersurface check) succeeds, otherwise asserted
/// when `snc_assertion` is set and unverified if not.
ResolutionTree resolve_scripted(const Polynomial& f, const std::vector<BlowupCenter>& script,
                                bool snc_assertion);

/// Order of the pull-back of g along each exceptional divisor, in divisor
/// order. Throws ZeroPolynomialError for g = 0.
std::vector<Exponent> ord_along(const Polynomial& g, const ResolutionTree& tree);

/// Order of the pull-back of g along one divisor, computed in a given chart.
Exponent ord_along_in_chart(const Polynomial& g, const Chart& chart, DivisorId divisor);

/// Exact normal-crossings check. Plane curves: every chart's relevant locus
/// is examined with exact univariate root finding over Q. Higher dimension:
/// only the trivial case (no blow-ups, some partial of f a nonzero
/// constant) verifies.
SncReport snc_check(const ResolutionTree& tree);

/// Rational non-SNC points of one chart (excluding points already blown up).
/// Base chart: singular points of f. Child chart: points on its newest
/// divisor where the strict transform is tangent, singular, or meets a
/// second exceptional divisor. Plane curves only. Throws ResolutionError
/// when a non-rational point may be involved.
std::vector<std::vector<Rational>> non_snc_points(const ResolutionTree& tree, const Chart& chart);

/// Rational common zeros of polynomials in two variables. Throws
/// ResolutionError when the zero set is infinite or possibly contains
/// non-rational points.
std::vector<std::vector<Rational>> rational_common_zeros(const std::vector<Polynomial>& polys);

}  // namespace adjlab
