#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "adjlab/polynomial.hpp"
#include "adjlab/rational.hpp"

namespace adjlab {

/// Dense univariate polynomial over Q, coefficients stored lowest degree
/// first with no trailing zeros. Used for exact elimination and root
/// isolation over the rationals.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coefficients);
  static UPoly constant(const Rational& c);
  /// x - root
  static UPoly linear_factor(const Rational& root);

  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  Rational coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  const Rational& leading() const;

  Rational operator()(const Rational& x) const;

  UPoly derivative() const;
  UPoly monic() const;

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  bool operator==(const UPoly&) const = default;

  /// Euclidean division: returns (quotient, remainder).
  std::pair<UPoly, UPoly> divmod(const UPoly& divisor) const;
  /// Exact quotient; throws DivisionError when the remainder is nonzero.
  UPoly exact_div(const UPoly& divisor) const;

  /// Renders as a Polynomial in a single variable called `var`.
  Polynomial to_polynomial(const std::string& var) const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(UPoly a, UPoly b);

/// Product of the distinct irreducible factors (monic), i.e. p / gcd(p, p').
UPoly squarefree_part(const UPoly& p);

/// Distinct rational roots in increasing order. Requires p != 0.
std::vector<Rational> rational_roots(const UPoly& p);

/// p with every rational root divided out (square-free input gives the
/// part of p that has only irrational roots). Monic.
UPoly irrational_part(const UPoly& squarefree);

/// Multiplicity of `root` as a zero of p (p != 0).
unsigned root_multiplicity(const UPoly& p, const Rational& root);

/// Views p as a univariate polynomial in variable `var`; every other
/// variable must be absent. Throws ShapeError otherwise.
UPoly to_upoly(const Polynomial& p, std::size_t var);

/// Coefficients of p as a polynomial in `main_var` over Q[`coef_var`]:
/// result[i] is the coefficient of main_var^i. p may only involve these two
/// variables.
std::vector<UPoly> bivariate_coefficients(const Polynomial& p, std::size_t main_var,
                                          std::size_t coef_var);

/// Resultant with respect to the main variable of two polynomials given as
/// coefficient lists over Q[y] (see bivariate_coefficients). Computed as the
/// Sylvester determinant by fraction-free elimination.
UPoly resultant(const std::vector<UPoly>& a, const std::vector<UPoly>& b);

}  // namespace adjlab
