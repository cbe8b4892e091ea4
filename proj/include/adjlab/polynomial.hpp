#pragma once

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "adjlab/monomial.hpp"
#include "adjlab/rational.hpp"

namespace adjlab {

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// A polynomial carries its ordered variable list; binary operations
/// require both operands to use the same list. Zero coefficients are never
/// stored, and terms iterate in ascending graded-lex order.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational, GrlexLess>;

  Polynomial() = default;
  explicit Polynomial(std::vector<std::string> variables);

  static Polynomial constant(std::vector<std::string> variables, const Rational& value);
  static Polynomial variable(std::vector<std::string> variables, std::size_t index);
  static Polynomial term(std::vector<std::string> variables, Monomial monomial,
                         const Rational& coefficient = 1);

  const std::vector<std::string>& variables() const noexcept { return variables_; }
  std::size_t nvars() const noexcept { return variables_.size(); }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Constant term (0 when absent).
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;

  /// Total degree; -1 for the zero polynomial.
  long total_degree() const;
  /// Largest exponent of `var` among the terms; -1 for zero.
  long degree_in(std::size_t var) const;
  bool depends_on(std::size_t var) const;

  /// Largest term in graded-lex order. Requires a nonzero polynomial.
  const Terms::value_type& leading_term() const;

  /// Adds c * m to the polynomial, dropping the term if it cancels.
  void add_term(const Monomial& m, const Rational& c);

  /// Same polynomial viewed over a renamed variable list of equal length.
  Polynomial renamed(std::vector<std::string> variables) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

  Polynomial pow(unsigned exponent) const;

  bool operator==(const Polynomial& other) const;

 private:
  void require_same_ring(const Polynomial& other, const char* op) const;

  std::vector<std::string> variables_;
  Terms terms_;
};

/// Parses an expression over `variables` built from rational literals,
/// variable names, + - * / ^ and parentheses. Division is only allowed by
/// a nonzero constant; exponents must be non-negative integer literals.
/// Throws ParseError (with position) on malformed input or unknown names.
Polynomial parse_poly(std::string_view text, const std::vector<std::string>& variables);

/// Canonical text form: terms in descending graded-lex order, e.g.
/// "z1^3 - z2^2", "-3/2*x*y^2 + 1". The zero polynomial prints as "0".
std::string format(const Polynomial& p);
std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// Replaces variable i of p by images[i]. All images must share one
/// variable list, which becomes the variable list of the result.
Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images);

Polynomial partial_derivative(const Polynomial& p, std::size_t var);

/// Largest m such that var^m divides p. Throws ZeroPolynomialError for p = 0.
Exponent coordinate_order(const Polynomial& p, std::size_t var);

/// p / var^m. Throws DivisionError when var^m does not divide p.
Polynomial divide_by_coordinate_power(const Polynomial& p, std::size_t var, Exponent m);

/// Sets variable `var` to `value`; the variable list is unchanged.
Polynomial restrict_variable(const Polynomial& p, std::size_t var, const Rational& value);

std::complex<double> evaluate(const Polynomial& p, std::span<const std::complex<double>> point);

}  // namespace adjlab
