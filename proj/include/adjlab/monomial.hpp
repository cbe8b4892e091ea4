#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace adjlab {

using Exponent = std::uint32_t;

/// Exponent vector z^a = z_1^{a_1} ... z_n^{a_n}.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exponents_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exponents) : exponents_(std::move(exponents)) {}
  Monomial(std::initializer_list<Exponent> exponents) : exponents_(exponents) {}

  static Monomial unit(std::size_t nvars, std::size_t var, Exponent power = 1);

  std::size_t size() const noexcept { return exponents_.size(); }
  Exponent operator[](std::size_t i) const { return exponents_[i]; }
  Exponent& operator[](std::size_t i) { return exponents_[i]; }
  std::span<const Exponent> exponents() const noexcept { return exponents_; }

  std::uint64_t degree() const noexcept;
  bool is_one() const noexcept;

  /// True when this monomial divides `other` (same length required).
  bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; requires divides(other) on the reversed roles.
  Monomial operator/(const Monomial& divisor) const;

  bool operator==(const Monomial&) const = default;

 private:
  std::vector<Exponent> exponents_;
};

/// Graded lexicographic order: total degree first, then lexicographic with
/// the first variable most significant.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b);

/// Removes every monomial divisible by another one in the set and returns
/// the survivors in ascending grlex order.
std::vector<Monomial> minimalize(std::vector<Monomial> monomials);

/// All exponent vectors of length nvars with total degree <= max_degree,
/// in ascending grlex order.
std::vector<Monomial> monomials_up_to_degree(std::size_t nvars, std::uint64_t max_degree);

}  // namespace adjlab
