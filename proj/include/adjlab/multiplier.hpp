#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "adjlab/monomial.hpp"
#include "adjlab/polynomial.hpp"
#include "adjlab/rational.hpp"
#include "adjlab/resolution.hpp"

namespace adjlab {

/// Monomial ideal with a minimal generating set in descending grlex order.
/// The unit ideal is generated by the zero exponent vector.
struct MonomialIdeal {
  std::vector<std::string> variables;
  std::vector<Monomial> generators;

  static MonomialIdeal unit(std::vector<std::string> variables);
  static MonomialIdeal from_generators(std::vector<std::string> variables, std::vector<Monomial> gens);

  bool is_unit() const;
  bool contains(const Monomial& m) const;
  bool operator==(const MonomialIdeal&) const = default;
};

/// "z1^2*z2" style text; "1" for the zero exponent vector.
std::string format_monomial(const Monomial& m, const std::vector<std::string>& variables);
/// Comma separated generators, "1" for the unit ideal.
std::string format(const MonomialIdeal& ideal);
/// Parses "z1^3, z2^2". Every entry must be a single monomial with coefficient 1.
MonomialIdeal parse_monomial_ideal(const std::string& text, const std::vector<std::string>& variables);

struct MultiplierReport {
  std::vector<Exponent> thresholds;        // max(0, m_i - k_i)
  std::optional<MonomialIdeal> generators;  // empty when the tree is not monomial
  Rational lct;
  bool is_unit = false;
  std::uint64_t degree_bound = 0;
};

enum class CanonicalVerdict { canonical, not_canonical, not_applicable };
std::string to_string(CanonicalVerdict v);

std::vector<Exponent> multiplier_thresholds(const ResolutionTree& tree);

/// Divisorial membership test ord_{E_i}(g) >= max(0, m_i - k_i). Refuses
/// trees whose normal-crossings status is unverified.
bool in_multiplier_ideal(const Polynomial& g, const ResolutionTree& tree);

/// Orders of the pulled-back coordinate functions, one row per variable.
/// Orders of monomials follow by additivity.
std::vector<std::vector<Exponent>> coordinate_orders(const ResolutionTree& tree);
std::vector<Exponent> monomial_orders(const Monomial& m, const std::vector<std::vector<Exponent>>& coords);

/// Smallest enumeration degree that is guaranteed to contain every minimal
/// generator in the monomial situation: n * max threshold.
std::uint64_t default_multiplier_degree_bound(const ResolutionTree& tree);

/// Thresholds, lct and (in the monomial situation) the minimal monomial
/// generators of the multiplier ideal among monomials of degree <= bound.
MultiplierReport multiplier_generators(const ResolutionTree& tree,
                                       std::optional<std::uint64_t> degree_bound = std::nullopt);

/// Minimal monomials whose orders dominate m; their componentwise minimum
/// must equal m. Throws Error when the bound is too small.
MonomialIdeal find_ef_witnesses(const ResolutionTree& tree,
                                std::optional<std::uint64_t> degree_bound = std::nullopt);

/// True when every element has orders >= m and the componentwise minimum of
/// the orders is exactly m.
bool witness_set_valid(const std::vector<Polynomial>& witnesses, const ResolutionTree& tree);

/// min(1, min_i (k_i + 1) / m_i).
Rational lct(const ResolutionTree& tree);

CanonicalVerdict canonical_test(const ResolutionTree& tree, bool normal_assertion);

/// Largest eps with c * (convex combination of generators) + eps <= v + 1
/// componentwise; exact.
Rational howald_margin(const MonomialIdeal& ideal, const Monomial& v, const Rational& c);

/// True iff v + (1,...,1) lies in the interior of c * Newt(ideal).
bool howald_membership(const MonomialIdeal& ideal, const Monomial& v, const Rational& c);

/// Default bound sum_j floor(c * max exponent of z_j among the generators).
std::uint64_t default_howald_degree_bound(const MonomialIdeal& ideal, const Rational& c);

MonomialIdeal howald_generators(const MonomialIdeal& ideal, const Rational& c,
                                std::optional<std::uint64_t> degree_bound = std::nullopt);

}  // namespace adjlab
