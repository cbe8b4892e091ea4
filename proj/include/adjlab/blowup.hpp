#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "adjlab/polynomial.hpp"
#include "adjlab/rational.hpp"

namespace adjlab {

using DivisorId = int;

/// Point to blow up, given in the coordinates of an existing chart.
struct BlowupCenter {
  std::string chart_id;
  std::vector<Rational> point;
};

/// Affine chart of a blown-up space together with the composite map to the
/// base. A chart produced by blowing up a point describes a neighbourhood of
/// the new exceptional divisor; exceptional divisors that miss the center are
/// not carried into it.
struct Chart {
  std::string id;
  std::vector<std::string> variables;
  /// Composite of all blow-ups, one polynomial per base coordinate.
  std::vector<Polynomial> map_to_base;
  /// Chart variable index -> exceptional divisor whose zero set it is.
  std::map<std::size_t, DivisorId> exceptional;

  std::string parent;                   // empty for the base chart
  std::optional<DivisorId> born_from;   // divisor created by the blow-up that made this chart
  std::size_t direction = 0;            // chart index i within that blow-up
  std::vector<std::vector<Rational>> centers;  // points of this chart that were blown up

  std::size_t dimension() const noexcept { return variables.size(); }
  bool is_base() const noexcept { return !born_from.has_value(); }
  /// Chart variable whose zero set is `divisor`, if visible here.
  std::optional<std::size_t> coordinate_of(DivisorId divisor) const;
};

/// Identity chart on the base variables, id "base".
Chart base_chart(const std::vector<std::string>& variables);

/// Blows up `center` (which must be a point of `chart`) and returns the n
/// covering charts. In chart i, with u the parent coordinates shifted so the
/// center sits at the origin, u_i = v_i and u_j = v_j * v_i for j != i; the
/// new divisor is {v_i = 0}. Chart ids extend the parent id with
/// "/E<divisor>.<i+1>", variables get the suffix "_<divisor>".
/// Throws ResolutionError when the center does not belong to the chart.
std::vector<Chart> blowup_point_charts(const Chart& chart, const BlowupCenter& center,
                                       DivisorId new_divisor);

/// f o (chart map to base). p must use the base variable list.
Polynomial pull_back(const Polynomial& p, const Chart& chart);

struct StrictSplit {
  Polynomial strict;
  std::map<DivisorId, Exponent> multiplicities;
};

/// Divides every visible exceptional coordinate out of a pulled-back
/// polynomial. Throws ZeroPolynomialError for a zero input.
StrictSplit strict_transform_split(const Polynomial& pullback, const Chart& chart);

/// Determinant of the Jacobian of the chart map, in chart variables.
Polynomial jacobian_determinant(const Chart& chart);

}  // namespace adjlab
