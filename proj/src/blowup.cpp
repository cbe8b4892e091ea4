#include "adjlab/blowup.hpp"

#include <algorithm>
#include <numeric>

#include "adjlab/errors.hpp"

namespace adjlab {

std::optional<std::size_t> Chart::coordinate_of(DivisorId divisor) const {
  for (const auto& [var, id] : exceptional) {
    if (id == divisor) return var;
  }
  return std::nullopt;
}

Chart base_chart(const std::vector<std::string>& variables) {
  Chart c;
  c.id = "base";
  c.variables = variables;
  for (std::size_t i = 0; i < variables.size(); ++i) {
    c.map_to_base.push_back(Polynomial::variable(variables, i));
  }
  return c;
}

std::vector<Chart> blowup_point_charts(const Chart& chart, const BlowupCenter& center,
                                       DivisorId new_divisor) {
  const std::size_t n = chart.dimension();
  if (center.chart_id != chart.id) {
    throw ResolutionError("center refers to chart '" + center.chart_id + "', not '" + chart.id + "'");
  }
  if (center.point.size() != n) {
    throw ResolutionError("center in chart '" + chart.id + "' needs " + std::to_string(n) +
                          " coordinates");
  }
  if (n < 2) throw ResolutionError("point blow-ups need dimension >= 2");
  if (!chart.is_base()) {
    // Points off the newest divisor are represented in an ancestor chart.
    if (center.point[chart.direction] != 0) {
      throw ResolutionError("center is not on the exceptional divisor E" +
                            std::to_string(*chart.born_from) + " of chart '" + chart.id + "'");
    }
  }

  std::vector<std::string> names;
  for (const auto& v : chart.variables) {
    const auto underscore = v.rfind('_');
    const std::string stem = (chart.is_base() || underscore == std::string::npos) ? v : v.substr(0, underscore);
    names.push_back(stem + "_" + std::to_string(new_divisor));
  }

  std::vector<Chart> out;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Polynomial> local;
    const Polynomial vi = Polynomial::variable(names, i);
    for (std::size_t j = 0; j < n; ++j) {
      Polynomial image = (j == i) ? vi : Polynomial::variable(names, j) * vi;
      image += Polynomial::constant(names, center.point[j]);
      local.push_back(std::move(image));
    }

    Chart c;
    c.id = chart.id + "/E" + std::to_string(new_divisor) + "." + std::to_string(i + 1);
    c.variables = names;
    for (const auto& component : chart.map_to_base) c.map_to_base.push_back(substitute(component, local));
    c.exceptional[i] = new_divisor;
    for (const auto& [var, id] : chart.exceptional) {
      if (var != i && center.point[var] == 0) c.exceptional[var] = id;
    }
    c.parent = chart.id;
    c.born_from = new_divisor;
    c.direction = i;
    out.push_back(std::move(c));
  }
  return out;
}

Polynomial pull_back(const Polynomial& p, const Chart& chart) {
  if (p.nvars() != chart.map_to_base.size()) {
    throw ShapeError("pull_back: polynomial has " + std::to_string(p.nvars()) +
                     " variables, base has " + std::to_string(chart.map_to_base.size()));
  }
  return substitute(p, chart.map_to_base);
}

StrictSplit strict_transform_split(const Polynomial& pullback, const Chart& chart) {
  if (pullback.is_zero()) throw ZeroPolynomialError("strict transform of the zero polynomial");
  StrictSplit split{pullback, {}};
  for (const auto& [var, id] : chart.exceptional) {
    const Exponent m = coordinate_order(split.strict, var);
    split.strict = divide_by_coordinate_power(split.strict, var, m);
    split.multiplicities[id] = m;
  }
  return split;
}

Polynomial jacobian_determinant(const Chart& chart) {
  const std::size_t n = chart.dimension();
  if (chart.map_to_base.size() != n) throw ShapeError("jacobian_determinant: non-square chart map");
  std::vector<std::vector<Polynomial>> jac(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) jac[r].push_back(partial_derivative(chart.map_to_base[r], c));
  }
  // Leibniz expansion; n is tiny.
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial det(chart.variables);
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) inversions += perm[a] > perm[b] ? 1 : 0;
    }
    Polynomial term = Polynomial::constant(chart.variables, inversions % 2 ? -1 : 1);
    for (std::size_t r = 0; r < n && !term.is_zero(); ++r) term *= jac[r][perm[r]];
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

}  // namespace adjlab
