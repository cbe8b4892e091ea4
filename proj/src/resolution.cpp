#include "adjlab/resolution.hpp"

#include <algorithm>

#include "adjlab/errors.hpp"
#include "adjlab/univariate.hpp"

namespace adjlab {

std::string to_string(SncStatus status) {
  switch (status) {
    case SncStatus::verified:
      return "verified";
    case SncStatus::asserted:
      return "asserted";
    case SncStatus::unverified:
      return "unverified";
  }
  return "unverified";
}

ResolutionTree::ResolutionTree(Polynomial f) : f_(std::move(f)) {
  if (f_.is_zero()) throw ZeroPolynomialError("the hypersurface equation must be nonzero");
  charts_.push_back(base_chart(f_.variables()));
}

const Chart& ResolutionTree::chart(const std::string& id) const { return charts_[chart_index(id)]; }

std::size_t ResolutionTree::chart_index(const std::string& id) const {
  for (std::size_t i = 0; i < charts_.size(); ++i) {
    if (charts_[i].id == id) return i;
  }
  throw ResolutionError("unknown chart '" + id + "'");
}

const ExceptionalDivisor& ResolutionTree::divisor(DivisorId id) const {
  for (const auto& d : divisors_) {
    if (d.id == id) return d;
  }
  throw ResolutionError("unknown divisor E" + std::to_string(id));
}

std::vector<const Chart*> ResolutionTree::charts_containing(DivisorId id) const {
  std::vector<const Chart*> out;
  for (const auto& c : charts_) {
    if (c.coordinate_of(id)) out.push_back(&c);
  }
  return out;
}

DivisorId ResolutionTree::blow_up(const BlowupCenter& center) {
  const std::size_t parent_index = chart_index(center.chart_id);
  const DivisorId id = static_cast<DivisorId>(divisors_.size()) + 1;
  std::vector<Chart> children = blowup_point_charts(charts_[parent_index], center, id);
  Chart& parent = charts_[parent_index];
  if (std::find(parent.centers.begin(), parent.centers.end(), center.point) != parent.centers.end()) {
    throw ResolutionError("point already blown up in chart '" + parent.id + "'");
  }

  ExceptionalDivisor d;
  d.id = id;
  d.birth_step = id;
  d.birth_chart = children.front().id;
  d.birth_variable = 0;
  d.center = center;
  d.m = coordinate_order(pull_back(f_, children.front()), 0);
  d.k = static_cast<Exponent>(dimension() - 1);
  for (const auto& [var, existing] : parent.exceptional) {
    if (center.point[var] == 0) d.k += divisor(existing).k;
  }

  if (std::any_of(center.point.begin(), center.point.end(), [](const Rational& q) { return q != 0; })) {
    monomial_centers_ = false;
  }
  parent.centers.push_back(center.point);
  divisors_.push_back(d);
  for (auto& c : children) charts_.push_back(std::move(c));
  return id;
}

void ResolutionTree::set_snc_status(SncStatus status, std::string witness) {
  snc_status_ = status;
  snc_witness_ = std::move(witness);
}

Exponent ord_along_in_chart(const Polynomial& g, const Chart& chart, DivisorId divisor) {
  const auto var = chart.coordinate_of(divisor);
  if (!var) {
    throw ResolutionError("divisor E" + std::to_string(divisor) + " is not visible in chart '" +
                          chart.id + "'");
  }
  if (g.is_zero()) throw ZeroPolynomialError("order of the zero polynomial is infinite");
  return coordinate_order(pull_back(g, chart), *var);
}

std::vector<Exponent> ord_along(const Polynomial& g, const ResolutionTree& tree) {
  if (g.is_zero()) throw ZeroPolynomialError("order of the zero polynomial is infinite");
  if (g.variables() != tree.variables()) throw ShapeError("ord_along: g must use the base variables");
  std::vector<Exponent> out;
  for (const auto& d : tree.divisors()) {
    out.push_back(ord_along_in_chart(g, tree.chart(d.birth_chart), d.id));
  }
  return out;
}

namespace {

std::string point_text(const std::vector<Rational>& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ", " : "") + to_string(p[i]);
  return s + ")";
}

std::vector<Polynomial> nonzero(const std::vector<Polynomial>& polys) {
  std::vector<Polynomial> out;
  for (const auto& p : polys) {
    if (!p.is_zero()) out.push_back(p);
  }
  return out;
}

}  // namespace

std::vector<std::vector<Rational>> rational_common_zeros(const std::vector<Polynomial>& input) {
  const std::vector<Polynomial> polys = nonzero(input);
  if (polys.empty()) throw InfiniteZeroSetError("common zero set is the whole plane");
  const auto& vars = polys.front().variables();
  if (vars.size() != 2) throw ShapeError("rational_common_zeros expects two variables");
  for (const auto& p : polys) {
    if (p.is_constant()) return {};
  }

  // Eliminate the first variable: every common zero has its second
  // coordinate among the roots of h.
  UPoly h;
  std::vector<const Polynomial*> with_x;
  for (const auto& p : polys) {
    if (p.depends_on(0)) {
      with_x.push_back(&p);
    } else {
      h = gcd(h, to_upoly(p, 1));
    }
  }
  for (std::size_t i = 0; i < with_x.size(); ++i) {
    for (std::size_t j = i + 1; j < with_x.size(); ++j) {
      const UPoly r = resultant(bivariate_coefficients(*with_x[i], 0, 1),
                                bivariate_coefficients(*with_x[j], 0, 1));
      // A shared factor gives a zero resultant; other pairs may still cut it down.
      if (!r.is_zero()) h = gcd(h, r);
    }
  }
  if (h.is_zero()) throw InfiniteZeroSetError("common zero set is not finite", format(polys.front()));
  if (h.degree() == 0) return {};

  const UPoly irr_y = irrational_part(squarefree_part(h));
  if (irr_y.degree() > 0) {
    throw ResolutionError("common zeros may have non-rational coordinates",
                          format(irr_y.to_polynomial(vars[1])));
  }

  std::vector<std::vector<Rational>> zeros;
  for (const auto& y0 : rational_roots(h)) {
    UPoly g;
    for (const auto& p : polys) g = gcd(g, to_upoly(restrict_variable(p, 1, y0), 0));
    if (g.is_zero()) {
      throw InfiniteZeroSetError("common zero set contains the line " + vars[1] + " = " + to_string(y0));
    }
    if (g.degree() == 0) continue;
    const UPoly irr_x = irrational_part(squarefree_part(g));
    if (irr_x.degree() > 0) {
      throw ResolutionError("common zeros with " + vars[1] + " = " + to_string(y0) +
                                " have non-rational coordinates",
                            format(irr_x.to_polynomial(vars[0])));
    }
    for (const auto& x0 : rational_roots(g)) zeros.push_back({x0, y0});
  }
  std::sort(zeros.begin(), zeros.end());
  return zeros;
}

std::vector<std::vector<Rational>> non_snc_points(const ResolutionTree& tree, const Chart& chart) {
  if (tree.dimension() != 2) throw ResolutionError("non_snc_points supports plane curves only");
  std::vector<std::vector<Rational>> points;
  if (chart.is_base()) {
    const Polynomial& f = tree.f();
    try {
      points = rational_common_zeros({f, partial_derivative(f, 0), partial_derivative(f, 1)});
    } catch (const InfiniteZeroSetError&) {
      throw ResolutionError("f is not squarefree (its singular locus is not finite)", format(f));
    }
  } else {
    const std::size_t e_var = chart.direction;
    const std::size_t other = 1 - e_var;
    const Polynomial strict = strict_transform_split(pull_back(tree.f(), chart), chart).strict;
    const UPoly s = to_upoly(restrict_variable(strict, e_var, 0), other);
    const bool other_exceptional = chart.exceptional.count(other) > 0;
    auto as_point = [&](const Rational& t) {
      std::vector<Rational> p(2);
      p[other] = t;
      return p;
    };
    if (e_var == 0) {
      // Whole divisor line in this chart.
      const UPoly repeated = gcd(s, s.derivative());
      if (repeated.degree() > 0) {
        const UPoly irr = irrational_part(squarefree_part(repeated));
        if (irr.degree() > 0) {
          throw ResolutionError("strict transform is tangent to E" + std::to_string(*chart.born_from) +
                                    " at non-rational points in chart '" + chart.id + "'",
                                format(irr.to_polynomial(chart.variables[other])));
        }
        for (const auto& t : rational_roots(repeated)) points.push_back(as_point(t));
      }
      if (other_exceptional && s(0) == 0) points.push_back(as_point(0));
    } else if (s(0) == 0 && (other_exceptional || root_multiplicity(s, 0) >= 2)) {
      // The rest of the divisor line is covered by the sibling chart.
      points.push_back(as_point(0));
    }
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  std::erase_if(points, [&](const std::vector<Rational>& p) {
    return std::find(chart.centers.begin(), chart.centers.end(), p) != chart.centers.end();
  });
  return points;
}

SncReport snc_check(const ResolutionTree& tree) {
  if (tree.dimension() == 2) {
    for (const auto& chart : tree.charts()) {
      try {
        const auto bad = non_snc_points(tree, chart);
        if (!bad.empty()) {
          return {SncStatus::unverified,
                  "chart '" + chart.id + "': not normal crossings at " + point_text(bad.front())};
        }
      } catch (const ResolutionError& e) {
        return {SncStatus::unverified, "chart '" + chart.id + "': " + e.what()};
      }
    }
    return {SncStatus::verified, {}};
  }
  if (tree.divisors().empty()) {
    for (std::size_t i = 0; i < tree.dimension(); ++i) {
      const Polynomial d = partial_derivative(tree.f(), i);
      if (!d.is_zero() && d.is_constant()) return {SncStatus::verified, {}};
    }
    return {SncStatus::unverified, "no nonvanishing partial derivative certificate"};
  }
  return {SncStatus::unverified, "exact normal-crossings check covers plane curves only"};
}

ResolutionTree resolve_plane_curve(const Polynomial& f, int max_steps,
                                   const std::vector<BlowupCenter>& forced) {
  if (f.nvars() != 2) throw ResolutionError("resolve_plane_curve needs a polynomial in 2 variables");
  ResolutionTree tree(f);
  int steps = 0;
  auto step = [&](const BlowupCenter& c) {
    if (steps >= max_steps) {
      throw ResolutionError("no normal-crossings resolution within " + std::to_string(max_steps) +
                            " blow-ups");
    }
    tree.blow_up(c);
    ++steps;
  };
  for (const auto& c : forced) step(c);
  for (std::size_t i = 0; i < tree.charts().size(); ++i) {
    const Chart chart = tree.charts()[i];
    for (const auto& p : non_snc_points(tree, chart)) step({chart.id, p});
  }
  tree.set_snc_status(SncStatus::verified);
  return tree;
}

ResolutionTree resolve_scripted(const Polynomial& f, const std::vector<BlowupCenter>& script,
                                bool snc_assertion) {
  ResolutionTree tree(f);
  for (const auto& c : script) tree.blow_up(c);
  SncReport report = snc_check(tree);
  if (report.status == SncStatus::verified) {
    tree.set_snc_status(SncStatus::verified);
  } else {
    tree.set_snc_status(snc_assertion ? SncStatus::asserted : SncStatus::unverified, report.witness);
  }
  return tree;
}

}  // namespace adjlab
