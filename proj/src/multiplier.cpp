#include "adjlab/multiplier.hpp"

#include <algorithm>
#include <sstream>

#include "adjlab/errors.hpp"

namespace adjlab {

MonomialIdeal MonomialIdeal::unit(std::vector<std::string> variables) {
  const std::size_t n = variables.size();
  return {std::move(variables), {Monomial(n)}};
}

MonomialIdeal MonomialIdeal::from_generators(std::vector<std::string> variables, std::vector<Monomial> gens) {
  if (gens.empty()) throw Error("a monomial ideal needs at least one generator");
  for (const auto& g : gens) {
    if (g.size() != variables.size()) throw ShapeError("generator length does not match the variables");
  }
  std::vector<Monomial> minimal = minimalize(std::move(gens));
  std::reverse(minimal.begin(), minimal.end());
  return {std::move(variables), std::move(minimal)};
}

bool MonomialIdeal::is_unit() const { return generators.size() == 1 && generators.front().is_one(); }

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(generators.begin(), generators.end(), [&](const Monomial& g) { return g.divides(m); });
}

std::string format_monomial(const Monomial& m, const std::vector<std::string>& variables) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += variables[i];
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string format(const MonomialIdeal& ideal) {
  std::string out;
  for (const auto& g : ideal.generators) {
    if (!out.empty()) out += ", ";
    out += format_monomial(g, ideal.variables);
  }
  return out;
}

MonomialIdeal parse_monomial_ideal(const std::string& text, const std::vector<std::string>& variables) {
  std::vector<Monomial> gens;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const Polynomial p = parse_poly(item, variables);
    if (p.size() != 1 || p.leading_term().second != 1) {
      throw ParseError("ideal generator '" + item + "' is not a monic monomial", 0);
    }
    gens.push_back(p.leading_term().first);
  }
  return MonomialIdeal::from_generators(variables, std::move(gens));
}

std::string to_string(CanonicalVerdict v) {
  switch (v) {
    case CanonicalVerdict::canonical:
      return "canonical";
    case CanonicalVerdict::not_canonical:
      return "not_canonical";
    case CanonicalVerdict::not_applicable:
      return "not_applicable";
  }
  return "not_applicable";
}

namespace {

void require_snc(const ResolutionTree& tree) {
  if (tree.snc_status() == SncStatus::unverified) {
    std::string msg = "resolution is not known to have normal crossings";
    if (!tree.snc_witness().empty()) msg += ": " + tree.snc_witness();
    throw SncError(msg);
  }
}

bool dominates(const std::vector<Exponent>& a, const std::vector<Exponent>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return false;
  }
  return true;
}

Exponent max_of(const std::vector<Exponent>& v) {
  return v.empty() ? 0 : *std::max_element(v.begin(), v.end());
}

}  // namespace

std::vector<Exponent> multiplier_thresholds(const ResolutionTree& tree) {
  std::vector<Exponent> out;
  for (const auto& d : tree.divisors()) out.push_back(d.m > d.k ? d.m - d.k : 0);
  return out;
}

bool in_multiplier_ideal(const Polynomial& g, const ResolutionTree& tree) {
  require_snc(tree);
  return dominates(ord_along(g, tree), multiplier_thresholds(tree));
}

std::vector<std::vector<Exponent>> coordinate_orders(const ResolutionTree& tree) {
  std::vector<std::vector<Exponent>> out;
  for (std::size_t j = 0; j < tree.dimension(); ++j) {
    out.push_back(ord_along(Polynomial::variable(tree.variables(), j), tree));
  }
  return out;
}

std::vector<Exponent> monomial_orders(const Monomial& m, const std::vector<std::vector<Exponent>>& coords) {
  std::vector<Exponent> out(coords.empty() ? 0 : coords.front().size(), 0);
  for (std::size_t j = 0; j < m.size(); ++j) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += m[j] * coords[j][i];
  }
  return out;
}

std::uint64_t default_multiplier_degree_bound(const ResolutionTree& tree) {
  return std::max<std::uint64_t>(1, tree.dimension() * max_of(multiplier_thresholds(tree)));
}

MultiplierReport multiplier_generators(const ResolutionTree& tree, std::optional<std::uint64_t> degree_bound) {
  require_snc(tree);
  MultiplierReport report;
  report.thresholds = multiplier_thresholds(tree);
  report.lct = lct(tree);
  report.is_unit = max_of(report.thresholds) == 0;
  report.degree_bound = degree_bound.value_or(default_multiplier_degree_bound(tree));
  if (!tree.monomial_centers()) return report;

  if (report.is_unit) {
    report.generators = MonomialIdeal::unit(tree.variables());
    return report;
  }
  const auto coords = coordinate_orders(tree);
  std::vector<Monomial> members;
  for (const auto& m : monomials_up_to_degree(tree.dimension(), report.degree_bound)) {
    if (dominates(monomial_orders(m, coords), report.thresholds)) members.push_back(m);
  }
  if (members.empty()) {
    throw Error("no multiplier ideal member of degree <= " + std::to_string(report.degree_bound) +
                "; raise the degree bound");
  }
  report.generators = MonomialIdeal::from_generators(tree.variables(), std::move(members));
  return report;
}

MonomialIdeal find_ef_witnesses(const ResolutionTree& tree, std::optional<std::uint64_t> degree_bound) {
  if (!tree.monomial_centers()) {
    throw Error("witness search needs every blow-up centered at a chart origin");
  }
  std::vector<Exponent> m;
  for (const auto& d : tree.divisors()) m.push_back(d.m);
  const std::uint64_t bound =
      degree_bound.value_or(std::max<std::uint64_t>(1, tree.dimension() * max_of(m)));
  const auto coords = coordinate_orders(tree);
  std::vector<Monomial> members;
  for (const auto& mono : monomials_up_to_degree(tree.dimension(), bound)) {
    if (dominates(monomial_orders(mono, coords), m)) members.push_back(mono);
  }
  if (members.empty()) {
    throw Error("no witness set within degree bound " + std::to_string(bound) + "; raise the bound");
  }
  MonomialIdeal out = MonomialIdeal::from_generators(tree.variables(), std::move(members));
  std::vector<Exponent> lo = monomial_orders(out.generators.front(), coords);
  for (const auto& g : out.generators) {
    const auto o = monomial_orders(g, coords);
    for (std::size_t i = 0; i < lo.size(); ++i) lo[i] = std::min(lo[i], o[i]);
  }
  if (lo != m) {
    throw Error("no witness set within degree bound " + std::to_string(bound) + "; raise the bound");
  }
  return out;
}

bool witness_set_valid(const std::vector<Polynomial>& witnesses, const ResolutionTree& tree) {
  if (witnesses.empty()) return false;
  std::vector<Exponent> m;
  for (const auto& d : tree.divisors()) m.push_back(d.m);
  std::vector<Exponent> lo;
  for (const auto& w : witnesses) {
    const auto o = ord_along(w, tree);
    if (!dominates(o, m)) return false;
    if (lo.empty()) {
      lo = o;
    } else {
      for (std::size_t i = 0; i < lo.size(); ++i) lo[i] = std::min(lo[i], o[i]);
    }
  }
  return lo == m;
}

Rational lct(const ResolutionTree& tree) {
  Rational best = 1;
  for (const auto& d : tree.divisors()) {
    if (d.m == 0) continue;
    const Rational r(mpz_class(d.k + 1), mpz_class(d.m));
    if (r < best) best = r;
  }
  best.canonicalize();
  return best;
}

CanonicalVerdict canonical_test(const ResolutionTree& tree, bool normal_assertion) {
  if (!normal_assertion) return CanonicalVerdict::not_applicable;
  require_snc(tree);
  return max_of(multiplier_thresholds(tree)) == 0 ? CanonicalVerdict::canonical
                                                   : CanonicalVerdict::not_canonical;
}

namespace {

// Solves A x = b exactly; returns false when A is singular.
bool solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b, std::vector<Rational>& x) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return false;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
      b[r] -= factor * b[col];
    }
  }
  x.resize(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return true;
}

// Calls fn for every k-subset of {0..n-1}.
template <typename Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

Rational howald_margin(const MonomialIdeal& ideal, const Monomial& v, const Rational& c) {
  const std::size_t n = ideal.variables.size();
  if (v.size() != n) throw ShapeError("howald: monomial length does not match the ideal");
  if (ideal.generators.empty()) throw Error("howald: empty ideal");
  if (c <= 0) throw Error("howald: c must be positive");
  const auto& gens = ideal.generators;
  const std::size_t s = gens.size();

  // Maximize eps subject to c*S*lambda + eps <= v + 1, sum(lambda) = 1,
  // lambda >= 0. Vertices have |support| = |tight rows| <= n.
  std::optional<Rational> best;
  for (std::size_t k = 1; k <= std::min(n, s); ++k) {
    for_each_subset(s, k, [&](const std::vector<std::size_t>& support) {
      for_each_subset(n, k, [&](const std::vector<std::size_t>& rows) {
        // Unknowns: lambda over the support, then eps.
        std::vector<std::vector<Rational>> a(k + 1, std::vector<Rational>(k + 1));
        std::vector<Rational> b(k + 1);
        for (std::size_t r = 0; r < k; ++r) {
          for (std::size_t j = 0; j < k; ++j) a[r][j] = c * gens[support[j]][rows[r]];
          a[r][k] = 1;
          b[r] = v[rows[r]] + 1;
        }
        for (std::size_t j = 0; j < k; ++j) a[k][j] = 1;
        b[k] = 1;
        std::vector<Rational> x;
        if (!solve_exact(std::move(a), std::move(b), x)) return;
        for (std::size_t j = 0; j < k; ++j) {
          if (x[j] < 0) return;
        }
        for (std::size_t row = 0; row < n; ++row) {
          Rational lhs = x[k];
          for (std::size_t j = 0; j < k; ++j) lhs += c * gens[support[j]][row] * x[j];
          if (lhs > v[row] + 1) return;
        }
        if (!best || x[k] > *best) best = x[k];
      });
    });
  }
  if (!best) throw Error("howald: no feasible vertex");
  return *best;
}

bool howald_membership(const MonomialIdeal& ideal, const Monomial& v, const Rational& c) {
  return howald_margin(ideal, v, c) > 0;
}

std::uint64_t default_howald_degree_bound(const MonomialIdeal& ideal, const Rational& c) {
  std::uint64_t bound = 0;
  for (std::size_t j = 0; j < ideal.variables.size(); ++j) {
    Exponent top = 0;
    for (const auto& g : ideal.generators) top = std::max(top, g[j]);
    const Rational scaled = c * top;
    const mpz_class fl = scaled.get_num() / scaled.get_den();
    bound += fl.get_ui();
  }
  return std::max<std::uint64_t>(1, bound);
}

MonomialIdeal howald_generators(const MonomialIdeal& ideal, const Rational& c,
                                std::optional<std::uint64_t> degree_bound) {
  const std::uint64_t bound = degree_bound.value_or(default_howald_degree_bound(ideal, c));
  std::vector<Monomial> members;
  for (const auto& m : monomials_up_to_degree(ideal.variables.size(), bound)) {
    if (std::any_of(members.begin(), members.end(), [&](const Monomial& g) { return g.divides(m); })) continue;
    if (howald_membership(ideal, m, c)) members.push_back(m);
  }
  if (members.empty()) {
    throw Error("no multiplier ideal member of degree <= " + std::to_string(bound) + "; raise the degree bound");
  }
  return MonomialIdeal::from_generators(ideal.variables, std::move(members));
}

}  // namespace adjlab
