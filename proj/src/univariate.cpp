#include "adjlab/univariate.hpp"

#include <algorithm>
#include <set>

#include "adjlab/errors.hpp"

namespace adjlab {

UPoly::UPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

UPoly UPoly::constant(const Rational& c) { return UPoly(std::vector<Rational>{c}); }

UPoly UPoly::linear_factor(const Rational& root) {
  return UPoly(std::vector<Rational>{Rational(-root), Rational(1)});
}

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& UPoly::leading() const {
  if (coeffs_.empty()) throw ZeroPolynomialError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational UPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly UPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (is_zero()) return {};
  std::vector<Rational> m = coeffs_;
  const Rational lead = coeffs_.back();
  for (auto& c : m) c /= lead;
  return UPoly(std::move(m));
}

UPoly UPoly::operator-() const {
  std::vector<Rational> m = coeffs_;
  for (auto& c : m) c = -c;
  return UPoly(std::move(m));
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coefficient(i) + b.coefficient(i);
  return UPoly(std::move(out));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UPoly(std::move(out));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& divisor) const {
  if (divisor.is_zero()) throw DivisionError("division by the zero polynomial");
  std::vector<Rational> rem = coeffs_;
  const long dd = divisor.degree();
  if (degree() < dd) return {UPoly{}, *this};
  std::vector<Rational> quot(static_cast<std::size_t>(degree() - dd + 1));
  const Rational& lead = divisor.leading();
  for (long k = degree() - dd; k >= 0; --k) {
    const Rational q = rem[static_cast<std::size_t>(k + dd)] / lead;
    quot[static_cast<std::size_t>(k)] = q;
    if (q == 0) continue;
    for (long j = 0; j <= dd; ++j) {
      rem[static_cast<std::size_t>(k + j)] -= q * divisor.coeffs_[static_cast<std::size_t>(j)];
    }
  }
  return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

UPoly UPoly::exact_div(const UPoly& divisor) const {
  auto [q, r] = divmod(divisor);
  if (!r.is_zero()) throw DivisionError("inexact univariate division");
  return q;
}

Polynomial UPoly::to_polynomial(const std::string& var) const {
  Polynomial p(std::vector<std::string>{var});
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    p.add_term(Monomial{static_cast<Exponent>(i)}, coeffs_[i]);
  }
  return p;
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UPoly squarefree_part(const UPoly& p) {
  if (p.degree() <= 0) return p.monic();
  return p.exact_div(gcd(p, p.derivative())).monic();
}

namespace {

std::vector<Integer> positive_divisors(Integer n) {
  n = abs(n);
  std::vector<std::pair<Integer, unsigned>> factors;
  for (Integer d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    factors.emplace_back(d, e);
  }
  if (n > 1) factors.emplace_back(n, 1);
  std::vector<Integer> divisors{Integer(1)};
  for (const auto& [prime, power] : factors) {
    const std::size_t count = divisors.size();
    Integer pk = 1;
    for (unsigned e = 1; e <= power; ++e) {
      pk *= prime;
      for (std::size_t i = 0; i < count; ++i) divisors.push_back(divisors[i] * pk);
    }
  }
  return divisors;
}

// Integer coefficients with gcd 1, lowest degree first.
std::vector<Integer> primitive_integer_coefficients(const UPoly& p) {
  Integer lcm_den = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> ints;
  Integer content = 0;
  for (const auto& c : p.coefficients()) {
    Integer v = c.get_num() * (lcm_den / c.get_den());
    ints.push_back(v);
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
  }
  for (auto& v : ints) v /= content;
  return ints;
}

}  // namespace

std::vector<Rational> rational_roots(const UPoly& p) {
  if (p.is_zero()) throw ZeroPolynomialError("rational_roots of the zero polynomial");
  UPoly q = squarefree_part(p);
  std::set<Rational> roots;
  if (q.degree() >= 1 && q.coefficient(0) == 0) {
    roots.insert(0);
    q = q.exact_div(UPoly::linear_factor(0));
  }
  if (q.degree() >= 1) {
    const auto ints = primitive_integer_coefficients(q);
    const auto nums = positive_divisors(ints.front());
    const auto dens = positive_divisors(ints.back());
    for (const auto& a : nums) {
      for (const auto& b : dens) {
        for (int sign : {1, -1}) {
          Rational r(Integer(sign * a), b);
          r.canonicalize();
          if (roots.count(r) == 0 && q(r) == 0) roots.insert(r);
        }
      }
    }
  }
  return {roots.begin(), roots.end()};
}

UPoly irrational_part(const UPoly& squarefree) {
  UPoly rest = squarefree.monic();
  for (const auto& r : rational_roots(squarefree)) rest = rest.exact_div(UPoly::linear_factor(r));
  return rest;
}

unsigned root_multiplicity(const UPoly& p, const Rational& root) {
  if (p.is_zero()) throw ZeroPolynomialError("root multiplicity in the zero polynomial");
  unsigned m = 0;
  UPoly q = p;
  const UPoly lin = UPoly::linear_factor(root);
  for (;;) {
    auto [quot, rem] = q.divmod(lin);
    if (!rem.is_zero()) return m;
    q = std::move(quot);
    ++m;
  }
}

UPoly to_upoly(const Polynomial& p, std::size_t var) {
  if (var >= p.nvars()) throw ShapeError("to_upoly: variable index out of range");
  std::vector<Rational> coeffs(static_cast<std::size_t>(std::max(0L, p.degree_in(var) + 1)));
  for (const auto& [m, c] : p.terms()) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i != var && m[i] != 0) throw ShapeError("to_upoly: polynomial involves other variables");
    }
    coeffs[m[var]] = c;
  }
  return UPoly(std::move(coeffs));
}

std::vector<UPoly> bivariate_coefficients(const Polynomial& p, std::size_t main_var,
                                          std::size_t coef_var) {
  if (main_var >= p.nvars() || coef_var >= p.nvars() || main_var == coef_var) {
    throw ShapeError("bivariate_coefficients: bad variable indices");
  }
  const long dx = p.degree_in(main_var);
  const long dy = p.degree_in(coef_var);
  if (dx < 0) return {};
  std::vector<std::vector<Rational>> grid(static_cast<std::size_t>(dx + 1),
                                          std::vector<Rational>(static_cast<std::size_t>(dy + 1)));
  for (const auto& [m, c] : p.terms()) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i != main_var && i != coef_var && m[i] != 0) {
        throw ShapeError("bivariate_coefficients: polynomial involves other variables");
      }
    }
    grid[m[main_var]][m[coef_var]] = c;
  }
  std::vector<UPoly> out;
  out.reserve(grid.size());
  for (auto& row : grid) out.emplace_back(std::move(row));
  return out;
}

UPoly resultant(const std::vector<UPoly>& a, const std::vector<UPoly>& b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t m = a.size() - 1;  // degree of a in the main variable
  const std::size_t n = b.size() - 1;
  if (a.back().is_zero() || b.back().is_zero()) {
    throw ShapeError("resultant: leading coefficient must be nonzero");
  }
  const std::size_t size = m + n;
  if (size == 0) return UPoly::constant(1);
  // Sylvester matrix, highest main-variable power first.
  std::vector<std::vector<UPoly>> s(size, std::vector<UPoly>(size));
  for (std::size_t row = 0; row < n; ++row) {
    for (std::size_t k = 0; k <= m; ++k) s[row][row + k] = a[m - k];
  }
  for (std::size_t row = 0; row < m; ++row) {
    for (std::size_t k = 0; k <= n; ++k) s[n + row][row + k] = b[n - k];
  }
  // Bareiss fraction-free elimination over Q[y].
  bool negate = false;
  UPoly previous = UPoly::constant(1);
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (s[k][k].is_zero()) {
      std::size_t pivot = k + 1;
      while (pivot < size && s[pivot][k].is_zero()) ++pivot;
      if (pivot == size) return {};
      std::swap(s[k], s[pivot]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) {
        s[i][j] = (s[k][k] * s[i][j] - s[i][k] * s[k][j]).exact_div(previous);
      }
      s[i][k] = UPoly{};
    }
    previous = s[k][k];
  }
  UPoly det = s[size - 1][size - 1];
  return negate ? -det : det;
}

}  // namespace adjlab
