#include "adjlab/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "adjlab/errors.hpp"

namespace adjlab {

Polynomial::Polynomial(std::vector<std::string> variables) : variables_(std::move(variables)) {}

Polynomial Polynomial::constant(std::vector<std::string> variables, const Rational& value) {
  Polynomial p(std::move(variables));
  p.add_term(Monomial(p.nvars()), value);
  return p;
}

Polynomial Polynomial::variable(std::vector<std::string> variables, std::size_t index) {
  if (index >= variables.size()) throw ShapeError("variable index out of range");
  Polynomial p(std::move(variables));
  p.add_term(Monomial::unit(p.nvars(), index), 1);
  return p;
}

Polynomial Polynomial::term(std::vector<std::string> variables, Monomial monomial,
                            const Rational& coefficient) {
  if (monomial.size() != variables.size()) throw ShapeError("monomial length mismatch");
  Polynomial p(std::move(variables));
  p.add_term(monomial, coefficient);
  return p;
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::constant_term() const { return coefficient(Monomial(nvars())); }

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

long Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<long>(terms_.rbegin()->first.degree());
}

long Polynomial::degree_in(std::size_t var) const {
  if (var >= nvars()) throw ShapeError("variable index out of range");
  long d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<long>(m[var]));
  return d;
}

bool Polynomial::depends_on(std::size_t var) const { return degree_in(var) > 0; }

const Polynomial::Terms::value_type& Polynomial::leading_term() const {
  if (terms_.empty()) throw ZeroPolynomialError("leading term of the zero polynomial");
  return *terms_.rbegin();
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.size() != nvars()) throw ShapeError("monomial length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::renamed(std::vector<std::string> variables) const {
  if (variables.size() != nvars()) throw ShapeError("renaming must keep the variable count");
  Polynomial p(*this);
  p.variables_ = std::move(variables);
  return p;
}

void Polynomial::require_same_ring(const Polynomial& other, const char* op) const {
  if (variables_ != other.variables_) {
    throw ShapeError(std::string("variable lists differ in ") + op);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial p(*this);
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_ring(other, "+");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_ring(other, "-");
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_same_ring(b, "*");
  Polynomial out(a.variables_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(variables_, 1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

bool Polynomial::operator==(const Polynomial& other) const {
  return variables_ == other.variables_ && terms_ == other.terms_;
}

std::string format(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    const bool negative = c < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const Rational magnitude = abs(c);
    bool wrote = false;
    if (magnitude != 1 || m.is_one()) {
      os << to_string(magnitude);
      wrote = true;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (wrote) os << '*';
      os << p.variables()[i];
      if (m[i] > 1) os << '^' << m[i];
      wrote = true;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << format(p); }

Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images) {
  if (images.size() != p.nvars()) {
    throw ShapeError("substitute: expected " + std::to_string(p.nvars()) + " images, got " +
                     std::to_string(images.size()));
  }
  if (images.empty()) return p;
  const auto& target = images.front().variables();
  for (const auto& img : images) {
    if (img.variables() != target) throw ShapeError("substitute: images use different variables");
  }
  // powers[i][e] = images[i]^e, grown on demand.
  std::vector<std::vector<Polynomial>> powers(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    powers[i].push_back(Polynomial::constant(target, 1));
  }
  auto power = [&](std::size_t i, Exponent e) -> const Polynomial& {
    while (powers[i].size() <= e) powers[i].push_back(powers[i].back() * images[i]);
    return powers[i][e];
  };
  Polynomial out(target);
  for (const auto& [m, c] : p.terms()) {
    Polynomial term = Polynomial::constant(target, c);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] != 0) term *= power(i, m[i]);
    }
    out += term;
  }
  return out;
}

Polynomial partial_derivative(const Polynomial& p, std::size_t var) {
  if (var >= p.nvars()) throw ShapeError("partial_derivative: variable index out of range");
  Polynomial out(p.variables());
  for (const auto& [m, c] : p.terms()) {
    if (m[var] == 0) continue;
    Monomial d = m;
    d[var] -= 1;
    out.add_term(d, c * m[var]);
  }
  return out;
}

Exponent coordinate_order(const Polynomial& p, std::size_t var) {
  if (var >= p.nvars()) throw ShapeError("coordinate_order: variable index out of range");
  if (p.is_zero()) throw ZeroPolynomialError("coordinate_order of the zero polynomial is infinite");
  Exponent order = p.terms().begin()->first[var];
  for (const auto& [m, c] : p.terms()) order = std::min(order, m[var]);
  return order;
}

Polynomial divide_by_coordinate_power(const Polynomial& p, std::size_t var, Exponent m) {
  if (var >= p.nvars()) throw ShapeError("divide_by_coordinate_power: variable index out of range");
  if (m == 0) return p;
  Polynomial out(p.variables());
  for (const auto& [mono, c] : p.terms()) {
    if (mono[var] < m) {
      throw DivisionError(p.variables()[var] + "^" + std::to_string(m) + " does not divide " +
                          format(p));
    }
    Monomial q = mono;
    q[var] -= m;
    out.add_term(q, c);
  }
  return out;
}

Polynomial restrict_variable(const Polynomial& p, std::size_t var, const Rational& value) {
  if (var >= p.nvars()) throw ShapeError("restrict_variable: variable index out of range");
  Polynomial out(p.variables());
  for (const auto& [m, c] : p.terms()) {
    Monomial r = m;
    r[var] = 0;
    Rational factor = 1;
    for (Exponent e = 0; e < m[var]; ++e) factor *= value;
    out.add_term(r, c * factor);
  }
  return out;
}

std::complex<double> evaluate(const Polynomial& p, std::span<const std::complex<double>> point) {
  if (point.size() != p.nvars()) throw ShapeError("evaluate: point has wrong dimension");
  std::complex<double> sum = 0.0;
  for (const auto& [m, c] : p.terms()) {
    std::complex<double> t = to_double(c);
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (Exponent e = 0; e < m[i]; ++e) t *= point[i];
    }
    sum += t;
  }
  return sum;
}

}  // namespace adjlab
