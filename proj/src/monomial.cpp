#include "adjlab/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "adjlab/errors.hpp"

namespace adjlab {

Monomial Monomial::unit(std::size_t nvars, std::size_t var, Exponent power) {
  Monomial m(nvars);
  m.exponents_.at(var) = power;
  return m;
}

std::uint64_t Monomial::degree() const noexcept {
  return std::accumulate(exponents_.begin(), exponents_.end(), std::uint64_t{0});
}

bool Monomial::is_one() const noexcept {
  return std::all_of(exponents_.begin(), exponents_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  if (size() != other.size()) throw ShapeError("monomial length mismatch");
  for (std::size_t i = 0; i < size(); ++i) {
    if (exponents_[i] > other.exponents_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (size() != other.size()) throw ShapeError("monomial length mismatch");
  Monomial out(*this);
  for (std::size_t i = 0; i < size(); ++i) out.exponents_[i] += other.exponents_[i];
  return out;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  if (!divisor.divides(*this)) throw DivisionError("monomial does not divide");
  Monomial out(*this);
  for (std::size_t i = 0; i < size(); ++i) out.exponents_[i] -= divisor.exponents_[i];
  return out;
}

std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  const auto ea = a.exponents();
  const auto eb = b.exponents();
  return std::lexicographical_compare_three_way(ea.begin(), ea.end(), eb.begin(), eb.end());
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
  return grlex_compare(a, b) < 0;
}

std::vector<Monomial> minimalize(std::vector<Monomial> monomials) {
  std::sort(monomials.begin(), monomials.end(), GrlexLess{});
  monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
  // A divisor always precedes its multiples in grlex order.
  std::vector<Monomial> kept;
  for (const auto& m : monomials) {
    const bool redundant =
        std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return k.divides(m); });
    if (!redundant) kept.push_back(m);
  }
  return kept;
}

namespace {

void enumerate(std::size_t var, std::uint64_t remaining, Monomial& current,
               std::vector<Monomial>& out) {
  if (var + 1 == current.size()) {
    for (std::uint64_t e = 0; e <= remaining; ++e) {
      current[var] = static_cast<Exponent>(e);
      out.push_back(current);
    }
    current[var] = 0;
    return;
  }
  for (std::uint64_t e = 0; e <= remaining; ++e) {
    current[var] = static_cast<Exponent>(e);
    enumerate(var + 1, remaining - e, current, out);
  }
  current[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials_up_to_degree(std::size_t nvars, std::uint64_t max_degree) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    out.emplace_back();
    return out;
  }
  Monomial current(nvars);
  enumerate(0, max_degree, current, out);
  std::sort(out.begin(), out.end(), GrlexLess{});
  return out;
}

}  // namespace adjlab
