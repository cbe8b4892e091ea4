#include <doctest.h>

#include "adjlab/errors.hpp"
#include "adjlab/univariate.hpp"

using namespace adjlab;

namespace {

UPoly U(const char* text) { return to_upoly(parse_poly(text, {"t"}), 0); }

std::vector<UPoly> B(const char* text) {
  return bivariate_coefficients(parse_poly(text, {"x", "y"}), 0, 1);
}

UPoly Y(const char* text) { return to_upoly(parse_poly(text, {"y"}), 0); }

}  // namespace

TEST_CASE("univariate arithmetic and gcd") {
  const UPoly p = U("(t - 1)^2*(t + 2)");
  const UPoly q = U("(t - 1)*(t - 3)");
  CHECK(gcd(p, q) == U("t - 1"));
  CHECK(squarefree_part(p) == U("(t - 1)*(t + 2)"));
  auto [quot, rem] = p.divmod(q);
  CHECK(quot * q + rem == p);
  CHECK(rem.degree() < q.degree());
  CHECK(p.derivative() == U("3*t^2 - 3"));
  CHECK_THROWS_AS(p.exact_div(U("t - 5")), DivisionError);
}

TEST_CASE("rational roots by the rational root theorem") {
  CHECK(rational_roots(U("6*t^2 - 5*t + 1")) == std::vector<Rational>{Rational(1, 3), Rational(1, 2)});
  CHECK(rational_roots(U("t^2 - 2")).empty());
  CHECK(rational_roots(U("t^3*(t + 4)^2")) == std::vector<Rational>{Rational(-4), Rational(0)});
  CHECK(rational_roots(U("7")).empty());
  CHECK(rational_roots(U("1/2*t - 3/4")) == std::vector<Rational>{Rational(3, 2)});
  CHECK(irrational_part(U("(t^2 - 2)*(t - 1)")) == U("t^2 - 2"));
  CHECK(root_multiplicity(U("t^3*(t - 1)"), 0) == 3);
  CHECK(root_multiplicity(U("t^3*(t - 1)"), 2) == 0);
  CHECK_THROWS_AS(rational_roots(UPoly{}), ZeroPolynomialError);
}

TEST_CASE("Sylvester resultant matches closed forms") {
  // Res_x(x - a(y), b(x)) = b(a(y)).
  CHECK(resultant(B("x - y"), B("x^2 - 2")) == Y("y^2 - 2"));
  // Res_x(x^2 - y, x^2 - 1) = prod over x = +-sqrt(y) of (x^2 - 1) = (y - 1)^2.
  CHECK(resultant(B("x^2 - y"), B("x^2 - 1")) == Y("(y - 1)^2"));
  // Common factor gives zero.
  CHECK(resultant(B("(x - y)*(x + 1)"), B("(x - y)*x")).is_zero());
  // Degree-0 operand: Res(c, b) = c^deg(b).
  CHECK(resultant(B("y"), B("x^3 + 1")) == Y("y^3"));
  // Cusp against its x-partial: the y-roots collapse to 0.
  const UPoly r = resultant(B("x^3 - y^2"), B("3*x^2"));
  CHECK(rational_roots(r) == std::vector<Rational>{Rational(0)});
}
