#include <doctest.h>

#include "adjlab/errors.hpp"
#include "adjlab/polynomial.hpp"

using namespace adjlab;

namespace {

const std::vector<std::string> kZ = {"z1", "z2"};
const std::vector<std::string> kXYZ = {"x", "y", "z"};

Polynomial P(const char* text, const std::vector<std::string>& vars) { return parse_poly(text, vars); }

}  // namespace

TEST_CASE("parse_poly expands to canonical sparse form") {
  const auto cusp = P("z1^3 - z2^2", kZ);
  CHECK(cusp.size() == 2);
  CHECK(cusp.coefficient(Monomial{3, 0}) == 1);
  CHECK(cusp.coefficient(Monomial{0, 2}) == -1);

  CHECK(P("0", kZ).is_zero());

  const auto id = parse_poly("(x+y)^2 - x^2 - 2*x*y", {"x", "y"});
  CHECK(id.size() == 1);
  CHECK(id.coefficient(Monomial{0, 2}) == 1);

  CHECK(P("3/2*z1 - z1/2", kZ) == P("z1", kZ));
  CHECK(P("-(z1 - z2)", kZ) == P("z2 - z1", kZ));
  CHECK(P("  z1 *z2^ 2 ", kZ) == P("z1*z2^2", kZ));
}

TEST_CASE("parse_poly reports errors with positions") {
  try {
    P("z1 + w", kZ);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
  CHECK_THROWS_AS(P("z1^-1", kZ), ParseError);
  CHECK_THROWS_AS(P("z1 +", kZ), ParseError);
  CHECK_THROWS_AS(P("(z1", kZ), ParseError);
  CHECK_THROWS_AS(P("z1/z2", kZ), ParseError);
  CHECK_THROWS_AS(P("z1/0", kZ), ParseError);
  CHECK_THROWS_AS(P("", kZ), ParseError);
  CHECK_THROWS_AS(P("z1 z2", kZ), ParseError);
}

TEST_CASE("format emits descending grlex with signs") {
  CHECK(format(P("z1^3 - z2^2", kZ)) == "z1^3 - z2^2");
  CHECK(format(P("-2*z2", kZ)) == "-2*z2");
  CHECK(format(P("1 - z2 + 3/2*z1*z2^2", kZ)) == "3/2*z1*z2^2 - z2 + 1");
  CHECK(format(P("0", kZ)) == "0");
  CHECK(format(P("-1", kZ)) == "-1");
}

TEST_CASE("substitute pulls back the cusp along a blow-up chart") {
  const std::vector<std::string> xy = {"x1", "y2"};
  const std::vector<Polynomial> map = {P("x1^2*y2", xy), P("x1^3*y2^2", xy)};
  const auto pulled = substitute(P("z1^3 - z2^2", kZ), map);
  CHECK(pulled == P("x1^6*y2^3*(1 - y2)", xy));

  const std::vector<Polynomial> identity = {P("z1", kZ), P("z2", kZ)};
  const auto p = P("3*z1^2*z2 - 7/5*z2 + 4", kZ);
  CHECK(substitute(p, identity) == p);

  const std::vector<std::string> chart = {"x", "w2", "y1"};
  const std::vector<Polynomial> cone_map = {P("x", chart), P("x*w2", chart), P("x*y1", chart)};
  CHECK(substitute(P("z^2 - x*y", kXYZ), cone_map) == P("x^2*(y1^2 - w2)", chart));

  CHECK_THROWS_AS(substitute(p, std::span<const Polynomial>(identity.data(), 1)), ShapeError);
}

TEST_CASE("partial derivatives") {
  CHECK(partial_derivative(P("z1^3 - z2^2", kZ), 1) == P("-2*z2", kZ));
  CHECK(partial_derivative(P("17/3", kZ), 0).is_zero());
  CHECK(partial_derivative(P("z^2 - x*y", kXYZ), 1) == P("-x", kXYZ));
}

TEST_CASE("coordinate order and exact division") {
  const std::vector<std::string> xy = {"x1", "y2"};
  const auto pulled = P("x1^6*y2^3*(1 - y2)", xy);
  CHECK(coordinate_order(pulled, 0) == 6);
  CHECK(coordinate_order(pulled, 1) == 3);
  CHECK(coordinate_order(P("5", xy), 0) == 0);
  CHECK_THROWS_AS(coordinate_order(P("0", xy), 0), ZeroPolynomialError);

  const std::vector<std::string> yw = {"y1", "w2"};
  CHECK(coordinate_order(P("w2^6*y1^2*(y1 - 1)", yw), 0) == 2);

  const auto q = divide_by_coordinate_power(pulled, 0, 6);
  CHECK(q == P("y2^3*(1 - y2)", xy));
  CHECK(q * P("x1^6", xy) == pulled);
  CHECK(divide_by_coordinate_power(pulled, 1, 0) == pulled);
  CHECK_THROWS_AS(divide_by_coordinate_power(pulled, 0, 7), DivisionError);

  auto strict = divide_by_coordinate_power(P("w2^6*y1^2*(y1 - 1)", yw), 1, 6);
  strict = divide_by_coordinate_power(strict, 0, 2);
  CHECK(strict == P("y1 - 1", yw));
}

TEST_CASE("evaluate at complex points") {
  using C = std::complex<double>;
  const std::vector<C> one_one = {1.0, 1.0};
  CHECK(std::abs(evaluate(P("z1^3 - z2^2", kZ), one_one)) == 0.0);
  const std::vector<C> two_three = {2.0, 3.0};
  CHECK(evaluate(P("z1*z2", kZ), two_three) == C(6.0));
  const std::vector<C> ones = {1.0, 1.0, 1.0};
  CHECK(std::abs(evaluate(P("z^2 - x*y", kXYZ), ones)) == 0.0);
  const std::vector<C> i_pt = {C(0, 1), 2.0};
  CHECK(std::abs(evaluate(P("z1^2 + 1", kZ), i_pt)) < 1e-15);
}

TEST_CASE("binary operations reject mismatched variable lists") {
  CHECK_THROWS_AS(P("z1", kZ) + P("x", kXYZ), ShapeError);
}
