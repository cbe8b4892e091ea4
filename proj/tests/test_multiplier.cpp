#include <doctest.h>

#include "adjlab/errors.hpp"
#include "adjlab/multiplier.hpp"
#include "oracles.hpp"

using namespace adjlab;

namespace {

const std::vector<std::string> kZ = {"z1", "z2"};
const std::vector<std::string> kXYZ = {"x", "y", "z"};

Polynomial P(const char* text, const std::vector<std::string>& vars) { return parse_poly(text, vars); }

ResolutionTree cusp() { return resolve_plane_curve(P("z1^3 - z2^2", kZ)); }
ResolutionTree cone() { return resolve_scripted(P("z^2 - x*y", kXYZ), {{"base", {0, 0, 0}}}, true); }
ResolutionTree line() { return resolve_scripted(P("z1", kZ), {{"base", {0, 0}}}, false); }

std::vector<Polynomial> polys(std::initializer_list<const char*> texts, const std::vector<std::string>& vars) {
  std::vector<Polynomial> out;
  for (const char* t : texts) out.push_back(P(t, vars));
  return out;
}

}  // namespace

TEST_CASE("multiplier membership on the worked examples") {
  const auto c = cusp();
  CHECK(multiplier_thresholds(c) == std::vector<Exponent>{1, 1, 2});
  CHECK_FALSE(in_multiplier_ideal(P("1", kZ), c));
  CHECK(in_multiplier_ideal(P("z1", kZ), c));
  CHECK(in_multiplier_ideal(P("z2", kZ), c));
  CHECK(in_multiplier_ideal(P("z1 + 3*z2^2", kZ), c));
  CHECK_FALSE(in_multiplier_ideal(P("1 + z1", kZ), c));
  CHECK(in_multiplier_ideal(P("1", kXYZ), cone()));
  CHECK_THROWS_AS(in_multiplier_ideal(P("0", kZ), c), ZeroPolynomialError);

  const auto partial = resolve_scripted(P("z1^3 - z2^2", kZ), {{"base", {0, 0}}}, false);
  CHECK_THROWS_AS(in_multiplier_ideal(P("z1", kZ), partial), SncError);
  CHECK_THROWS_AS(multiplier_generators(partial), SncError);
}

TEST_CASE("multiplier generators, lct and canonical verdict") {
  const auto rc = multiplier_generators(cusp());
  REQUIRE(rc.generators);
  CHECK(format(*rc.generators) == "z1, z2");
  CHECK_FALSE(rc.is_unit);
  CHECK(rc.lct == Rational(5, 6));

  const auto rk = multiplier_generators(cone());
  REQUIRE(rk.generators);
  CHECK(rk.generators->is_unit());
  CHECK(format(*rk.generators) == "1");
  CHECK(rk.is_unit);
  CHECK(rk.lct == 1);

  const auto rl = multiplier_generators(line());
  CHECK(rl.generators->is_unit());
  CHECK(rl.lct == 1);

  CHECK(lct(resolve_plane_curve(P("z1*z2", kZ))) == 1);
  CHECK(lct(resolve_plane_curve(P("z2^2 - z1^5", kZ))) == Rational(7, 10));

  CHECK(canonical_test(cone(), true) == CanonicalVerdict::canonical);
  CHECK(canonical_test(cusp(), false) == CanonicalVerdict::not_applicable);
  CHECK(canonical_test(cusp(), true) == CanonicalVerdict::not_canonical);
  CHECK(canonical_test(line(), true) == CanonicalVerdict::canonical);
}

TEST_CASE("generators are flagged for trees with translated centers") {
  const auto tree = resolve_scripted(P("z1^3 - z2^2 + z2", kZ), {{"base", {0, 1}}}, true);
  const auto r = multiplier_generators(tree);
  CHECK_FALSE(r.generators.has_value());
  CHECK(r.thresholds.size() == 1);
  CHECK_THROWS_AS(find_ef_witnesses(tree), Error);
}

TEST_CASE("witness sets for the pulled-back equation") {
  const auto c = cusp();
  const auto found = find_ef_witnesses(c);
  CHECK(format(found) == "z1^3, z1^2*z2, z2^2");
  std::vector<Polynomial> as_polys;
  for (const auto& g : found.generators) as_polys.push_back(Polynomial::term(kZ, g));
  CHECK(witness_set_valid(as_polys, c));
  CHECK(witness_set_valid(polys({"z1^3", "z2^2"}, kZ), c));
  CHECK_FALSE(witness_set_valid(polys({"z1^3"}, kZ), c));
  CHECK_FALSE(witness_set_valid(polys({"z1^2", "z2^2"}, kZ), c));
  CHECK_THROWS_AS(find_ef_witnesses(c, 2), Error);

  CHECK(witness_set_valid(polys({"x^2", "y^2", "z^2"}, kXYZ), cone()));
  CHECK(witness_set_valid(polys({"z1", "z2"}, kZ), line()));
  CHECK(format(find_ef_witnesses(line())) == "z1, z2");
}

TEST_CASE("howald membership by exact linear programming") {
  const auto cusp_ideal = parse_monomial_ideal("z1^3, z2^2", kZ);
  CHECK(howald_membership(cusp_ideal, {1, 0}, 1));
  CHECK_FALSE(howald_membership(cusp_ideal, {0, 0}, 1));
  CHECK(howald_margin(cusp_ideal, {0, 0}, 1) == Rational(-1, 5));
  CHECK(howald_membership(MonomialIdeal::unit(kZ), {0, 0}, 1));
  CHECK(howald_membership(MonomialIdeal::unit(kXYZ), {2, 0, 1}, 1));
  CHECK(howald_membership(parse_monomial_ideal("x^2, y^2, z^2", kXYZ), {0, 0, 0}, 1));
  CHECK_FALSE(howald_membership(parse_monomial_ideal("z1^2, z2^2", kZ), {0, 0}, 1));
  CHECK(howald_membership(parse_monomial_ideal("z1^2, z2^2", kZ), {0, 0}, Rational(99, 100)));
  CHECK_THROWS_AS(howald_membership(cusp_ideal, {1, 0, 0}, 1), ShapeError);
  CHECK_THROWS_AS(howald_membership(cusp_ideal, {1, 0}, 0), Error);
  CHECK_THROWS_AS(parse_monomial_ideal("z1 + z2", kZ), ParseError);
}

TEST_CASE("howald generators") {
  CHECK(format(howald_generators(parse_monomial_ideal("z1^3, z2^2", kZ), 1)) == "z1, z2");
  CHECK(howald_generators(parse_monomial_ideal("x^2, y^2, z^2", kXYZ), 1).is_unit());
  CHECK(format(howald_generators(parse_monomial_ideal("z1^2, z2^2", kZ), 1)) == "z1, z2");
  CHECK(format(howald_generators(parse_monomial_ideal("z1^3, z2^2", kZ), 2)) == "z1^4, z1^3*z2, z1*z2^2, z2^3");
  CHECK(default_howald_degree_bound(parse_monomial_ideal("z1^3, z2^2", kZ), 1) == 5);
}

TEST_CASE("multiplier ideal agrees with the monomial oracle") {
  const auto from_tree = multiplier_generators(cusp());
  const auto from_newton = howald_generators(parse_monomial_ideal("z1^3, z2^2", kZ), 1);
  CHECK(*from_tree.generators == from_newton);
  CHECK(*multiplier_generators(cone()).generators ==
        howald_generators(parse_monomial_ideal("x^2, y^2, z^2", kXYZ), 1));
  CHECK(*multiplier_generators(line()).generators == howald_generators(parse_monomial_ideal("z1, z2", kZ), 1));
}

TEST_CASE("multiplier ideal does not depend on the chosen resolution") {
  const auto automatic = cusp();
  const std::vector<BlowupCenter> script = {
      {"base", {0, 0}}, {"base/E1.1", {0, 0}}, {"base/E1.1/E2.2", {0, 0}}};
  auto extended = script;
  extended.push_back({"base/E1.1/E2.2/E3.2", {0, 0}});
  const auto scripted = resolve_scripted(automatic.f(), script, false);
  const auto extra = resolve_scripted(automatic.f(), extended, false);
  REQUIRE(extra.divisors().size() == 4);
  CHECK(extra.divisors()[3].m == 8);
  CHECK(extra.divisors()[3].k == 6);
  CHECK(extra.snc_status() == SncStatus::verified);
  const auto a = multiplier_generators(automatic);
  const auto b = multiplier_generators(scripted);
  const auto c = multiplier_generators(extra);
  CHECK(*a.generators == *b.generators);
  CHECK(*a.generators == *c.generators);
  CHECK(a.lct == c.lct);
}

TEST_CASE("howald LP agrees with a grid search on random ideals") {
  testing::Rng rng(11);
  int disagreements = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::vector<std::string>& vars = trial % 2 ? kXYZ : kZ;
    const auto ideal = testing::random_monomial_ideal(rng, vars, 4, 3);
    Monomial v(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) v[i] = static_cast<Exponent>(testing::uniform_int(rng, 0, 3));
    const Rational c = testing::ratio(testing::uniform_int(rng, 1, 4), 2);
    if (howald_membership(ideal, v, c) != testing::brute_force_interior(ideal, v, c, 24)) ++disagreements;
  }
  CHECK(disagreements == 0);
}
