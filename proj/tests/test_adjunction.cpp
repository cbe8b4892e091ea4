#include <doctest.h>

#include "adjlab/adjunction.hpp"
#include "adjlab/errors.hpp"
#include "oracles.hpp"

using namespace adjlab;

namespace {

const std::vector<std::string> kZ = {"z1", "z2"};
const std::vector<std::string> kXYZ = {"x", "y", "z"};

Polynomial P(const char* text, const std::vector<std::string>& vars) { return parse_poly(text, vars); }

}  // namespace

TEST_CASE("residue of the cusp form") {
  const MeromorphicTopForm omega{P("1", kZ), P("z1^3 - z2^2", kZ)};
  const auto r = adjunction_map(omega, 1);
  CHECK(r.sign == -1);
  CHECK(r.mu == 1);
  CHECK(r.denominator == P("-2*z2", kZ));
  const auto s = simplified(r);
  CHECK(s.sign == 1);
  CHECK(s.numerator == P("1", kZ));
  CHECK(s.denominator == P("2*z2", kZ));
  CHECK(residue_identity_check(omega, r));
  CHECK(residue_identity_check(omega, s));

  auto corrupted = r;
  corrupted.sign = 1;
  CHECK_FALSE(residue_identity_check(omega, corrupted));
  auto wrong_mu = r;
  wrong_mu.mu = 0;
  CHECK_FALSE(residue_identity_check(omega, wrong_mu));
}

TEST_CASE("residue along a coordinate hyperplane and on the cone") {
  const MeromorphicTopForm line{P("x + z^2", kXYZ), P("x", kXYZ)};
  const auto r = adjunction_map(line, 0);
  CHECK(r.sign == 1);
  CHECK(r.denominator == P("1", kXYZ));
  CHECK(r.numerator == P("x + z^2", kXYZ));
  CHECK(residue_identity_check(line, r));
  CHECK_THROWS_AS(adjunction_map(line, 1), Error);

  const MeromorphicTopForm cone{P("1", kXYZ), P("z^2 - x*y", kXYZ)};
  const auto c = adjunction_map(cone, 1);
  CHECK(c.sign == -1);
  CHECK(c.denominator == P("-x", kXYZ));
  const auto cs = simplified(c);
  CHECK(cs.sign == 1);
  CHECK(cs.numerator == P("1", kXYZ));
  CHECK(cs.denominator == P("x", kXYZ));
  for (std::size_t mu : admissible_mus(cone.f)) CHECK(residue_identity_check(cone, adjunction_map(cone, mu)));
  CHECK(default_mu(cone.f) == 2);
  CHECK(default_mu(P("z1^3 - z2^2", kZ)) == 1);
}

TEST_CASE("residue identity holds for random forms") {
  testing::Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto& vars = trial % 2 ? kXYZ : kZ;
    const Polynomial f = testing::random_nonzero_poly(rng, vars, 4, 5, 3);
    const Polynomial g = testing::random_poly(rng, vars, 3, 5, 2);
    for (std::size_t mu : admissible_mus(f)) {
      const MeromorphicTopForm omega{g, f};
      const auto r = adjunction_map(omega, mu);
      CHECK(residue_identity_check(omega, r));
      if (!g.is_zero()) {
        auto bad = r;
        bad.sign = -bad.sign;
        CHECK_FALSE(residue_identity_check(omega, bad));
      }
    }
  }
}

TEST_CASE("residues agree on tangent frames for every admissible mu") {
  const MeromorphicTopForm cusp{P("1", kZ), P("z1^3 - z2^2", kZ)};
  const auto rc = mu_consistency_check(cusp, 0, 1, 100, 42);
  CHECK(rc.samples == 100);
  CHECK(rc.max_deviation < 1e-8);

  const MeromorphicTopForm cone{P("1 + x*z", kXYZ), P("z^2 - x*y", kXYZ)};
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = a + 1; b < 3; ++b) CHECK(mu_consistency_check(cone, a, b, 100, 42).max_deviation < 1e-8);
  }

  const MeromorphicTopForm line{P("z2 + 1", kZ), P("z1", kZ)};
  CHECK(mu_consistency_check(line, 0, 0, 100, 42).max_deviation == 0.0);

  // A wrong sign convention is detected.
  const auto r0 = adjunction_map(cusp, 0);
  auto r1 = adjunction_map(cusp, 1);
  r1.sign = -r1.sign;
  const std::vector<std::complex<double>> p = {{1.0, 0.0}, {1.0, 0.0}};
  const std::vector<std::vector<std::complex<double>>> frame = {{{2.0, 0.0}, {3.0, 0.0}}};
  CHECK(std::abs(evaluate_residue(r0, p, frame) + evaluate_residue(r1, p, frame)) < 1e-12);
}

TEST_CASE("mu consistency sampling is reproducible") {
  const MeromorphicTopForm cusp{P("z1 + z2", kZ), P("z1^3 - z2^2", kZ)};
  const auto a = mu_consistency_check(cusp, 0, 1, 50, 7);
  const auto b = mu_consistency_check(cusp, 0, 1, 50, 7);
  CHECK(a.max_deviation == b.max_deviation);
  CHECK(a.rejected == b.rejected);
}

TEST_CASE("l2 criterion through the multiplier ideal") {
  const auto cusp = resolve_plane_curve(P("z1^3 - z2^2", kZ));
  CHECK_FALSE(l2_criterion({P("1", kZ), cusp.f()}, cusp));
  CHECK(l2_criterion({P("z1", kZ), cusp.f()}, cusp));
  CHECK(l2_criterion({P("z2", kZ), cusp.f()}, cusp));
  const auto cone = resolve_scripted(P("z^2 - x*y", kXYZ), {{"base", {0, 0, 0}}}, true);
  CHECK(l2_criterion({P("1", kXYZ), cone.f()}, cone));
  CHECK_THROWS_AS(l2_criterion({P("1", kZ), P("z1^2 - z2^3", kZ)}, cusp), ShapeError);
}
