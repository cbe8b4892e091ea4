#include <doctest.h>

#include <cmath>
#include <fstream>

#include "adjlab/errors.hpp"
#include "adjlab/pipeline.hpp"

using namespace adjlab;
using nlohmann::json;

namespace {

std::string source_path(const std::string& rel) { return std::string(ADJLAB_SOURCE_DIR) + "/" + rel; }

json read_json(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in);
  return json::parse(in);
}

// Structural equality; floating point leaves compare with a relative
// tolerance so libm differences across platforms do not matter.
void compare_json(const json& got, const json& want, const std::string& where) {
  INFO(where);
  if (want.is_number_float() || got.is_number_float()) {
    REQUIRE(got.is_number());
    const double a = got.get<double>(), b = want.get<double>();
    CHECK(std::abs(a - b) <= 1e-9 * std::abs(b) + 1e-12);
    return;
  }
  if (want.is_number_integer()) {
    REQUIRE(got.is_number_integer());
    CHECK(got.get<long long>() == want.get<long long>());
    return;
  }
  REQUIRE(got.type() == want.type());
  if (want.is_object()) {
    CHECK(got.size() == want.size());
    for (const auto& [key, value] : want.items()) {
      REQUIRE(got.contains(key));
      compare_json(got.at(key), value, where + "." + key);
    }
  } else if (want.is_array()) {
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < want.size(); ++i) compare_json(got[i], want[i], where + "[" + std::to_string(i) + "]");
  } else {
    CHECK(got == want);
  }
}

json cusp_doc() { return read_json(source_path("problems/cusp.json")); }

}  // namespace

TEST_CASE("reports match the stored golden files") {
  for (const char* name : {"cusp", "cone", "smooth"}) {
    const auto spec = load_problem_file(source_path(std::string("problems/") + name + ".json"));
    const auto result = run_pipeline(spec, Stage::report, 42);
    CHECK(result.exit_code == 0);
    compare_json(result.report, read_json(source_path(std::string("tests/golden/") + name + ".json")), name);
  }
}

TEST_CASE("input hash tracks the problem content") {
  json doc = cusp_doc();
  const auto a = load_problem(doc);
  CHECK(a.input_hash.size() == 16);
  CHECK(load_problem(doc).input_hash == a.input_hash);
  doc["g_list"].push_back("z1*z2");
  CHECK(load_problem(doc).input_hash != a.input_hash);
  CHECK(fnv1a64_hex("") == "cbf29ce484222325");
  CHECK(fnv1a64_hex("a") == "af63dc4c8601ec8c");
}

TEST_CASE("problem validation") {
  json doc = cusp_doc();
  doc["colour"] = "blue";
  CHECK_THROWS_AS(load_problem(doc), Error);

  doc = cusp_doc();
  doc["branches"][0]["param"] = json::array({"t^2", "t^2"});
  CHECK_THROWS_AS(load_problem(doc), Error);

  doc = cusp_doc();
  doc["f"] = "z1^3 - w^2";
  CHECK_THROWS_AS(load_problem(doc), ParseError);

  doc = cusp_doc();
  doc["mu"] = 3;
  CHECK_THROWS_AS(load_problem(doc), Error);

  doc = cusp_doc();
  doc["f"] = "0";
  CHECK_THROWS_AS(load_problem(doc), ZeroPolynomialError);

  CHECK_THROWS_AS(load_problem(json::array()), Error);
}

TEST_CASE("invalid witnesses make the run disagree") {
  json doc = cusp_doc();
  doc["witnesses"] = json::array({"z1^2"});
  const auto result = run_pipeline(load_problem(doc), Stage::multiplier, 42);
  CHECK(result.report["witnesses"]["given_valid"] == false);
  CHECK(result.report["status"] == "disagree");
  CHECK(result.exit_code == 1);
}

TEST_CASE("errors carry the stage that raised them") {
  json doc = cusp_doc();
  doc["max_steps"] = 1;
  doc.erase("branches");
  try {
    run_pipeline(load_problem(doc), Stage::resolve, 42);
    FAIL("expected a StageError");
  } catch (const StageError& e) {
    CHECK(e.stage() == "resolve");
  }
}

TEST_CASE("stages only run what they need") {
  const auto spec = load_problem(cusp_doc());
  const auto r = run_pipeline(spec, Stage::resolve, 1).report;
  CHECK(r.contains("resolution"));
  CHECK_FALSE(r.contains("multiplier"));
  CHECK_FALSE(r.contains("l2"));
  const auto resolution = r["resolution"];
  CHECK(resolution["blowups"] == 3);
  CHECK(resolution["snc_status"] == "verified");
}
