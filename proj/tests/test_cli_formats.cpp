#include <doctest.h>

#include "nforge/corpus.hpp"
#include "nforge/errors.hpp"
#include "nforge/json_io.hpp"
#include "nforge/semigroup_ops.hpp"

using namespace nforge;

namespace {
std::string fixture(const std::string& name) {
  return std::string(NFORGE_FIXTURE_DIR) + "/" + name;
}
}  // namespace

TEST_CASE("semigroup json round-trips bit-exactly") {
  for (const auto& S : enumerate_numerical_semigroups(5)) {
    const json j = semigroup_to_json(S);
    const GoodSemigroup back = semigroup_from_json(j);
    CHECK(back == S);
    CHECK(semigroup_to_json(back).dump() == j.dump());
  }
  // a multibranch literal
  const json node = load_json_file(fixture("node.json"));
  const GoodSemigroup N = semigroup_from_json(node);
  CHECK(N.branches() == 2);
  CHECK(semigroup_to_json(semigroup_from_json(semigroup_to_json(N))).dump() ==
        semigroup_to_json(N).dump());
}

TEST_CASE("numerical generator documents normalize to the canonical form") {
  const auto in = load_input_file(fixture("semigroup_3_7_10_11.json"));
  REQUIRE(in.semigroup.has_value());
  CHECK(in.semigroup->small_numbers() == std::vector<long>{0, 3, 6, 7, 9});
}

TEST_CASE("curve documents parse into every kind") {
  const auto mono = load_input_file(fixture("ex_noether_g5.json"));
  REQUIRE(mono.curve.has_value());
  CHECK(mono.curve->kind == CurveSpec::Kind::monomial);
  CHECK(mono.curve->singular_fibers.size() == 1);

  const auto par = load_input_file(fixture("ex_gon_g5_nonmonomial.json"));
  REQUIRE(par.curve.has_value());
  CHECK(par.curve->kind == CurveSpec::Kind::parametrized);
  CHECK(par.curve->generators[1].str() == "t^7 + t^5");

  const auto multi = load_input_file(fixture("multibranch_g5.json"));
  REQUIRE(multi.curve.has_value());
  CHECK(multi.curve->kind == CurveSpec::Kind::multibranch);
  CHECK(multi.curve->branch_generators.size() == 7);

  const auto smooth = load_input_file(fixture("smooth.json"));
  REQUIRE(smooth.curve.has_value());
  CHECK(smooth.curve->singular_fibers.empty());

  // curve -> json -> curve is stable
  const json j = curve_to_json(*multi.curve);
  CHECK(curve_to_json(curve_from_json(j)).dump() == j.dump());
}

TEST_CASE("sheaf documents") {
  const auto curve_in = load_input_file(fixture("ex_cliff_g5.json"));
  const auto F = sheaf_from_json(*curve_in.curve, load_json_file(fixture("ex_cliff_g5_sheaf.json")));
  CHECK(F.generators.size() == 3);
  CHECK(!F.prescribed());
  CHECK(F.pole_at_infinity() == 5);

  // generators must contain 1
  json bad{{"generators", json::array({"t"})}};
  CHECK_THROWS_AS(sheaf_from_json(*curve_in.curve, bad), Error);
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_poly("t^2 + %");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::parse_error);
    CHECK(std::string(e.what()).find("position") != std::string::npos);
  }
}

TEST_CASE("corpus counts by genus match the known enumeration") {
  const std::vector<long> counts{1, 1, 2, 4, 7, 12, 23, 39, 67};
  for (int g = 0; g <= 8; ++g) {
    long n = 0;
    for (const auto& S : enumerate_numerical_semigroups(g))
      if (numerical_genus(S) == g) ++n;
    CHECK(n == counts[g]);
  }
  CHECK(enumerate_numerical_semigroups(3).size() == 8);  // 1+1+2+4
  CHECK_THROWS_AS(enumerate_numerical_semigroups(13), Error);
}

TEST_CASE("enumeration is deterministic") {
  const auto a = enumerate_numerical_semigroups(6);
  const auto b = enumerate_numerical_semigroups(6);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}
