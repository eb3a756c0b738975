#include <doctest.h>

#include "filiform/json_io.hpp"

using namespace filiform;
using nlohmann::json;

TEST_CASE("law files round-trip") {
  std::vector<StructureConstants> laws = {model_algebra(6), law_n2n2n(7, 2, Rational(-1, 3), 5),
                                          law_z1_n2_n(4, 8, {1, 2}, 1, {0, 1, Rational(7, 2)})};
  CaseFixture f = case_fixture("5-7-10");
  laws.push_back(build_law(f.spec, stratum_sample(f.strata[5], 2)));
  for (const auto& L : laws) {
    CHECK(law_from_json(law_to_json(L)) == L);
    CHECK(parse_law_text(law_to_text(L)) == L);
    // serialization is byte-stable
    CHECK(law_to_text(L) == law_to_text(parse_law_text(law_to_text(L))));
  }
}

TEST_CASE("law file validation") {
  json good = law_to_json(model_algebra(4));
  CHECK(law_from_json(good).dim() == 4);

  json dup = good;
  dup["brackets"].push_back(dup["brackets"][0]);
  CHECK_THROWS_AS(law_from_json(dup), ParseError);

  json bad_rat = good;
  bad_rat["brackets"][0]["value"][1] = "1/0";
  CHECK_THROWS_AS(law_from_json(bad_rat), ParseError);

  json bad_pair = good;
  bad_pair["brackets"][0]["i"] = 3;
  bad_pair["brackets"][0]["j"] = 3;
  CHECK_THROWS_AS(law_from_json(bad_pair), ParseError);

  json bad_len = good;
  bad_len["brackets"][0]["value"] = json::array({"1", "0"});
  CHECK_THROWS_AS(law_from_json(bad_len), ParseError);

  CHECK_THROWS_AS(law_from_json(json{{"dim", 0}}), ParseError);
  CHECK_THROWS_AS(parse_law_text("{\"dim\": 4,"), ParseError);
  // integers are accepted alongside rational strings
  json ints = json::parse(R"({"dim":3,"brackets":[{"i":1,"j":3,"value":[0,1,0]}]})");
  CHECK(law_from_json(ints) == model_algebra(3));
}

TEST_CASE("family requests") {
  json numeric = json::parse(R"({"z1":6,"z2":6,"n":8,
    "alpha":["1"],"gamma":["1"],"beta":{"1,2":"0"}})");
  FamilyRequest req = request_from_json(numeric);
  CHECK(!req.symbolic);
  StructureConstants L = build_law(req.spec, numeric_values(req.values));
  CHECK(is_lie(L));
  CHECK(invariants_adapted(L) == Triple{6, 6, 8});

  json symbolic = json::parse(R"({"z1":4,"z2":5,"n":8})");
  FamilyRequest sym = request_from_json(symbolic);
  CHECK(sym.symbolic);
  CHECK_THROWS_AS(numeric_values(sym.values), Error);

  json mixed = json::parse(R"({"z1":6,"z2":6,"n":8,
    "alpha":["sym"],"gamma":["2"],"beta":{"1,2":"sym"}})");
  CHECK(request_from_json(mixed).symbolic);

  json bad_key = json::parse(R"({"z1":6,"z2":6,"n":8,
    "alpha":["1"],"gamma":["1"],"beta":{"9,9":"0"}})");
  CHECK_THROWS_AS(request_from_json(bad_key), ParseError);

  json bad_shape = json::parse(R"({"z1":6,"z2":6,"n":8,"alpha":["1","2"]})");
  CHECK_THROWS_AS(request_from_json(bad_shape), ParseError);

  json bad_spec = json::parse(R"({"z1":3,"z2":5,"n":8})");
  CHECK_THROWS_AS(request_from_json(bad_spec), ParseError);
}

TEST_CASE("bipoly json") {
  BiPoly p;
  p.set(2, 3, 4);
  p.set(1, 1, 2);
  json j = bipoly_json(p);
  CHECK(j["coeffs"] == json::array({json::array({1, 1, 2}), json::array({2, 3, 4})}));
}

TEST_CASE("report json") {
  Report r = reproduce("5-6-9", 1, 2);
  json j = report_json(r);
  CHECK(j["case"] == "5-6-9");
  CHECK(j["pass"] == true);
  CHECK(j["strata"].size() == r.strata.size());
}

TEST_CASE("constraint export json mirror") {
  ParamLaw law = build_symbolic_law(ParamSpec::make(4, 4, 6));
  ConstraintSet cs = jacobi_constraints(law);
  json j = constraints_json(cs);
  CHECK(j["closed"].is_array());
  CHECK(j["open"].size() == 2);
  CHECK(j["variables"] == json::array({"a1", "g1", "b_1_2"}));
}
