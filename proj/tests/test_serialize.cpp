#include <random>

#include "doctest.h"
#include "tiltwall/catalog.hpp"
#include "tiltwall/serialize.hpp"
#include "trees.hpp"

using namespace tiltwall;
using testtrees::cc;

TEST_CASE("class json") {
  CHECK(to_json(cc(2, 0, "-5/2")).dump() == R"([2,0,"-5/2"])");
  CHECK(class_from_json(Json::parse(R"([2, -4, "4"])")) == cc(2, -4, "4"));
  CHECK(class_from_json(Json::parse(R"([2, -4, 4])")) == cc(2, -4, "4"));
  const ChernClass big{parse_integer("123456789012345678901234567890"), Integer(2), Rational(1)};
  CHECK(to_json(big)[0].is_string());
  CHECK(class_from_json(to_json(big)) == big);
  CHECK_THROWS_AS(class_from_json(Json::parse("[1,2]")), std::invalid_argument);
  CHECK_THROWS_AS(class_from_json(Json::parse(R"([1,2,"x"])")), std::invalid_argument);
  CHECK_THROWS_AS(class_from_json(Json::parse(R"([1.5,2,"1"])")), std::invalid_argument);
}

TEST_CASE("config json") {
  for (const auto& name : SurfaceConfig::preset_names()) {
    const auto cfg = SurfaceConfig::preset(name);
    CHECK(config_from_json(to_json(cfg)) == cfg);
  }
  CHECK(config_from_json(Json::parse(R"({"L2": 6, "minimal_discriminant": 12})")) == SurfaceConfig::with_defaults(6, 12));
  CHECK_THROWS_AS(config_from_json(Json::parse(R"({"L2": 0, "minimal_discriminant": 1})")), std::invalid_argument);
  CHECK_THROWS_AS(config_from_json(Json::parse(R"({"L2": 2})")), std::invalid_argument);
}

TEST_CASE("wall json") {
  const auto w = NumericalWall::semicircle(Rational::parse("-5/2"), Rational::parse("5/4"));
  CHECK(to_json(w).dump() == R"({"center":"-5/2","radius_sq":"5/4"})");
  CHECK(wall_from_json(to_json(w)) == w);
  const auto v = NumericalWall::vertical(Rational::parse("1/3"));
  CHECK(to_json(v).dump() == R"({"vertical":"1/3"})");
  CHECK(wall_from_json(to_json(v)) == v);
  CHECK_THROWS_AS(wall_from_json(Json::parse(R"({"center":"0","radius_sq":"-1"})")), std::invalid_argument);
}

TEST_CASE("tree json") {
  for (const auto& t : testtrees::all_trees()) CHECK(tree_from_json(to_json(t)) == t);
  for (const auto& s : all_scenarios()) {
    if (s.tree) CHECK(tree_from_json(Json::parse(to_json(*s.tree).dump())) == *s.tree);
  }
  const auto j = to_json(testtrees::ideal2());
  CHECK(j["class"].dump() == R"([2,0,"-2"])");
  CHECK(j["wall"]["center"] == "-3/2");
  CHECK(j["children"].size() == 2);
  CHECK_FALSE(j["children"][0].contains("wall"));
  CHECK_THROWS_AS(tree_from_json(Json::parse(R"({"children": []})")), std::invalid_argument);
}

TEST_CASE("function json") {
  for (const auto& t : testtrees::all_trees()) {
    const auto f = assemble_chd0(t);
    CHECK(function_from_json(to_json(f)) == f);
    CHECK(function_from_json(Json::parse(to_json(assemble_chd1(t)).dump())) == assemble_chd1(t));
  }
  const auto f = trivial_chd(cc(2, 0, "-5"));
  CHECK(to_json(f).dump() == R"j({"breakpoints":["sqrt(5)"],"pieces":[["0","0","0"],["-5","0","1"]]})j");
  CHECK(function_from_json(to_json(f)) == f);
  CHECK_THROWS_AS(function_from_json(Json::parse(R"({"breakpoints":["1"],"pieces":[["0","0","0"]]})")),
                  std::invalid_argument);
}

TEST_CASE("random round trips") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> c(-1000, 1000), d(1, 50), r(1, 40);
  for (int i = 0; i < 500; ++i) {
    const ChernClass v{Integer(c(rng)), Integer(c(rng)), Rational(Integer(c(rng)), Integer(d(rng)))};
    CHECK(class_from_json(Json::parse(to_json(v).dump())) == v);
    const auto w = NumericalWall::semicircle(Rational(Integer(c(rng)), Integer(d(rng))), Rational(Integer(r(rng)), Integer(d(rng))));
    CHECK(wall_from_json(Json::parse(to_json(w).dump())) == w);
    PiecewiseQuadratic f;
    const Integer rad = r(rng) + 1;
    QI x(Rational(Integer(c(rng)), Integer(d(rng))), Rational(Integer(c(rng)), Integer(d(rng))), rad);
    f.breakpoints = {x, x + QI(Rational(Integer(r(rng))), Rational(0), rad)};
    for (int k = 0; k < 3; ++k) {
      f.pieces.push_back({Rational(Integer(c(rng)), Integer(d(rng))), Rational(Integer(c(rng)), Integer(d(rng))),
                          Rational(Integer(c(rng)), Integer(d(rng)))});
    }
    CHECK(function_from_json(Json::parse(to_json(f).dump())) == f);
  }
}

TEST_CASE("candidate json") {
  EnumerationOptions o;
  o.a_min = Rational::parse("1/100");
  for (const auto& c : enumerate_candidates(cc(2, 0, "-5"), Rational(-2), o, SurfaceConfig::preset("ppas"))) {
    const auto back = candidate_from_json(Json::parse(to_json(c).dump()));
    CHECK(back.wall == c.wall);
    CHECK(back.witness == c.witness);
    CHECK(back.witnesses == c.witnesses);
    CHECK(back.cross_a == c.cross_a);
  }
}

TEST_CASE("bad json text") { CHECK_THROWS_AS(parse_json_text("{"), std::invalid_argument); }
