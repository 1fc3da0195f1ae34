#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "tiltwall/catalog.hpp"
#include "tiltwall/cli.hpp"

using namespace tiltwall;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "tiltwall");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

int count(const std::string& hay, const std::string& needle) {
  int n = 0;
  for (auto p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++n;
  return n;
}

int lines(const std::string& s) { return count(s, "\n"); }

std::string temp_file(const std::string& name, const std::string& body) {
  const auto p = std::filesystem::temp_directory_path() / ("tiltwall_test_" + name);
  std::ofstream(p) << body;
  return p.string();
}

}  // namespace

TEST_CASE("walls table, csv and json") {
  auto r = cli({"walls", "--class", "2,0,-5", "--beta", "-2"});
  REQUIRE(r.code == 0);
  CHECK(lines(r.out) == 2 + 3);
  CHECK(r.out.find("3  -7/3") != std::string::npos);

  r = cli({"walls", "--class", "2,0,-5", "--beta", "-2", "--format", "csv"});
  REQUIRE(r.code == 0);
  CHECK(r.out ==
        "center,radius_sq,cross_a,witness_v0,witness_v1,witness_v2\n"
        "-3,4,3/2,0,2,-6\n-5/2,5/4,1/2,0,2,-5\n-7/3,4/9,1/6,-2,6,-9\n");

  r = cli({"walls", "--class", "2,0,-5", "--beta", "-2", "--format", "json"});
  REQUIRE(r.code == 0);
  const Json j = parse_json_text(r.out);
  REQUIRE(j.at("walls").size() == 3);
  CHECK(candidate_from_json(j.at("walls")[2]).wall == NumericalWall::semicircle(Rational(-7, 3), Rational(4, 9)));
}

TEST_CASE("walls with nothing to report is not an error") {
  const auto r = cli({"walls", "--class", "2,-2,1", "--beta", "-2"});
  CHECK(r.code == 0);
  CHECK(lines(r.out) == 2);
}

TEST_CASE("svg is deterministic and draws every wall") {
  const auto a = cli({"walls", "--class", "2,0,-5", "--beta", "-2", "--format", "svg"});
  const auto b = cli({"walls", "--class", "2,0,-5", "--beta", "-2", "--format", "svg", "--threads", "4"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(count(a.out, "class=\"wall\"") == 3);
  CHECK(a.out.rfind("<svg", 0) == 0);
}

TEST_CASE("usage errors exit 2") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"walls", "--class", "2,0"}).code == 2);
  CHECK(cli({"walls", "--class", "2,0", "--beta", "1"}).code == 2);
  CHECK(cli({"walls", "--class", "2,0,-5", "--beta", "x"}).code == 2);
  CHECK(cli({"walls", "--class", "2,-2,1", "--beta", "-1"}).code == 2);
  CHECK(cli({"walls", "--class", "1,0,0", "--beta", "-1"}).code == 2);  // not in the ppas lattice
  CHECK(cli({"chd", "--scenario", "nope"}).code == 2);
  CHECK(cli({"chd", "--scenario", "ppas-ideal-5-W1-walls"}).code == 2);
  CHECK(cli({"walls", "--class", "2,0,-5", "--beta", "-2", "--format", "xml"}).code == 2);
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("chd and hn on the collinear length-4 tree") {
  auto r = cli({"chd", "--scenario", "ppas-ideal-4-collinear", "--format", "json"});
  REQUIRE(r.code == 0);
  const Json j = parse_json_text(r.out);
  const auto f = function_from_json(j.at("function"));
  CHECK(f.pieces.size() == 4);
  CHECK(f == *load_scenario("ppas-ideal-4-collinear").expected_chd0);
  CHECK(j.at("breakpoints").size() == 3);

  r = cli({"chd", "--scenario", "ppas-ideal-4-collinear", "--format", "csv", "--from", "0", "--to", "4", "--step",
           "1"});
  CHECK(r.out == "x,value\n0,0\n1,0\n2,1\n3,5\n4,12\n");

  r = cli({"hn", "--scenario", "ppas-ideal-4-collinear", "--a", "1/1000", "--beta", "-5/2", "--format", "json"});
  REQUIRE(r.code == 0);
  CHECK(parse_json_text(r.out).size() == 3);
}

TEST_CASE("dual flag reflects") {
  const auto a = cli({"chd", "--scenario", "ppas-ideal-2", "--k", "1", "--format", "json"});
  const auto b = cli({"chd", "--scenario", "ppas-ideal-2", "--k", "1", "--dual", "--format", "json"});
  const auto fa = function_from_json(parse_json_text(a.out).at("function"));
  const auto fb = function_from_json(parse_json_text(b.out).at("function"));
  for (int x = -6; x <= 6; ++x) CHECK(fa(Rational(x)) == fb(Rational(-x)));
}

TEST_CASE("tampered tree fails validation with the invariant named") {
  const auto exported = cli({"catalog", "--export", "--id", "ppas-ideal-3-generic"});
  REQUIRE(exported.code == 0);
  const std::string good = temp_file("good.json", exported.out);
  CHECK(cli({"validate", "--tree", good}).code == 0);

  Json j = parse_json_text(exported.out);
  j["tree"]["children"][0]["class"] = to_json(ChernClass(2, -2, Rational(0)));
  const std::string bad = temp_file("bad.json", j.dump());
  const auto r = cli({"validate", "--tree", bad});
  CHECK(r.code == 1);
  CHECK(r.out.find("class-sum") != std::string::npos);

  const auto c = cli({"chd", "--tree", bad});
  CHECK(c.code == 1);
  CHECK(c.err.find("class-sum") != std::string::npos);

  CHECK(cli({"validate", "--tree", temp_file("junk.json", "{not json")}).code == 2);
}

TEST_CASE("tree round trip through the cli") {
  for (const auto& id : list_scenarios()) {
    const Scenario& s = load_scenario(id);
    if (!s.tree) continue;
    INFO(id);
    const std::string path = temp_file(id + ".json", to_json(*s.tree).dump());
    const auto r = cli({"chd", "--tree", path, "--preset", s.preset, "--format", "json"});
    REQUIRE(r.code == 0);
    CHECK(function_from_json(parse_json_text(r.out).at("function")) == assemble_chd0(*s.tree));
  }
}

TEST_CASE("catalog listing") {
  const auto r = cli({"catalog"});
  CHECK(r.code == 0);
  CHECK(lines(r.out) == 1 + 13);
  CHECK(cli({"catalog", "--id", "ppas-abel-jacobi"}).out.find("(0,2,0)") != std::string::npos);
}
