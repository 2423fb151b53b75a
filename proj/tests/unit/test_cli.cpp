#include "racgc/cli.hpp"

#include <json.hpp>

#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result cli(std::vector<std::string> args) {
  args.insert(args.begin(), "racgc");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  int code = racgc::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(cli({"euler", "theta:2,2,2"}).code == 0);
  CHECK(cli({"classify", "theta:2,2,2", "theta:3,3,3"}).code == 0);
  CHECK(cli({"classify", "theta:2,2,2", "theta:2,2,3"}).code == 1);
  CHECK(cli({"euler", "theta:2,x"}).code == 2);
  CHECK(cli({"euler", "{\"vertices\": [\"a\",\"a\"], \"edges\": []}"}).code == 2);
  CHECK(cli({"jsj", "theta:1,2,2"}).code == 3);
  CHECK(cli({"bogus"}).code == 2);
}

TEST_CASE("euler text output") {
  auto r = cli({"euler", "theta:2,2,2"});
  CHECK(r.out.find("-3/4") != std::string::npos);
}

TEST_CASE("JSON output is stable and parseable") {
  auto a = cli({"--json", "classify", "cycle:[[2,3],[4],[2,2]]", "cycle:[[2,2],[2,3],[4]]"});
  auto b = cli({"--json", "classify", "cycle:[[2,3],[4],[2,2]]", "cycle:[[2,2],[2,3],[4]]"});
  CHECK(a.out == b.out);
  auto j = nlohmann::json::parse(a.out);
  CHECK(j.at("command") == "classify");
  CHECK(j.at("result").at("verdict") == "commensurable");
}

TEST_CASE("witness flag") {
  auto r = cli({"--json", "classify", "--witness", "theta:2,2,2", "theta:3,3,3"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("result").at("witness").at("valid") == true);
}

TEST_CASE("inline cycle data") {
  std::string a = R"({"format":"cycle-data/1","vectors":[["-1/4","-1/4","-1/2"],["-1/4","-1/4","-1/2"],["-1/4","-1/2","-1/2"]],"chi_A":"-1/2"})";
  std::string b = R"({"format":"cycle-data/1","vectors":[[-1,-1,-2],["-1/2",-1,-1]],"chi_A":-1})";
  auto r = cli({"--json", "classify", "--witness", a, b});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("result").at("route") == "Cycle-cond1");
}

TEST_CASE("amalgam input") {
  std::string x = R"({"format":"amalgam/1","type1":["c"],"type2":[{"id":"s0","genus":1,"boundary":["c"]},{"id":"s1","genus":1,"boundary":["c"]},{"id":"s2","genus":1,"boundary":["c"]}]})";
  auto r = cli({"--json", "amalgam-to-racg", x});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("result").at("valid") == true);
}

TEST_CASE("halfcover on a bipartite tree") {
  std::string t = R"({"format":"bipartite/1","type1":["x"],"type2":["y0","y1","y2"],"edges":[["x","y0"],["x","y1"],["x","y2"]]})";
  auto r = cli({"--json", "halfcover", t});
  CHECK(r.code == 0);
}
