#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "sbs/cli.hpp"
#include "sbs/io.hpp"

using namespace sbs;
namespace fs = std::filesystem;

namespace {

int run(std::vector<std::string> args) {
  args.insert(args.begin(), "sbs");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  return cli::run(static_cast<int>(argv.size()), argv.data());
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "sbs_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("evolve single row at t = 0") {
  const auto out = scratch("t0.csv");
  REQUIRE(run({"evolve", "--t-max", "0", "--steps", "1", "--out", out.string()}) == 0);
  std::istringstream is(slurp(out));
  const auto rows = io::read_trajectory_csv(is);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].F == 0.0);
  CHECK(std::abs(rows[0].eG) <= 1e-12);
  CHECK(rows[0].log_negativity == 0.0);
}

TEST_CASE("evolve final row reproduces the vacuum correlation measure") {
  const auto out = scratch("f1.csv");
  REQUIRE(run({"evolve", "--lambda", "1", "--t-max", "0.5", "--steps", "6", "--out",
               out.string()}) == 0);
  std::istringstream is(slurp(out));
  const auto rows = io::read_trajectory_csv(is);
  REQUIRE(rows.size() == 6);
  CHECK(std::abs(rows.back().F - 0.6905489227709079) <= 1e-6);
}

TEST_CASE("csv and json agree") {
  const auto csv = scratch("same.csv");
  const auto json = scratch("same.json");
  const std::vector<std::string> common{"evolve", "--state", "thermal:0.5", "--t-max", "1",
                                        "--steps", "7"};
  auto a = common;
  a.insert(a.end(), {"--out", csv.string()});
  auto b = common;
  b.insert(b.end(), {"--out", json.string(), "--format", "json"});
  REQUIRE(run(a) == 0);
  REQUIRE(run(b) == 0);
  std::istringstream is(slurp(csv));
  const auto rows = io::read_trajectory_csv(is);
  const auto j = io::Json::parse(slurp(json));
  REQUIRE(j.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(j[i]["t"].get<double>() == rows[i].t);
    CHECK(j[i]["s_pkpk"].get<double>() == rows[i].sigma(Quadrature::pk, Quadrature::pk));
    CHECK(j[i]["logneg"].get<double>() == rows[i].log_negativity);
  }
}

TEST_CASE("identical runs are byte identical") {
  const auto a = scratch("det_a.csv");
  const auto b = scratch("det_b.csv");
  REQUIRE(run({"evolve", "--detuning", "0.2", "--t-max", "0.5", "--steps", "5", "--out",
               a.string()}) == 0);
  REQUIRE(run({"evolve", "--detuning", "0.2", "--t-max", "0.5", "--steps", "5", "--out",
               b.string()}) == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(!slurp(a).empty());
}

TEST_CASE("exit codes") {
  CHECK(run({"evolve", "--out", "/nonexistent-dir/x.csv", "--steps", "2"}) == 2);
  CHECK(run({"evolve", "--lambda", "-1", "--out", scratch("bad.csv").string()}) == 1);
  CHECK(run({"evolve", "--state", "thermal:0", "--out", scratch("bad.csv").string()}) == 1);
  CHECK(run({"evolve", "--steps", "0", "--out", scratch("bad.csv").string()}) == 1);
  CHECK(run({"sweep", "--axis", "theta", "--range", "1:0:3", "--out",
             scratch("bad.csv").string()}) == 1);
  CHECK(run({"sweep", "--axis", "theta", "--range", "nonsense", "--out",
             scratch("bad.csv").string()}) == 1);
  CHECK(run({"verify", "--detuning", "0.1", "--out", scratch("bad.json").string()}) == 1);
  CHECK(run({"frobnicate"}) == 1);
}

TEST_CASE("sweep output") {
  const auto out = scratch("sweep.csv");
  REQUIRE(run({"sweep", "--axis", "theta", "--range", "0.1:5:5", "--t-max", "0.5", "--out",
               out.string()}) == 0);
  std::istringstream is(slurp(out));
  std::string line;
  std::getline(is, line);
  CHECK(line == "theta,t,F,eG,logneg");
  std::vector<double> f;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::string field;
    for (int k = 0; k < 3; ++k) std::getline(ls, field, ',');
    f.push_back(io::parse_number(field));
  }
  REQUIRE(f.size() == 5);
  for (std::size_t i = 1; i < f.size(); ++i) CHECK(f[i] < f[i - 1]);
}

TEST_CASE("verify output") {
  const auto out = scratch("verify.json");
  REQUIRE(run({"verify", "--out", out.string()}) == 0);
  const auto j = io::Json::parse(slurp(out));
  CHECK(j["records"].size() == 16);
  CHECK(j["grid"]["points"] == 41);
}
