#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "wdsmooth/cli/commands.hpp"

using namespace wdsmooth;
using wdsmooth::cli::json;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "wdsmooth");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

json run_json(const std::vector<std::string>& args) {
  CliRun r = run(args);
  EXPECT_EQ(r.code, 0) << r.err;
  return json::parse(r.out);
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("wdsmooth_test_" + name);
}

}  // namespace

TEST(Cli, ClassifySingular) {
  json j = run_json({"classify", "--group", "GL3", "--orbit", "2,1", "--q", "4", "--l", "11"});
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["command"], "classify");
  EXPECT_EQ(j["results"]["status"], "Singular");
}

TEST(Cli, ClassifyProduct) {
  json j = run_json({"classify", "--group", "GL3xGL2", "--orbit", "2,1;2", "--q", "4", "--l", "11"});
  EXPECT_EQ(j["results"]["status"], "Singular");
  EXPECT_EQ(j["results"]["factors"].size(), 2u);
  json k = run_json({"classify", "--group", "GL2xGL2", "--orbit", "2;2", "--q", "4", "--l", "11"});
  EXPECT_EQ(k["results"]["status"], "Smooth");
}

TEST(Cli, ClassifyNamedOrbitCarriesProvenance) {
  json j = run_json({"classify", "--group", "E7", "--orbit", "E7(a3)", "--q", "2"});
  EXPECT_EQ(j["results"]["status"], "Smooth");
  ASSERT_EQ(j["provenance"].size(), 1u);
  EXPECT_FALSE(j["provenance"][0]["source"].get<std::string>().empty());
}

TEST(Cli, WddD4) {
  json j = run_json({"wdd", "--group", "D4", "--orbit", "5,3"});
  EXPECT_EQ(j["results"]["diagram"]["chain"], json({2, 0, 2}));
  EXPECT_EQ(j["results"]["diagram"]["fork"], 2);
}

TEST(Cli, WddTables) {
  json e7 = run_json({"wdd", "--group", "E7"});
  EXPECT_EQ(e7["results"]["count"], 6);
  for (const auto& row : e7["results"]["rows"]) EXPECT_NE(row["provenance"], "computed");
  json d6 = run_json({"wdd", "--group", "D6"});
  EXPECT_EQ(d6["results"]["count"], 3);
}

TEST(Cli, Orbits) {
  json j = run_json({"orbits", "--group", "C2"});
  EXPECT_EQ(j["results"]["count"], 4);
}

TEST(Cli, ArithOrder) {
  json j = run_json({"arith", "order", "--group", "C3", "--q", "3"});
  EXPECT_EQ(j["results"]["order"], "9170703360");
  EXPECT_EQ(j["command"], "arith order");
}

TEST(Cli, ArithConsiderateAndBanal) {
  json c = run_json({"arith", "considerate", "--group", "SO7", "--q", "3", "--l", "11"});
  EXPECT_EQ(c["results"]["considerate"], false);
  EXPECT_EQ(c["results"]["failing_power"], 5);
  json b = run_json({"arith", "banal", "--group", "Sp6", "--q", "3", "--l", "11"});
  EXPECT_EQ(b["results"]["banal"], true);
}

TEST(Cli, ArithSweep) {
  json j = run_json({"arith", "sweep", "--l", "50", "--q", "20"});
  EXPECT_TRUE(j["results"]["considerate_not_banal"].empty());
  EXPECT_FALSE(j["results"]["sp6_banal_not_considerate"].empty());
}

TEST(Cli, VerifyCommands) {
  json e = run_json({"verify", "enumerate", "--group", "GL2", "--p", "5", "--q", "2"});
  EXPECT_EQ(e["results"]["regular_stratum_tangent_mismatches"], 0);
  json n = run_json({"verify", "nilpotency", "--group", "GL2", "--p", "7", "--q", "4"});
  EXPECT_EQ(n["results"]["non_nilpotent"], 0);
  json t = run_json({"verify", "tangent", "--group", "GL3", "--orbit", "3", "--p", "11", "--q", "4", "--samples", "5"});
  EXPECT_EQ(t["results"]["tangent_dims"], json({{"9", 5}}));
  json b = run_json({"verify", "bundle", "--group", "GL3", "--p", "11", "--q", "4", "--samples", "5"});
  EXPECT_EQ(b["results"]["all_match"], true);
  json x = run_json({"verify", "expbridge", "--group", "GL3", "--p", "11", "--q", "4", "--samples", "5", "--orbit", "2,1"});
  EXPECT_EQ(x["results"]["passed"], 5);
}

TEST(Cli, Certify) {
  json j = run_json({"certify", "--group", "GL3", "--orbit", "2,1", "--p", "11", "--s", "2"});
  EXPECT_EQ(j["results"]["eps"], json({2, 1, 1, 1}));
  EXPECT_EQ(j["results"]["lower_bound"], 10);
  EXPECT_EQ(j["results"]["valid"], true);
}

TEST(Cli, ErrorsAndExitCodes) {
  CliRun bad_group = run({"classify", "--group", "Q3", "--orbit", "1", "--q", "2"});
  EXPECT_EQ(bad_group.code, 1);
  EXPECT_EQ(bad_group.err.rfind("error: validation: ", 0), 0u) << bad_group.err;
  CliRun bad_orbit = run({"classify", "--group", "GL3", "--orbit", "2,x", "--q", "2"});
  EXPECT_EQ(bad_orbit.code, 1);
  CliRun missing = run({"classify", "--group", "GL3"});
  EXPECT_EQ(missing.code, 1);
  CliRun unknown_flag = run({"classify", "--bogus", "1"});
  EXPECT_EQ(unknown_flag.code, 1);
  EXPECT_EQ(unknown_flag.err.rfind("error: usage: ", 0), 0u);
  CliRun inconsiderate = run({"certify", "--group", "GL3", "--orbit", "2,1", "--p", "7", "--s", "2"});
  EXPECT_EQ(inconsiderate.code, 1);
  EXPECT_NE(inconsiderate.err.find("precondition"), std::string::npos);
  CliRun unsupported = run({"wdd", "--group", "E8"});
  EXPECT_EQ(unsupported.code, 1);
  EXPECT_EQ(unsupported.err.rfind("error: unsupported: ", 0), 0u);
  // one line only
  EXPECT_EQ(std::count(unsupported.err.begin(), unsupported.err.end(), '\n'), 1);
}

TEST(Cli, InconsiderateNilpotencyIsReportedNotFailed) {
  CliRun ok = run({"verify", "nilpotency", "--group", "GL2", "--p", "7", "--q", "6"});
  EXPECT_EQ(ok.code, 0) << ok.err;
  json j = json::parse(ok.out);
  EXPECT_EQ(j["results"]["considerate"], false);
  EXPECT_GT(j["results"]["non_nilpotent"].get<int>(), 0);
  EXPECT_FALSE(j["results"]["witness"].is_null());
}

TEST(Cli, ConfigFileAndOverride) {
  auto path = temp_file("config.txt");
  {
    std::ofstream f(path);
    f << "# run configuration\ngroup = GL3\norbit = 2,1\nq = 4\nl = 11\n";
  }
  json j = run_json({"classify", "--config", path.string()});
  EXPECT_EQ(j["results"]["status"], "Singular");
  json k = run_json({"classify", "--config", path.string(), "--orbit", "3"});
  EXPECT_EQ(k["results"]["status"], "Smooth");
  std::filesystem::remove(path);
  EXPECT_EQ(run({"classify", "--config", "/nonexistent/x"}).code, 1);
}

TEST(Cli, OutFileAndTableFormat) {
  auto path = temp_file("out.json");
  CliRun r = run({"arith", "order", "--group", "GL2", "--q", "5", "--out", path.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  json j = json::parse(f);
  EXPECT_EQ(j["results"]["order"], "480");
  std::filesystem::remove(path);
  CliRun t = run({"wdd", "--group", "D5", "--format", "table"});
  EXPECT_EQ(t.code, 0);
  EXPECT_NE(t.out.find("9,1"), std::string::npos);
}

TEST(Cli, DeterministicWithSeed) {
  std::vector<std::string> args = {"verify", "tangent", "--group", "GL3", "--orbit", "2,1", "--p", "11", "--q", "4",
                                   "--samples", "10", "--seed", "7"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, ReportRoundTrips) {
  CliRun r = run({"certify", "--group", "GSp4", "--orbit", "2,2", "--p", "11", "--s", "2"});
  ASSERT_EQ(r.code, 0);
  json j = json::parse(r.out);
  EXPECT_EQ(j.dump(2) + "\n", r.out);
}

TEST(Cli, BinaryExitCodes) {
  const std::string bin = WDSMOOTH_CLI_PATH;
  EXPECT_EQ(std::system((bin + " arith order --group GL2 --q 5 > /dev/null").c_str()), 0);
  int status = std::system((bin + " classify --group Q3 --orbit 1 --q 2 > /dev/null 2>&1").c_str());
  EXPECT_EQ(WEXITSTATUS(status), 1);
}
