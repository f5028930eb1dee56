#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "test_util.hpp"

using namespace gradual;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = gradual::cli::runCli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path writeTemp(const std::string& name, const std::string& text) {
  const fs::path dir = fs::temp_directory_path() / "gradual_cli_test";
  fs::create_directories(dir);
  std::ofstream(dir / name) << text;
  return dir / name;
}

}  // namespace

TEST(Cli, RunTypedRegistrationSucceeds) {
  const auto r = invoke({"run", fixtures::corpusPath("vehicles/typed_registration.grace")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "Registration: JO3553\n");
}

TEST(Cli, RunDepartmentMismatchIsTypeError) {
  const auto r = invoke({"run", fixtures::corpusPath("vehicles/department_mismatch.grace")});
  EXPECT_EQ(r.code, 4);
  EXPECT_NE(r.err.find("doesn't implement"), std::string::npos);
  EXPECT_NE(r.err.find("department_mismatch.grace:20:"), std::string::npos);
}

TEST(Cli, RunWithoutChecksSucceeds) {
  EXPECT_EQ(invoke({"run", "--no-checks", fixtures::corpusPath("vehicles/department_mismatch.grace")}).code, 0);
  for (const char* flag : {"--no-node-opt", "--no-matrix", "--no-read-checks"}) {
    EXPECT_EQ(invoke({"run", flag, fixtures::corpusPath("vehicles/department_mismatch.grace")}).code, 4) << flag;
  }
}

TEST(Cli, ParseAndResolveErrorsExitTwo) {
  EXPECT_EQ(invoke({"run", writeTemp("parse.grace", "method (").string()}).code, 2);
  const auto r = invoke({"run", writeTemp("resolve.grace", "print(nope)").string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("resolve.grace:1:"), std::string::npos);
}

TEST(Cli, RuntimeErrorsExitFive) {
  EXPECT_EQ(invoke({"run", writeTemp("dnu.grace", "nil.foo").string()}).code, 5);
  EXPECT_EQ(invoke({"run", writeTemp("bounds.grace", "newArray(1).at(2)").string()}).code, 5);
}

TEST(Cli, UsageErrorsExitOne) {
  EXPECT_EQ(invoke({}).code, 1);
  EXPECT_EQ(invoke({"frobnicate"}).code, 1);
  EXPECT_EQ(invoke({"run", "/nonexistent/file.grace"}).code, 1);
  EXPECT_EQ(invoke({"bench", "Nope", "--manifest", fixtures::corpusPath("manifest.json")}).code, 1);
  EXPECT_EQ(invoke({"bench", "List", "--iterations", "5", "--cutoff", "5", "--manifest", fixtures::corpusPath("manifest.json")}).code, 1);
  EXPECT_EQ(invoke({"bench", "List", "--configs", "bogus", "--manifest", fixtures::corpusPath("manifest.json")}).code, 1);
}

TEST(Cli, RequireCompleteTypes) {
  const auto r = invoke({"run", "--require-complete-types", fixtures::corpusPath("vehicles/untyped_registration.grace")});
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(r.out, "");
  EXPECT_EQ(invoke({"run", "--require-complete-types", fixtures::corpusPath("list.grace")}).code, 0);
}

TEST(Cli, CheckTypes) {
  const auto incomplete = invoke({"checktypes", fixtures::corpusPath("vehicles/untyped_registration.grace")});
  EXPECT_EQ(incomplete.code, 3);
  EXPECT_NE(incomplete.out.find("untyped_registration.grace:5:26: missing type annotation: parameter v of printRegistration"),
            std::string::npos)
      << incomplete.out;
  const auto complete = invoke({"checktypes", fixtures::corpusPath("check_5.grace")});
  EXPECT_EQ(complete.code, 0);
  EXPECT_NE(complete.out.find("completely typed"), std::string::npos);
}

TEST(Cli, StatsJson) {
  const fs::path stats = fs::temp_directory_path() / "gradual_cli_test" / "stats.json";
  fs::remove(stats);
  EXPECT_EQ(invoke({"run", "--stats", stats.string(), fixtures::corpusPath("vehicles/typed_registration.grace")}).code, 0);
  std::ifstream in(stats);
  ASSERT_TRUE(in.good());
  const auto doc = nlohmann::json::parse(in);
  EXPECT_EQ(doc.at("totals").at("checkGeneric"), 1);
  EXPECT_EQ(doc.at("perSite").size(), 1u);
}

TEST(Cli, BenchWritesReports) {
  const fs::path out = fs::temp_directory_path() / "gradual_cli_test" / "bench";
  fs::remove_all(out);
  const auto r = invoke({"bench", "Check", "--iterations", "3", "--cutoff", "1", "--configs", "both,neither", "--out",
                      out.string(), "--manifest", fixtures::corpusPath("manifest.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("benchmark,config,geomeanTimeNs,checkGeneric,isSubtypeOf,fastHits"), std::string::npos);
  EXPECT_NE(r.out.find("Check,neither,"), std::string::npos);
  for (const char* file : {"Check-both.json", "Check-neither.json", "summary.csv", "aggregate.csv", "aggregate.json"}) {
    EXPECT_TRUE(fs::exists(out / file)) << file;
  }
}

TEST(Cli, GenmicroAndErase) {
  const fs::path dir = fs::temp_directory_path() / "gradual_cli_test" / "micro";
  fs::remove_all(dir);
  EXPECT_EQ(invoke({"genmicro", dir.string()}).code, 0);
  EXPECT_TRUE(fs::exists(dir / "nest_3.grace"));
  const auto erased = invoke({"erase", fixtures::corpusPath("vehicles/typed_registration.grace")});
  EXPECT_EQ(erased.code, 0);
  EXPECT_EQ(erased.out.find(": Vehicle"), std::string::npos);
  EXPECT_NE(erased.out.find("printRegistration(v)"), std::string::npos);
}
