#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "gradual/frontend/completeness.hpp"
#include "gradual/frontend/parser.hpp"
#include "gradual/frontend/printer.hpp"
#include "gradual/harness/manifest.hpp"
#include "gradual/harness/microbench.hpp"
#include "gradual/harness/runner.hpp"
#include "test_util.hpp"

using namespace gradual;
namespace fs = std::filesystem;

namespace {

fs::path tempDir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("gradual_harness_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

harness::BenchmarkSpec corpusSpec(const std::string& name) {
  const auto specs = harness::loadManifest(fixtures::corpusPath("manifest.json"));
  const auto* spec = harness::findSpec(specs, name);
  EXPECT_NE(spec, nullptr) << name;
  return spec != nullptr ? *spec : harness::BenchmarkSpec{};
}

}  // namespace

TEST(Manifest, CorpusManifestIsComplete) {
  const auto specs = harness::loadManifest(fixtures::corpusPath("manifest.json"));
  std::vector<std::string> names;
  for (const auto& s : specs) {
    names.push_back(s.name);
    EXPECT_TRUE(fs::exists(s.typedPath)) << s.typedPath;
    EXPECT_TRUE(fs::exists(s.untypedPath)) << s.untypedPath;
    EXPECT_FALSE(s.expected.empty());
    EXPECT_FALSE(s.partiallyTyped);
  }
  EXPECT_EQ(names, (std::vector<std::string>{"List", "Towers", "Permute", "Queens", "Sieve", "Storage", "Check", "Nest"}));
}

TEST(Manifest, RoundTrip) {
  const auto dir = tempDir("manifest");
  std::vector<harness::BenchmarkSpec> specs = {
      {"A", (dir / "a.grace").string(), (dir / "sub" / "a_u.grace").string(), 7, "42", false},
      {"B", (dir / "b.grace").string(), (dir / "b_u.grace").string(), 0, "x", true},
  };
  harness::saveManifest((dir / "m.json").string(), specs);
  const auto loaded = harness::loadManifest((dir / "m.json").string());
  ASSERT_EQ(loaded.size(), 2u);
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_EQ(loaded[i].name, specs[i].name);
    EXPECT_EQ(loaded[i].typedPath, specs[i].typedPath);
    EXPECT_EQ(loaded[i].untypedPath, specs[i].untypedPath);
    EXPECT_EQ(loaded[i].innerProblemSize, specs[i].innerProblemSize);
    EXPECT_EQ(loaded[i].expected, specs[i].expected);
    EXPECT_EQ(loaded[i].partiallyTyped, specs[i].partiallyTyped);
  }
  EXPECT_EQ(harness::findSpec(loaded, "C"), nullptr);
}

TEST(Manifest, Errors) {
  const auto dir = tempDir("manifest_errors");
  EXPECT_THROW(harness::loadManifest((dir / "missing.json").string()), std::runtime_error);
  std::ofstream(dir / "bad.json") << "{\"benchmarks\": [{\"name\": 1}]}";
  EXPECT_THROW(harness::loadManifest((dir / "bad.json").string()), std::runtime_error);
  std::ofstream(dir / "garbage.json") << "not json";
  EXPECT_THROW(harness::loadManifest((dir / "garbage.json").string()), std::runtime_error);
}

TEST(Plan, Validation) {
  harness::RunPlan plan;
  EXPECT_EQ(plan.iterations, 100u);
  EXPECT_EQ(plan.warmupCutoff, 30u);
  EXPECT_EQ(plan.configs.size(), 6u);
  EXPECT_NO_THROW(plan.validate());
  plan.warmupCutoff = 100;
  EXPECT_THROW(plan.validate(), std::invalid_argument);
  plan.warmupCutoff = 0;
  plan.iterations = 0;
  EXPECT_THROW(plan.validate(), std::invalid_argument);
  EXPECT_THROW(harness::configByName("fast"), std::invalid_argument);
  EXPECT_TRUE(harness::configByName("untyped").untypedVariant);
  EXPECT_FALSE(harness::configByName("nochecks").config.checksEnabled);
}

TEST(Runner, GeometricMean) {
  EXPECT_DOUBLE_EQ(harness::geometricMean({1000, 2, 8}, 1), 4.0);
  EXPECT_NEAR(harness::geometricMean({10, 10, 10}, 0), 10.0, 1e-9);
  EXPECT_EQ(harness::geometricMean({1, 2}, 2), 0);
}

TEST(Runner, ResultsAgreeAcrossVariants) {
  harness::RunPlan plan;
  plan.iterations = 3;
  plan.warmupCutoff = 1;
  const auto result = harness::runBenchmark(corpusSpec("List"), plan);
  ASSERT_EQ(result.configs.size(), 6u);
  for (const auto& c : result.configs) {
    EXPECT_TRUE(c.ok) << c.config.name << ": " << c.failure;
    EXPECT_EQ(c.iterationNs.size(), 3u);
    EXPECT_GT(c.geomeanNs, 0);
  }
  EXPECT_EQ(result.find("nochecks")->output, result.find("both")->output);
  EXPECT_EQ(result.find("missing"), nullptr);
  EXPECT_EQ(harness::referenceResult(corpusSpec("List").untypedPath), "1124250");
}

TEST(Runner, VerificationFailureAbortsConfig) {
  auto spec = corpusSpec("Towers");
  spec.expected = "0";
  const auto r = harness::runConfig(spec, harness::configByName("both"), 5, 0);
  EXPECT_FALSE(r.ok);
  EXPECT_NE(r.failure.find("expected 0"), std::string::npos);
  EXPECT_EQ(r.iterationNs.size(), 1u);
}

TEST(Runner, IncompleteTypedVariantIsRejected) {
  auto spec = corpusSpec("Check");
  spec.typedPath = fixtures::corpusPath("vehicles/untyped_registration.grace");
  const auto r = harness::runConfig(spec, harness::configByName("both"), 1, 0);
  EXPECT_FALSE(r.ok);
  EXPECT_NE(r.failure.find("missing type annotation"), std::string::npos);
}

TEST(Runner, SummaryCsv) {
  harness::RunPlan plan;
  plan.iterations = 2;
  plan.warmupCutoff = 0;
  plan.configs = {harness::configByName("neither")};
  const auto result = harness::runBenchmark(corpusSpec("Check"), plan);
  EXPECT_EQ(harness::summaryCsvHeader(), "benchmark,config,geomeanTimeNs,checkGeneric,isSubtypeOf,fastHits\n");
  const std::string rows = harness::summaryCsvRows(result);
  EXPECT_EQ(rows.rfind("Check,neither,", 0), 0u);
  EXPECT_NE(rows.find(",100,100,0\n"), std::string::npos);
  const auto dir = tempDir("reports");
  harness::writeRunReports(result, dir.string());
  EXPECT_TRUE(fs::exists(dir / "Check-neither.json"));
}

TEST(Microbenchmarks, GeneratesSixVariantsEach) {
  const auto dir = tempDir("micro");
  const auto specs = harness::generateMicrobenchmarks(dir.string());
  ASSERT_EQ(specs.size(), 12u);
  EXPECT_EQ(specs[0].name, "Check0");
  EXPECT_EQ(specs[11].name, "Nest5");
  EXPECT_TRUE(fs::exists(dir / "manifest.json"));
  EXPECT_EQ(harness::loadManifest((dir / "manifest.json").string()).size(), 12u);
  for (const auto& spec : specs) {
    EXPECT_TRUE(fs::exists(spec.typedPath));
    EXPECT_TRUE(fs::exists(spec.untypedPath));
    EXPECT_EQ(spec.expected, "10");
  }
}

TEST(Microbenchmarks, AnnotationCounts) {
  using harness::MicroKind;
  const auto check0 = frontend::parse(harness::microbenchmarkSource(MicroKind::Check, 0));
  EXPECT_EQ(frontend::checkCompleteness(check0).size(), 5u);
  const auto nest0 = frontend::parse(harness::microbenchmarkSource(MicroKind::Nest, 0));
  EXPECT_EQ(frontend::checkCompleteness(nest0).size(), 50u);
  for (int k = 0; k <= 5; ++k) {
    const auto check = frontend::parse(harness::microbenchmarkSource(MicroKind::Check, k));
    const auto nest = frontend::parse(harness::microbenchmarkSource(MicroKind::Nest, k));
    EXPECT_EQ(check.sites.size(), static_cast<std::size_t>(k));
    EXPECT_EQ(nest.sites.size(), static_cast<std::size_t>(10 * k));
  }
  EXPECT_THROW(harness::microbenchmarkSource(MicroKind::Check, 6), std::invalid_argument);
}

TEST(Microbenchmarks, CorpusCopiesMatchTheGenerator) {
  EXPECT_EQ(fixtures::readFile(fixtures::corpusPath("check_5.grace")),
            harness::microbenchmarkSource(harness::MicroKind::Check, 5));
  EXPECT_EQ(fixtures::readFile(fixtures::corpusPath("nest_5.grace")),
            harness::microbenchmarkSource(harness::MicroKind::Nest, 5));
}

TEST(Microbenchmarks, CheckAndNestCountAlike) {
  const auto dir = tempDir("micro_runs");
  const auto specs = harness::generateMicrobenchmarks(dir.string());
  for (const auto& spec : specs) {
    for (const char* config : {"both", "neither", "untyped"}) {
      const auto r = harness::runConfig(spec, harness::configByName(config), 4, 0);
      EXPECT_TRUE(r.ok) << spec.name << " " << config << ": " << r.failure;
    }
  }
}

TEST(Determinism, CountsRepeat) {
  for (const char* name : {"Storage", "Queens"}) {
    const auto a = harness::runConfig(corpusSpec(name), harness::configByName("both"), 3, 0);
    const auto b = harness::runConfig(corpusSpec(name), harness::configByName("both"), 3, 0);
    ASSERT_TRUE(a.ok && b.ok) << a.failure << b.failure;
    EXPECT_EQ(a.stats.totals(), b.stats.totals()) << name;
  }
}
