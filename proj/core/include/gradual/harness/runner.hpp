#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gradual/harness/manifest.hpp"
#include "gradual/interp/exit_status.hpp"
#include "gradual/interp/interpreter.hpp"
#include "gradual/stats/stats_registry.hpp"

namespace gradual::harness {

/// A configuration as run by the harness: which variant and which checks.
struct NamedConfig {
  std::string name;
  stats::OptimizationConfig config;
  bool untypedVariant = false;
};

/// both, node, matrix, neither, untyped, nochecks.
std::vector<NamedConfig> standardConfigs();
/// Throws std::invalid_argument for an unknown name.
NamedConfig configByName(const std::string& name);

struct RunPlan {
  std::uint64_t iterations = 100;
  std::uint64_t warmupCutoff = 30;
  std::vector<NamedConfig> configs = standardConfigs();

  /// Throws std::invalid_argument unless 0 <= warmupCutoff < iterations.
  void validate() const;
};

struct ConfigResult {
  NamedConfig config;
  bool ok = false;
  std::string failure;  // why the run was aborted, empty when ok
  interp::ExitStatus status;
  std::vector<std::uint64_t> iterationNs;
  std::vector<std::uint64_t> iterationCheckGeneric;  // check_generic delta per iteration
  stats::StatsRegistry stats;
  double geomeanNs = 0;  // over iterations after the cutoff
  std::string output;    // everything the program printed
};

struct RunResult {
  std::string benchmark;
  std::uint64_t iterations = 0;
  std::vector<ConfigResult> configs;

  const ConfigResult* find(const std::string& configName) const;
};

/// Loads the variant once per configuration and requests `benchmark`
/// `plan.iterations` times, verifying every result against `spec.expected`.
RunResult runBenchmark(const BenchmarkSpec& spec, const RunPlan& plan);

/// Instrumentation beyond the counters, for tests.
struct RunHooks {
  bool trackTypePairs = false;
  interp::CheckObserver observer;
};

/// Runs one configuration; see runBenchmark.
ConfigResult runConfig(const BenchmarkSpec& spec, const NamedConfig& config, std::uint64_t iterations,
                       std::uint64_t warmupCutoff, const RunHooks& hooks = {});

/// asString of one `benchmark` result of the untyped variant without checks.
std::string referenceResult(const std::string& untypedPath);

double geometricMean(const std::vector<std::uint64_t>& values, std::size_t from);

/// Header line and rows: benchmark,config,geomeanTimeNs,checkGeneric,isSubtypeOf,fastHits
std::string summaryCsvHeader();
std::string summaryCsvRows(const RunResult& result);

/// Writes `<out>/<benchmark>-<config>.json` per configuration.
void writeRunReports(const RunResult& result, const std::string& outDir);

}  // namespace gradual::harness
