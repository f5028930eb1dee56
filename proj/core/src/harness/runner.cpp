#include "gradual/harness/runner.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "gradual/frontend/completeness.hpp"
#include "gradual/frontend/parser.hpp"
#include "gradual/interp/interpreter.hpp"
#include "gradual/stats/report.hpp"

namespace gradual::harness {

using stats::OptimizationConfig;

std::vector<NamedConfig> standardConfigs() {
  return {
      {"both", OptimizationConfig::both(), false},
      {"node", OptimizationConfig::nodeOnly(), false},
      {"matrix", OptimizationConfig::matrixOnly(), false},
      {"neither", OptimizationConfig::neither(), false},
      {"untyped", OptimizationConfig::both(), true},
      {"nochecks", OptimizationConfig::unchecked(), false},
  };
}

NamedConfig configByName(const std::string& name) {
  for (auto& c : standardConfigs()) {
    if (c.name == name) return c;
  }
  throw std::invalid_argument("unknown configuration '" + name +
                              "' (expected both, node, matrix, neither, untyped or nochecks)");
}

void RunPlan::validate() const {
  if (iterations == 0) throw std::invalid_argument("iterations must be positive");
  if (warmupCutoff >= iterations) throw std::invalid_argument("warmup cutoff must be below the iteration count");
  if (configs.empty()) throw std::invalid_argument("no configurations selected");
}

const ConfigResult* RunResult::find(const std::string& configName) const {
  for (const auto& c : configs) {
    if (c.config.name == configName) return &c;
  }
  return nullptr;
}

double geometricMean(const std::vector<std::uint64_t>& values, std::size_t from) {
  if (from >= values.size()) return 0;
  double logSum = 0;
  for (std::size_t i = from; i < values.size(); ++i) {
    logSum += std::log(static_cast<double>(std::max<std::uint64_t>(values[i], 1)));
  }
  return std::exp(logSum / static_cast<double>(values.size() - from));
}

ConfigResult runConfig(const BenchmarkSpec& spec, const NamedConfig& config, std::uint64_t iterations,
                       std::uint64_t warmupCutoff, const RunHooks& hooks) {
  ConfigResult result{config, false, {}, {}, {}, {}, stats::StatsRegistry(config.config), 0, {}};
  result.stats.trackTypePairs(hooks.trackTypePairs);
  const std::string& path = config.untypedVariant ? spec.untypedPath : spec.typedPath;
  frontend::Program program;
  try {
    program = frontend::parseFile(path);
  } catch (const std::exception& e) {
    result.failure = e.what();
    return result;
  }
  if (!config.untypedVariant && !spec.partiallyTyped) {
    const auto missing = frontend::checkCompleteness(program);
    if (!missing.empty()) {
      result.failure = path + ": " + std::to_string(missing.size()) + " missing type annotation(s), first: " +
                       missing.front().description;
      return result;
    }
  }
  std::ostringstream out;
  interp::Interpreter interpreter(program, result.stats, out);
  if (hooks.observer) interpreter.setCheckObserver(hooks.observer);
  result.status = interpreter.load();
  if (!result.status.ok()) {
    result.failure = interp::describe(result.status);
    result.output = out.str();
    return result;
  }
  result.iterationNs.reserve(iterations);
  result.iterationCheckGeneric.reserve(iterations);
  std::string rendered;
  for (std::uint64_t i = 0; i < iterations; ++i) {
    const auto before = result.stats.totals().checkGeneric;
    const auto start = std::chrono::steady_clock::now();
    result.status = interpreter.call("benchmark", nullptr, &rendered);
    const auto end = std::chrono::steady_clock::now();
    result.iterationNs.push_back(
        static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(end - start).count()));
    result.iterationCheckGeneric.push_back(result.stats.totals().checkGeneric - before);
    if (!result.status.ok()) {
      result.failure = "iteration " + std::to_string(i + 1) + ": " + interp::describe(result.status);
      result.output = out.str();
      return result;
    }
    if (rendered != spec.expected) {
      result.failure = "iteration " + std::to_string(i + 1) + ": result " + rendered + ", expected " + spec.expected;
      result.output = out.str();
      return result;
    }
  }
  result.ok = true;
  result.output = out.str();
  result.geomeanNs = geometricMean(result.iterationNs, warmupCutoff);
  return result;
}

RunResult runBenchmark(const BenchmarkSpec& spec, const RunPlan& plan) {
  plan.validate();
  RunResult result;
  result.benchmark = spec.name;
  result.iterations = plan.iterations;
  for (const auto& config : plan.configs) {
    result.configs.push_back(runConfig(spec, config, plan.iterations, plan.warmupCutoff));
  }
  return result;
}

std::string referenceResult(const std::string& untypedPath) {
  const frontend::Program program = frontend::parseFile(untypedPath);
  stats::StatsRegistry registry(OptimizationConfig::unchecked());
  std::ostringstream out;
  interp::Interpreter interpreter(program, registry, out);
  auto status = interpreter.load();
  std::string rendered;
  if (status.ok()) status = interpreter.call("benchmark", nullptr, &rendered);
  if (!status.ok()) throw std::runtime_error(interp::describe(status));
  return rendered;
}

std::string summaryCsvHeader() { return "benchmark,config,geomeanTimeNs,checkGeneric,isSubtypeOf,fastHits\n"; }

std::string summaryCsvRows(const RunResult& result) {
  std::ostringstream out;
  for (const auto& c : result.configs) {
    const auto totals = c.stats.totals();
    out << result.benchmark << ',' << c.config.name << ',';
    if (c.ok) {
      out << static_cast<std::uint64_t>(std::llround(c.geomeanNs));
    } else {
      out << "failed";
    }
    out << ',' << totals.checkGeneric << ',' << totals.isSubtypeOf << ',' << totals.fastHits << '\n';
  }
  return out.str();
}

void writeRunReports(const RunResult& result, const std::string& outDir) {
  std::filesystem::create_directories(outDir);
  for (const auto& c : result.configs) {
    const auto path = std::filesystem::path(outDir) / (result.benchmark + "-" + c.config.name + ".json");
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << stats::emitReport(c.stats, stats::ReportFormat::Json, {result.benchmark, result.iterations});
  }
}

}  // namespace gradual::harness
