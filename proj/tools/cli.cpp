#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "gradual/frontend/completeness.hpp"
#include "gradual/frontend/parser.hpp"
#include "gradual/frontend/printer.hpp"
#include "gradual/harness/manifest.hpp"
#include "gradual/harness/microbench.hpp"
#include "gradual/harness/runner.hpp"
#include "gradual/interp/interpreter.hpp"
#include "gradual/stats/report.hpp"

namespace gradual::cli {
namespace {

struct RunOptions {
  std::string file;
  bool noNodeOpt = false;
  bool noMatrix = false;
  bool noChecks = false;
  bool noReadChecks = false;
  std::string statsPath;
  bool requireComplete = false;
};

struct BenchOptions {
  std::string target;
  std::uint64_t iterations = 100;
  std::uint64_t cutoff = 30;
  std::vector<std::string> configs;
  std::string outDir;
  std::string manifest = "corpus/manifest.json";
  bool freeze = false;
};

bool loadProgram(const std::string& file, frontend::Program& program, std::ostream& err, int& code) {
  try {
    program = frontend::parseFile(file);
    return true;
  } catch (const frontend::FrontendError& e) {
    err << e.what() << '\n';
    code = kFrontendError;
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    code = kUsage;
  }
  return false;
}

void reportMissing(const frontend::Program& program, const std::vector<frontend::MissingAnnotation>& missing,
                   std::ostream& os) {
  for (const auto& m : missing) {
    os << frontend::formatLocation(program.fileName, m.location) << ": missing type annotation: " << m.description
       << '\n';
  }
}

int exitCodeFor(const interp::ExitStatus& status) {
  switch (status.kind) {
    case interp::ExitKind::Ok: return kOk;
    case interp::ExitKind::TypeError: return kTypeError;
    default: return kRuntimeError;
  }
}

int commandRun(const RunOptions& opts, std::ostream& out, std::ostream& err) {
  frontend::Program program;
  int code = kOk;
  if (!loadProgram(opts.file, program, err, code)) return code;
  if (opts.requireComplete) {
    const auto missing = frontend::checkCompleteness(program);
    if (!missing.empty()) {
      reportMissing(program, missing, err);
      return kIncompleteTypes;
    }
  }
  stats::OptimizationConfig config;
  config.nodeOpt = !opts.noNodeOpt;
  config.matrixOpt = !opts.noMatrix;
  config.checksEnabled = !opts.noChecks;
  config.readChecks = !opts.noReadChecks;
  stats::StatsRegistry registry(config);
  const interp::ExitStatus status = interp::run(program, registry, out);
  out.flush();
  if (!status.ok()) err << interp::describe(status) << '\n';
  if (!opts.statsPath.empty()) {
    std::ofstream file(opts.statsPath);
    if (!file) {
      err << "cannot write " << opts.statsPath << '\n';
      return kUsage;
    }
    file << stats::emitReport(registry, stats::ReportFormat::Json,
                              {std::filesystem::path(opts.file).stem().string(), 1});
  }
  return exitCodeFor(status);
}

int commandCheckTypes(const std::string& file, std::ostream& out, std::ostream& err) {
  frontend::Program program;
  int code = kOk;
  if (!loadProgram(file, program, err, code)) return code;
  const auto missing = frontend::checkCompleteness(program);
  if (!missing.empty()) {
    reportMissing(program, missing, out);
    return kIncompleteTypes;
  }
  out << program.fileName << ": completely typed (" << frontend::countAnnotationSlots(program)
      << " annotation positions)\n";
  return kOk;
}

int commandErase(const std::string& file, const std::string& outPath, std::ostream& out, std::ostream& err) {
  frontend::Program program;
  int code = kOk;
  if (!loadProgram(file, program, err, code)) return code;
  const std::string text = frontend::printProgram(program, {true});
  if (outPath.empty()) {
    out << text;
    return kOk;
  }
  std::ofstream target(outPath);
  if (!target) {
    err << "cannot write " << outPath << '\n';
    return kUsage;
  }
  target << text;
  return kOk;
}

int commandGenMicro(const std::string& dir, std::ostream& out, std::ostream& err) {
  try {
    for (const auto& spec : harness::generateMicrobenchmarks(dir)) {
      out << spec.name << ' ' << spec.typedPath << ' ' << spec.untypedPath << '\n';
    }
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}

int commandBench(const BenchOptions& opts, std::ostream& out, std::ostream& err) {
  std::vector<harness::BenchmarkSpec> specs;
  try {
    specs = harness::loadManifest(opts.manifest);
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return kUsage;
  }
  std::vector<harness::BenchmarkSpec> selected;
  if (opts.target == "all") {
    selected = specs;
  } else if (const auto* spec = harness::findSpec(specs, opts.target)) {
    selected.push_back(*spec);
  } else {
    err << "no benchmark named '" << opts.target << "' in " << opts.manifest << '\n';
    return kUsage;
  }

  if (opts.freeze) {
    try {
      for (auto& spec : specs) {
        if (opts.target != "all" && spec.name != opts.target) continue;
        spec.expected = harness::referenceResult(spec.untypedPath);
        out << spec.name << ' ' << spec.expected << '\n';
      }
      harness::saveManifest(opts.manifest, specs);
    } catch (const std::exception& e) {
      err << e.what() << '\n';
      return kRuntimeError;
    }
    return kOk;
  }

  harness::RunPlan plan;
  plan.iterations = opts.iterations;
  plan.warmupCutoff = opts.cutoff;
  try {
    if (!opts.configs.empty()) {
      plan.configs.clear();
      for (const auto& name : opts.configs) plan.configs.push_back(harness::configByName(name));
    }
    plan.validate();
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return kUsage;
  }

  std::string csv = harness::summaryCsvHeader();
  std::vector<stats::RunTotals> totals;
  bool allOk = true;
  for (const auto& spec : selected) {
    const harness::RunResult result = harness::runBenchmark(spec, plan);
    csv += harness::summaryCsvRows(result);
    for (const auto& c : result.configs) {
      if (!c.ok) {
        allOk = false;
        err << spec.name << " [" << c.config.name << "]: " << c.failure << '\n';
      }
      totals.push_back({spec.name, c.config.name, c.stats.totals()});
    }
    if (!opts.outDir.empty()) {
      try {
        harness::writeRunReports(result, opts.outDir);
      } catch (const std::exception& e) {
        err << e.what() << '\n';
        return kUsage;
      }
    }
  }
  const std::string aggregate = stats::emitAggregate(totals, stats::ReportFormat::Csv);
  out << csv << '\n' << aggregate;
  if (!opts.outDir.empty()) {
    const std::filesystem::path dir(opts.outDir);
    std::ofstream(dir / "summary.csv") << csv;
    std::ofstream(dir / "aggregate.csv") << aggregate;
    std::ofstream(dir / "aggregate.json") << stats::emitAggregate(totals, stats::ReportFormat::Json);
  }
  return allOk ? kOk : kRuntimeError;
}

}  // namespace

int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Instrumented interpreter for a gradually typed Grace subset", "gradual"};
  app.require_subcommand(1);

  RunOptions run;
  auto* runCmd = app.add_subcommand("run", "Execute a program");
  runCmd->add_option("file", run.file, "Source file")->required();
  runCmd->add_flag("--no-node-opt", run.noNodeOpt, "Disable check-site specialization");
  runCmd->add_flag("--no-matrix", run.noMatrix, "Disable the subtype matrix");
  runCmd->add_flag("--no-checks", run.noChecks, "Execute no type checks");
  runCmd->add_flag("--no-read-checks", run.noReadChecks, "Skip checks on variable reads");
  runCmd->add_option("--stats", run.statsPath, "Write the check counters as JSON");
  runCmd->add_flag("--require-complete-types", run.requireComplete, "Refuse programs with missing annotations");

  BenchOptions bench;
  auto* benchCmd = app.add_subcommand("bench", "Run corpus benchmarks");
  benchCmd->add_option("spec", bench.target, "Benchmark name or 'all'")->required();
  benchCmd->add_option("--iterations", bench.iterations, "Iterations per configuration")->capture_default_str();
  benchCmd->add_option("--cutoff", bench.cutoff, "Warmup iterations excluded from timing")->capture_default_str();
  benchCmd->add_option("--configs", bench.configs, "both, node, matrix, neither, untyped, nochecks")
      ->delimiter(',');
  benchCmd->add_option("--out", bench.outDir, "Directory for JSON reports and CSV summaries");
  benchCmd->add_option("--manifest", bench.manifest, "Benchmark manifest")->capture_default_str();
  benchCmd->add_flag("--freeze", bench.freeze, "Record reference results in the manifest instead of running");

  std::string genDir;
  auto* genCmd = app.add_subcommand("genmicro", "Generate the Check and Nest microbenchmarks");
  genCmd->add_option("dir", genDir, "Output directory")->required();

  std::string checkFile;
  auto* checkCmd = app.add_subcommand("checktypes", "Report missing type annotations");
  checkCmd->add_option("file", checkFile, "Source file")->required();

  std::string eraseFile;
  std::string eraseOut;
  auto* eraseCmd = app.add_subcommand("erase", "Print a program with every type annotation removed");
  eraseCmd->add_option("file", eraseFile, "Source file")->required();
  eraseCmd->add_option("-o,--output", eraseOut, "Write to a file instead of stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  if (runCmd->parsed()) return commandRun(run, out, err);
  if (benchCmd->parsed()) return commandBench(bench, out, err);
  if (genCmd->parsed()) return commandGenMicro(genDir, out, err);
  if (eraseCmd->parsed()) return commandErase(eraseFile, eraseOut, out, err);
  return commandCheckTypes(checkFile, out, err);
}

}  // namespace gradual::cli
