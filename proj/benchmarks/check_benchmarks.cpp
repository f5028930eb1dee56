#include <benchmark/benchmark.h>

#include <sstream>
#include <stdexcept>

#include "gradual/checks/check_site.hpp"
#include "gradual/frontend/parser.hpp"
#include "gradual/harness/manifest.hpp"
#include "gradual/interp/interpreter.hpp"

using namespace gradual;
using runtime::Value;

namespace {

const char* kObjects = R"(
def a = object { var registration is public := 1
  method registerTo(p) { p } }
def b = object { var registration is public := 2 }
)";

struct CheckFixture {
  frontend::Program program = frontend::parse(kObjects);
  runtime::ShapeTable shapes;
  types::TypeContext types;
  std::vector<Value> objects;

  CheckFixture() {
    frontend::walk(program, [&](const frontend::Node& n) {
      if (n.kind != frontend::NodeKind::ObjectLiteral) return;
      const auto& literal = frontend::as<frontend::ObjectLiteral>(n);
      auto instance = std::make_shared<runtime::ObjectInstance>();
      instance->literal = &literal;
      instance->shape = &shapes.forLiteral(literal);
      instance->fields.resize(instance->shape->fieldCount());
      objects.push_back(Value::object(instance));
    });
  }

  checks::CheckSite site() {
    return checks::CheckSite(0, frontend::SiteKind::Argument,
                             types.interner().intern(std::vector<frontend::MemberSig>{{"registration", 0}}), "Vehicle",
                             "bench.grace", {1, 1});
  }
};

stats::OptimizationConfig configFor(std::int64_t index) {
  switch (index) {
    case 0: return stats::OptimizationConfig::both();
    case 1: return stats::OptimizationConfig::nodeOnly();
    case 2: return stats::OptimizationConfig::matrixOnly();
    case 3: return stats::OptimizationConfig::neither();
    default: return stats::OptimizationConfig::unchecked();
  }
}

void BM_CheckSite(benchmark::State& state) {
  CheckFixture f;
  stats::StatsRegistry registry(configFor(state.range(0)));
  auto site = f.site();
  std::size_t i = 0;
  for (auto _ : state) {
    site.perform(f.objects[i++ & 1], f.shapes, f.types, registry);
  }
  state.SetLabel(stats::configName(registry.config()));
}
BENCHMARK(BM_CheckSite)->DenseRange(0, 3);

void BM_MatrixQuery(benchmark::State& state) {
  types::TypeContext ctx;
  stats::StatsRegistry registry;
  const auto& subject = ctx.interner().intern(std::vector<frontend::MemberSig>{
      {"a", 0}, {"b", 0}, {"c", 1}, {"d", 2}, {"e", 0}, {"f", 0}, {"g", 1}, {"h", 0}});
  const auto& expected = ctx.interner().intern(std::vector<frontend::MemberSig>{{"b", 0}, {"d", 2}, {"h", 0}});
  const bool enabled = state.range(0) != 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ctx.matrix().query(subject, expected, enabled, registry));
  }
  state.SetLabel(enabled ? "memoized" : "computed");
}
BENCHMARK(BM_MatrixQuery)->Arg(1)->Arg(0);

void BM_Corpus(benchmark::State& state, const std::string& name, bool untyped) {
  const auto specs = harness::loadManifest(std::string(GRADUAL_CORPUS_DIR) + "/manifest.json");
  const auto* spec = harness::findSpec(specs, name);
  if (spec == nullptr) throw std::runtime_error("no benchmark " + name);
  const frontend::Program program = frontend::parseFile(untyped ? spec->untypedPath : spec->typedPath);
  stats::StatsRegistry registry(configFor(state.range(0)));
  std::ostringstream out;
  interp::Interpreter interpreter(program, registry, out);
  if (!interpreter.load().ok()) throw std::runtime_error("load failed");
  for (auto _ : state) {
    Value result;
    if (!interpreter.call("benchmark", &result).ok()) state.SkipWithError("benchmark failed");
    benchmark::DoNotOptimize(result);
  }
  state.SetLabel(untyped ? "untyped" : stats::configName(registry.config()));
}

}  // namespace

BENCHMARK_CAPTURE(BM_Corpus, List, std::string("List"), false)->Arg(0)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Corpus, ListUntyped, std::string("List"), true)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Corpus, Nest, std::string("Nest"), false)->Arg(0)->Arg(3)->Arg(4)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
