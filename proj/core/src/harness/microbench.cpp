#include "gradual/harness/microbench.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "gradual/frontend/parser.hpp"
#include "gradual/frontend/printer.hpp"

namespace gradual::harness {

namespace {

const char* const kParamNames[kMicroParams] = {"a", "b", "c", "d", "e"};

std::string parameterList(int annotated) {
  std::string out;
  for (int i = 0; i < kMicroParams; ++i) {
    if (i > 0) out += ", ";
    out += kParamNames[i];
    if (i < annotated) out += ": Payload";
  }
  return out;
}

std::string argumentList(bool forward) {
  std::string out;
  for (int i = 0; i < kMicroParams; ++i) {
    if (i > 0) out += ", ";
    out += forward ? kParamNames[i] : "payload";
  }
  return out;
}

void writeFile(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

}  // namespace

std::string microbenchmarkSource(MicroKind kind, int annotated) {
  if (annotated < 0 || annotated > kMicroParams) throw std::invalid_argument("annotated parameters out of range");
  std::ostringstream src;
  src << "type Payload = interface { value }\n\n";
  src << "var count: Unknown := 0\n";
  src << "def payload: Unknown = object {\n  def value: Unknown is public = 1\n}\n\n";
  if (kind == MicroKind::Check) {
    src << "method check(" << parameterList(annotated) << ") -> Unknown {\n";
    src << "  count := count + 1\n}\n\n";
    src << "method benchmark -> Unknown {\n  count := 0\n";
    for (int i = 0; i < kMicroCalls; ++i) src << "  check(" << argumentList(false) << ")\n";
    src << "  count\n}\n";
  } else {
    for (int m = 1; m <= kMicroCalls; ++m) {
      src << "method m" << m << "(" << parameterList(annotated) << ") -> Unknown {\n";
      src << "  count := count + 1\n";
      if (m < kMicroCalls) src << "  m" << m + 1 << "(" << argumentList(true) << ")\n";
      src << "}\n\n";
    }
    src << "method benchmark -> Unknown {\n  count := 0\n";
    src << "  m1(" << argumentList(false) << ")\n";
    src << "  count\n}\n";
  }
  return src.str();
}

std::vector<BenchmarkSpec> generateMicrobenchmarks(const std::string& outDir) {
  namespace fs = std::filesystem;
  fs::create_directories(outDir);
  const fs::path dir = fs::absolute(outDir);
  std::vector<BenchmarkSpec> specs;
  for (MicroKind kind : {MicroKind::Check, MicroKind::Nest}) {
    const std::string base = kind == MicroKind::Check ? "check" : "nest";
    for (int k = 0; k <= kMicroParams; ++k) {
      const std::string stem = base + "_" + std::to_string(k);
      const std::string typed = microbenchmarkSource(kind, k);
      const frontend::Program program = frontend::parse(typed, stem + ".grace");
      const std::string untyped = frontend::printProgram(program, {true});
      BenchmarkSpec spec;
      spec.name = (kind == MicroKind::Check ? "Check" : "Nest") + std::to_string(k);
      spec.typedPath = (dir / (stem + ".grace")).string();
      spec.untypedPath = (dir / (stem + "_untyped.grace")).string();
      spec.innerProblemSize = kMicroCalls;
      spec.expected = std::to_string(kMicroCalls);
      spec.partiallyTyped = k < kMicroParams;
      writeFile(spec.typedPath, typed);
      writeFile(spec.untypedPath, untyped);
      specs.push_back(std::move(spec));
    }
  }
  saveManifest((dir / "manifest.json").string(), specs);
  return specs;
}

}  // namespace gradual::harness
