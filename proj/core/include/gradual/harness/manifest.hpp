#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gradual::harness {

/// One corpus program. Paths are absolute once loaded.
struct BenchmarkSpec {
  std::string name;
  std::string typedPath;
  std::string untypedPath;
  std::uint64_t innerProblemSize = 0;
  std::string expected;  // asString of each `benchmark` result
  bool partiallyTyped = false;  // typed variant may leave annotations out
};

/// Reads a manifest of the form
/// {"benchmarks": [{"name", "typed", "untyped", "innerProblemSize", "expected", "partiallyTyped"?}]}
/// with paths relative to the manifest's directory. Throws std::runtime_error.
std::vector<BenchmarkSpec> loadManifest(const std::string& path);

/// Writes specs with paths made relative to the manifest's directory.
void saveManifest(const std::string& path, const std::vector<BenchmarkSpec>& specs);

const BenchmarkSpec* findSpec(const std::vector<BenchmarkSpec>& specs, const std::string& name);

}  // namespace gradual::harness
