#pragma once

#include <string>
#include <vector>

#include "gradual/harness/manifest.hpp"

namespace gradual::harness {

inline constexpr int kMicroParams = 5;
inline constexpr int kMicroCalls = 10;

enum class MicroKind { Check, Nest };

/// Source of a microbenchmark whose methods annotate their first
/// `annotated` of five parameters and leave the rest bare. Results and the
/// counter carry an explicit Unknown, so the variant with five annotated
/// parameters is complete.
std::string microbenchmarkSource(MicroKind kind, int annotated);

/// Writes Check and Nest in variants 0..5, typed and untyped, plus a
/// manifest.json, into `outDir`. Returns the specs.
std::vector<BenchmarkSpec> generateMicrobenchmarks(const std::string& outDir);

}  // namespace gradual::harness
