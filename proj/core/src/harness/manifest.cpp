#include "gradual/harness/manifest.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace gradual::harness {

namespace fs = std::filesystem;
using nlohmann::json;

std::vector<BenchmarkSpec> loadManifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open manifest " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw std::runtime_error("malformed manifest " + path + ": " + e.what());
  }
  const fs::path base = fs::absolute(fs::path(path)).parent_path();
  std::vector<BenchmarkSpec> specs;
  try {
    for (const auto& entry : doc.at("benchmarks")) {
      BenchmarkSpec spec;
      spec.name = entry.at("name").get<std::string>();
      spec.typedPath = (base / entry.at("typed").get<std::string>()).lexically_normal().string();
      spec.untypedPath = (base / entry.at("untyped").get<std::string>()).lexically_normal().string();
      spec.innerProblemSize = entry.value("innerProblemSize", std::uint64_t{0});
      spec.expected = entry.at("expected").get<std::string>();
      spec.partiallyTyped = entry.value("partiallyTyped", false);
      specs.push_back(std::move(spec));
    }
  } catch (const json::exception& e) {
    throw std::runtime_error("malformed manifest " + path + ": " + e.what());
  }
  return specs;
}

void saveManifest(const std::string& path, const std::vector<BenchmarkSpec>& specs) {
  const fs::path base = fs::absolute(fs::path(path)).parent_path();
  json list = json::array();
  for (const auto& spec : specs) {
    list.push_back({{"name", spec.name},
                    {"typed", fs::path(spec.typedPath).lexically_relative(base).string()},
                    {"untyped", fs::path(spec.untypedPath).lexically_relative(base).string()},
                    {"innerProblemSize", spec.innerProblemSize},
                    {"expected", spec.expected}});
    if (spec.partiallyTyped) list.back()["partiallyTyped"] = true;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write manifest " + path);
  out << json{{"benchmarks", list}}.dump(2) << '\n';
}

const BenchmarkSpec* findSpec(const std::vector<BenchmarkSpec>& specs, const std::string& name) {
  for (const auto& spec : specs) {
    if (spec.name == name) return &spec;
  }
  return nullptr;
}

}  // namespace gradual::harness
