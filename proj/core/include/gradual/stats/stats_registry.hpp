#pragma once

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

namespace gradual::stats {

/// Which check machinery is active for a run.
struct OptimizationConfig {
  bool nodeOpt = true;        // per-site specialization on kinds and shapes
  bool matrixOpt = true;      // memoized subtype relation
  bool checksEnabled = true;  // false: no check is executed at all
  bool readChecks = true;     // false: variable reads are not checked

  friend bool operator==(const OptimizationConfig&, const OptimizationConfig&) = default;

  static OptimizationConfig both() { return {}; }
  static OptimizationConfig nodeOnly() { return {true, false, true, true}; }
  static OptimizationConfig matrixOnly() { return {false, true, true, true}; }
  static OptimizationConfig neither() { return {false, false, true, true}; }
  static OptimizationConfig unchecked() { return {false, false, false, true}; }
};

/// "both", "node", "matrix", "neither" or "nochecks", with a "-noread" suffix
/// when read checks are off.
std::string configName(const OptimizationConfig& config);

struct SiteCounters {
  std::uint64_t checkGeneric = 0;
  std::uint64_t fastHits = 0;
  std::uint64_t executions = 0;
};

struct SiteMeta {
  std::string file;
  std::uint32_t line = 0;
  std::string kind;
};

struct GlobalCounters {
  std::uint64_t isSubtypeOf = 0;
  std::uint64_t matrixHits = 0;
  std::uint64_t internedTypeCount = 0;
  std::uint64_t shapeCount = 0;
};

struct Totals {
  std::uint64_t checkGeneric = 0;
  std::uint64_t isSubtypeOf = 0;
  std::uint64_t fastHits = 0;
  std::uint64_t executions = 0;

  friend bool operator==(const Totals&, const Totals&) = default;
};

/// Exact invocation counters for one run. Per-site counters are indexed by
/// check-site id and grow on demand.
class StatsRegistry {
 public:
  explicit StatsRegistry(OptimizationConfig config = {}) : config_(config) {}

  const OptimizationConfig& config() const { return config_; }

  SiteCounters& site(std::uint32_t id) {
    if (id >= sites_.size()) {
      sites_.resize(id + 1);
      meta_.resize(id + 1);
    }
    return sites_[id];
  }
  const std::vector<SiteCounters>& sites() const { return sites_; }

  void describeSite(std::uint32_t id, SiteMeta meta) {
    site(id);
    meta_[id] = std::move(meta);
  }
  const std::vector<SiteMeta>& siteMeta() const { return meta_; }

  GlobalCounters& global() { return global_; }
  const GlobalCounters& global() const { return global_; }

  // Records every (subject, expected) type pair handed to a generic check
  // while enabled. Off by default so timing runs do not pay for it.
  void trackTypePairs(bool on) { trackPairs_ = on; }
  bool tracksTypePairs() const { return trackPairs_; }
  void recordTypePair(std::uint32_t subject, std::uint32_t expected) {
    if (trackPairs_) pairs_.insert((static_cast<std::uint64_t>(subject) << 32) | expected);
  }
  std::size_t distinctTypePairs() const { return pairs_.size(); }

  Totals totals() const;

 private:
  OptimizationConfig config_;
  std::vector<SiteCounters> sites_;
  std::vector<SiteMeta> meta_;
  GlobalCounters global_;
  std::unordered_set<std::uint64_t> pairs_;
  bool trackPairs_ = false;
};

}  // namespace gradual::stats
