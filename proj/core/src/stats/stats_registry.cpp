#include "gradual/stats/stats_registry.hpp"

namespace gradual::stats {

std::string configName(const OptimizationConfig& config) {
  std::string name;
  if (!config.checksEnabled) {
    name = "nochecks";
  } else if (config.nodeOpt && config.matrixOpt) {
    name = "both";
  } else if (config.nodeOpt) {
    name = "node";
  } else if (config.matrixOpt) {
    name = "matrix";
  } else {
    name = "neither";
  }
  if (!config.readChecks) name += "-noread";
  return name;
}

Totals StatsRegistry::totals() const {
  Totals t;
  for (const auto& s : sites_) {
    t.checkGeneric += s.checkGeneric;
    t.fastHits += s.fastHits;
    t.executions += s.executions;
  }
  t.isSubtypeOf = global_.isSubtypeOf;
  return t;
}

}  // namespace gradual::stats
