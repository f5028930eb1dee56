#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gradual/stats/stats_registry.hpp"

namespace gradual::stats {

enum class ReportFormat { Json, Csv };

struct ReportMeta {
  std::string benchmark;
  std::uint64_t iterations = 1;
};

/// Serializes one run.
///
/// JSON: {benchmark, config:{nodeOpt,matrixOpt,checksEnabled}, iterations,
///        totals:{checkGeneric,isSubtypeOf,fastHits,executions},
///        perSite:[{siteId,file,line,kind,checkGeneric,fastHits}]}
/// CSV:  a header plus one row (benchmark,config,checkGeneric,isSubtypeOf,fastHits,executions).
std::string emitReport(const StatsRegistry& stats, ReportFormat format, const ReportMeta& meta);

struct RunTotals {
  std::string benchmark;
  std::string config;
  Totals totals;
};

struct Aggregate {
  std::string config;
  std::size_t benchmarks = 0;
  double meanCheckGeneric = 0;
  std::uint64_t minCheckGeneric = 0;
  std::uint64_t maxCheckGeneric = 0;
  double meanIsSubtypeOf = 0;
  std::uint64_t minIsSubtypeOf = 0;
  std::uint64_t maxIsSubtypeOf = 0;
};

/// Mean, minimum and maximum of the check counters across benchmarks, one
/// entry per configuration in first-seen order.
std::vector<Aggregate> aggregateByConfig(const std::vector<RunTotals>& runs);

std::string emitAggregate(const std::vector<RunTotals>& runs, ReportFormat format);

}  // namespace gradual::stats
