#include "gradual/stats/report.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

namespace gradual::stats {

using nlohmann::json;

std::string emitReport(const StatsRegistry& stats, ReportFormat format, const ReportMeta& meta) {
  const Totals totals = stats.totals();
  const auto& config = stats.config();
  if (format == ReportFormat::Csv) {
    std::ostringstream out;
    out << "benchmark,config,checkGeneric,isSubtypeOf,fastHits,executions\n";
    out << meta.benchmark << ',' << configName(config) << ',' << totals.checkGeneric << ','
        << totals.isSubtypeOf << ',' << totals.fastHits << ',' << totals.executions << '\n';
    return out.str();
  }
  json perSite = json::array();
  const auto& sites = stats.sites();
  const auto& meta_ = stats.siteMeta();
  for (std::size_t i = 0; i < sites.size(); ++i) {
    perSite.push_back({{"siteId", i},
                       {"file", meta_[i].file},
                       {"line", meta_[i].line},
                       {"kind", meta_[i].kind},
                       {"checkGeneric", sites[i].checkGeneric},
                       {"fastHits", sites[i].fastHits}});
  }
  json doc = {
      {"benchmark", meta.benchmark},
      {"config",
       {{"nodeOpt", config.nodeOpt}, {"matrixOpt", config.matrixOpt}, {"checksEnabled", config.checksEnabled}}},
      {"iterations", meta.iterations},
      {"totals",
       {{"checkGeneric", totals.checkGeneric},
        {"isSubtypeOf", totals.isSubtypeOf},
        {"fastHits", totals.fastHits},
        {"executions", totals.executions}}},
      {"perSite", std::move(perSite)},
  };
  return doc.dump(2) + "\n";
}

std::vector<Aggregate> aggregateByConfig(const std::vector<RunTotals>& runs) {
  std::vector<Aggregate> out;
  for (const auto& run : runs) {
    auto it = std::find_if(out.begin(), out.end(), [&](const Aggregate& a) { return a.config == run.config; });
    if (it == out.end()) {
      Aggregate a;
      a.config = run.config;
      a.minCheckGeneric = run.totals.checkGeneric;
      a.maxCheckGeneric = run.totals.checkGeneric;
      a.minIsSubtypeOf = run.totals.isSubtypeOf;
      a.maxIsSubtypeOf = run.totals.isSubtypeOf;
      out.push_back(a);
      it = out.end() - 1;
    }
    Aggregate& a = *it;
    a.benchmarks += 1;
    a.meanCheckGeneric += static_cast<double>(run.totals.checkGeneric);
    a.meanIsSubtypeOf += static_cast<double>(run.totals.isSubtypeOf);
    a.minCheckGeneric = std::min(a.minCheckGeneric, run.totals.checkGeneric);
    a.maxCheckGeneric = std::max(a.maxCheckGeneric, run.totals.checkGeneric);
    a.minIsSubtypeOf = std::min(a.minIsSubtypeOf, run.totals.isSubtypeOf);
    a.maxIsSubtypeOf = std::max(a.maxIsSubtypeOf, run.totals.isSubtypeOf);
  }
  for (auto& a : out) {
    a.meanCheckGeneric /= static_cast<double>(a.benchmarks);
    a.meanIsSubtypeOf /= static_cast<double>(a.benchmarks);
  }
  return out;
}

std::string emitAggregate(const std::vector<RunTotals>& runs, ReportFormat format) {
  const auto aggregates = aggregateByConfig(runs);
  if (format == ReportFormat::Csv) {
    std::ostringstream out;
    out << "config,benchmarks,checkGenericMean,checkGenericMin,checkGenericMax,"
           "isSubtypeOfMean,isSubtypeOfMin,isSubtypeOfMax\n";
    for (const auto& a : aggregates) {
      out << a.config << ',' << a.benchmarks << ',' << a.meanCheckGeneric << ',' << a.minCheckGeneric << ','
          << a.maxCheckGeneric << ',' << a.meanIsSubtypeOf << ',' << a.minIsSubtypeOf << ','
          << a.maxIsSubtypeOf << '\n';
    }
    return out.str();
  }
  json doc = json::array();
  for (const auto& a : aggregates) {
    doc.push_back({{"config", a.config},
                   {"benchmarks", a.benchmarks},
                   {"checkGeneric", {{"mean", a.meanCheckGeneric}, {"min", a.minCheckGeneric}, {"max", a.maxCheckGeneric}}},
                   {"isSubtypeOf", {{"mean", a.meanIsSubtypeOf}, {"min", a.minIsSubtypeOf}, {"max", a.maxIsSubtypeOf}}}});
  }
  return doc.dump(2) + "\n";
}

}  // namespace gradual::stats
