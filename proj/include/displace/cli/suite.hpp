#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "displace/cli/json_io.hpp"
#include "displace/core/element.hpp"
#include "displace/core/report.hpp"

namespace displace {

struct RunOptions {
  std::uint64_t seed = 0;
  std::int64_t p_max = 10;
  std::uint64_t budget = kSearchBudget;
  unsigned jobs = 1;
};

/// One check of a suite: a computation producing a report, and the verdict
/// the suite expects. Expected failures count as met when they fail.
struct CheckSpec {
  std::string id;
  std::string description;
  Verdict expected = Verdict::Pass;
  std::function<PropertyReport(const RunOptions&)> run;
};

struct Suite {
  std::string name;
  std::string description;
  std::vector<CheckSpec> checks;
};

/// Every named suite, in listing order ("all" excluded).
const std::vector<Suite>& suite_registry();

/// The named suite; "all" concatenates every suite with ids prefixed by the
/// suite name. Throws InvalidArgument for unknown names.
Suite find_suite(const std::string& name);

/// Suite ids with one-line descriptions, one per line.
std::string list_suites();

struct CheckResult {
  std::string id;
  std::string description;
  Verdict expected = Verdict::Pass;
  PropertyReport report;
  /// Message of an unexpected exception; the check then counts as violated.
  std::string error;
  bool met = false;
  double seconds = 0;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckResult> results;

  std::size_t met() const;
  bool all_met() const { return met() == results.size(); }
};

/// Runs the checks on a pool of `options.jobs` workers; results keep the
/// order of `checks`. BudgetExceeded from any check is rethrown after all
/// workers stop.
SuiteReport run_suite(const Suite& suite, const RunOptions& options);

/// Deterministic JSON report (no timing information).
Json suite_report_to_json(const SuiteReport& report);
std::string suite_report_to_text(const SuiteReport& report, bool with_timing);

}  // namespace displace
