// displace-check: runs a named verification suite or a scenario file and
// writes a report. Exit codes: 0 all expectations met, 1 an expectation
// violated, 2 usage or parse error, 3 budget exceeded.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "displace/cli/json_io.hpp"
#include "displace/cli/scenario.hpp"
#include "displace/cli/suite.hpp"
#include "displace/core/errors.hpp"

namespace {

constexpr int kExitMet = 0;
constexpr int kExitViolated = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

}  // namespace

int main(int argc, char** argv) {
  using namespace displace;

  CLI::App app{"Verify displacement-property certificates for concrete groups."};
  std::string suite_name;
  std::string scenario_path;
  std::string out_path;
  std::string format = "json";
  std::uint64_t seed = 0;
  RunOptions options;
  bool list = false;
  bool timing = false;

  auto* suite_opt = app.add_option("--suite", suite_name, "Named suite, or \"all\"");
  auto* scenario_opt = app.add_option("--scenario", scenario_path, "Scenario file (JSON)");
  suite_opt->excludes(scenario_opt);
  app.add_option("--out", out_path, "Write the report here instead of stdout");
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}));
  auto* seed_opt = app.add_option("--seed", seed, "Seed for sampled checks")->capture_default_str();
  app.add_option("--p-max", options.p_max, "Bound p_max for Z-quantified conditions")
      ->check(CLI::Range(1, 10000))
      ->capture_default_str();
  app.add_option("--budget", options.budget, "Bound on exhaustive searches")->capture_default_str();
  app.add_option("--jobs", options.jobs, "Worker threads")->check(CLI::Range(1u, 256u))->capture_default_str();
  app.add_flag("--list", list, "List suites and exit");
  app.add_flag("--timing", timing, "Print wall-clock per check to stderr (text format: inline)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitMet : kExitUsage;
  }

  if (list) {
    std::cout << list_suites();
    return kExitMet;
  }
  if (suite_name.empty() && scenario_path.empty()) {
    std::cerr << "error: one of --suite or --scenario is required\n" << app.help();
    return kExitUsage;
  }

  Suite suite;
  try {
    if (!suite_name.empty()) {
      suite = find_suite(suite_name);
    } else {
      Scenario scenario = load_scenario(scenario_path);
      if (scenario.seed && seed_opt->count() == 0) seed = *scenario.seed;
      suite = std::move(scenario.suite);
    }
  } catch (const ParseError& e) {
    std::cerr << scenario_path << ":" << e.line() << ":" << e.column() << ": parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  options.seed = seed;
  SuiteReport report;
  const auto start = std::chrono::steady_clock::now();
  try {
    report = run_suite(suite, options);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  }
  const double total =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  const std::string body = format == "json" ? suite_report_to_json(report).dump(2) + "\n"
                                            : suite_report_to_text(report, timing);
  if (out_path.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return kExitUsage;
    }
    out << body;
  }

  if (timing && format == "json") {
    for (const auto& r : report.results) std::fprintf(stderr, "%8.3f s  %s\n", r.seconds, r.id.c_str());
  }
  if (timing) std::fprintf(stderr, "%8.3f s  total\n", total);
  std::fprintf(stderr, "%s: %zu/%zu expectations met\n", report.suite.c_str(), report.met(), report.results.size());
  return report.all_met() ? kExitMet : kExitViolated;
}
