#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "displace/cli/suite.hpp"

namespace displace {

std::size_t SuiteReport::met() const {
  std::size_t count = 0;
  for (const auto& r : results) count += r.met ? 1 : 0;
  return count;
}

SuiteReport run_suite(const Suite& suite, const RunOptions& options) {
  SuiteReport out;
  out.suite = suite.name;
  out.seed = options.seed;
  out.results.resize(suite.checks.size());

  std::atomic<std::size_t> next{0};
  std::exception_ptr budget_error;
  std::mutex error_mutex;

  auto worker = [&] {
    for (std::size_t i = next++; i < suite.checks.size(); i = next++) {
      const CheckSpec& spec = suite.checks[i];
      CheckResult& result = out.results[i];
      result.id = spec.id;
      result.description = spec.description;
      result.expected = spec.expected;
      const auto start = std::chrono::steady_clock::now();
      try {
        result.report = spec.run(options);
        result.met = result.report.verdict == spec.expected;
      } catch (const BudgetExceeded&) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!budget_error) budget_error = std::current_exception();
      } catch (const std::exception& e) {
        result.error = e.what();
        result.report = PropertyReport{};
        result.report.property = "ERROR";
        result.report.fail(std::string("error: ") + e.what());
        result.met = false;
      }
      result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
  };

  const unsigned jobs = std::max(1u, options.jobs);
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (budget_error) std::rethrow_exception(budget_error);
  return out;
}

Json suite_report_to_json(const SuiteReport& report) {
  Json checks = Json::array();
  for (const auto& r : report.results) {
    Json entry;
    entry["id"] = r.id;
    entry["description"] = r.description;
    entry["expected"] = to_string(r.expected);
    entry["met"] = r.met;
    if (!r.error.empty()) entry["error"] = r.error;
    entry["report"] = report_to_json(r.report);
    checks.push_back(std::move(entry));
  }
  Json out;
  out["suite"] = report.suite;
  out["seed"] = report.seed;
  out["checks"] = std::move(checks);
  out["totals"] = Json{{"checks", report.results.size()},
                       {"met", report.met()},
                       {"violated", report.results.size() - report.met()}};
  return out;
}

std::string suite_report_to_text(const SuiteReport& report, bool with_timing) {
  std::ostringstream out;
  out << "suite " << report.suite << " (seed " << report.seed << ")\n";
  for (const auto& r : report.results) {
    out << (r.met ? "  ok        " : "  VIOLATED  ") << r.id << ": " << to_string(r.report.verdict) << " (expected "
        << to_string(r.expected) << ")";
    if (with_timing) {
      char buf[32];
      std::snprintf(buf, sizeof buf, " [%.3fs]", r.seconds);
      out << buf;
    }
    out << "\n";
    if (!r.error.empty()) out << "      error: " << r.error << "\n";
    if (r.report.failed() && !r.report.failed_condition.empty()) {
      out << "      failed: " << r.report.failed_condition << "\n";
    }
  }
  out << report.met() << "/" << report.results.size() << " expectations met\n";
  return out.str();
}

}  // namespace displace
