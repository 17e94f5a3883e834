#pragma once

#include <string>
#include <utility>

#include "displace/cli/suite.hpp"
#include "displace/core/group_ops.hpp"

namespace displace::suites {

inline PropertyReport report(std::string property, std::string subject) {
  PropertyReport r;
  r.property = std::move(property);
  r.subject = std::move(subject);
  return r;
}

/// Pass report when `ok`, otherwise a failure with `condition`.
inline PropertyReport expect(PropertyReport r, bool ok, const std::string& condition) {
  if (!ok && !r.failed()) r.fail(condition);
  return r;
}

/// Runs `body` and turns an InvalidArgument into a failed report; used by
/// checks whose expected outcome is a rejected precondition.
template <class F>
PropertyReport precondition(const std::string& property, const std::string& subject, F&& body) {
  PropertyReport r = report(property, subject);
  try {
    body();
    r.checks.push_back("operation accepted its input");
  } catch (const InvalidArgument& e) {
    r.fail(std::string("rejected: ") + e.what());
  }
  return r;
}

inline CheckSpec check(std::string id, std::string description, Verdict expected,
                       std::function<PropertyReport(const RunOptions&)> run) {
  return CheckSpec{std::move(id), std::move(description), expected, std::move(run)};
}

Suite wreath_cznc_suite();
Suite wreath_converse_suite();
Suite torsion_suite();
Suite hall_analogue_suite();
Suite prime_towers_suite();
Suite gl_block_suite();
Suite gl_centralizer_suite();
Suite gl_z2_suite();
Suite pl_tower_suite();
Suite fixed_point_suite();
Suite m_implies_czc_suite();
Suite britton_suite();
Suite bass_serre_suite();
Suite binate_tower_suite();
Suite mitosis_suite();
Suite product_cc_suite();

}  // namespace displace::suites
