#include "displace/core/report.hpp"

#include "displace/core/group_ops.hpp"

namespace displace {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::BoundedPass: return "bounded-pass";
    case Verdict::NotApplicable: return "not-applicable";
  }
  return "unknown";
}

Verdict parse_verdict(const std::string& text) {
  if (text == "pass") return Verdict::Pass;
  if (text == "fail") return Verdict::Fail;
  if (text == "bounded-pass") return Verdict::BoundedPass;
  if (text == "not-applicable") return Verdict::NotApplicable;
  throw ParseError("unknown verdict '" + text + "'");
}

bool Counterexample::reverify() const {
  if (kind == Kind::Commutator) return !commutator(first, second).is_identity();
  return !(first == second);
}

}  // namespace displace
