#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "displace/core/element.hpp"

namespace displace {

enum class Verdict {
  Pass,
  Fail,
  /// Every condition checked up to an explicit bound; never claims the
  /// unbounded statement.
  BoundedPass,
  /// The check has no content for this input (e.g. an abelian subject).
  NotApplicable,
};

std::string to_string(Verdict v);
Verdict parse_verdict(const std::string& text);

/// A pair of elements witnessing a failed condition. For `Commutator` the
/// commutator of the pair is nontrivial; for `Equality` the two sides of a
/// required identity differ.
struct Counterexample {
  enum class Kind { Commutator, Equality };

  Kind kind;
  Element first;
  Element second;

  /// Re-evaluates the failure from the stored elements.
  bool reverify() const;
};

/// Structured outcome of a property check.
struct PropertyReport {
  std::string property;
  std::string subject;
  Verdict verdict = Verdict::Pass;
  std::string failed_condition;
  std::optional<Counterexample> counterexample;
  std::vector<std::string> checks;
  std::vector<std::string> notes;
  std::vector<std::pair<std::string, std::string>> facts;

  bool passed() const { return verdict == Verdict::Pass || verdict == Verdict::BoundedPass; }
  bool failed() const { return verdict == Verdict::Fail; }

  void fail(std::string condition, std::optional<Counterexample> witness = std::nullopt) {
    verdict = Verdict::Fail;
    failed_condition = std::move(condition);
    counterexample = std::move(witness);
  }
};

}  // namespace displace
