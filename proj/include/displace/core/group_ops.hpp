#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "displace/core/element.hpp"
#include "displace/core/report.hpp"

namespace displace {

/// Throws ContextMismatch unless both elements belong to the same group.
void require_same_context(const Element& a, const Element& b);

Element mul(const Element& a, const Element& b);
Element inv(const Element& a);

/// t g t^-1.
Element conj(const Element& t, const Element& g);

/// a b a^-1 b^-1.
Element commutator(const Element& a, const Element& b);

/// g^k for any integer k, by repeated squaring.
Element power(const Element& g, std::int64_t k);

bool commute(const Element& a, const Element& b);

/// Order of g if it is at most `cap`, otherwise nullopt.
std::optional<std::uint64_t> order_of(const Element& g, std::uint64_t cap = 1'000'000);

inline Element operator*(const Element& a, const Element& b) { return mul(a, b); }

/// Finitely generated subgroup given by a label and a list of generators.
/// Generators are normalized on construction: identities and repeats are
/// dropped, so the list may end up empty (the trivial subgroup).
class FgSubgroup {
 public:
  FgSubgroup(std::string label, GroupPtr group, std::vector<Element> generators);

  const std::string& label() const { return label_; }
  const GroupPtr& group() const { return group_; }
  const std::vector<Element>& generators() const { return generators_; }
  bool trivial() const { return generators_.empty(); }

  /// Conjugate subgroup t H t^-1 (generators conjugated one by one).
  FgSubgroup conjugated_by(const Element& t) const;

  /// True when all generators commute pairwise.
  bool is_abelian() const;

 private:
  std::string label_;
  GroupPtr group_;
  std::vector<Element> generators_;
};

/// Checks [H, K] = 1 on generator pairs. Centralizers are subgroups, so this
/// is equivalent to commutation of the generated subgroups. On failure the
/// report carries the first non-commuting generator pair.
PropertyReport subgroups_commute(const FgSubgroup& h, const FgSubgroup& k);

/// All elements of <H>, enumerated breadth-first and returned in discovery
/// order; throws BudgetExceeded past `budget` elements.
std::vector<Element> closure(const FgSubgroup& h, std::uint64_t budget = kSearchBudget);

using Rng = std::mt19937_64;

/// Uniform index in [0, n) from raw engine output (portable across
/// standard libraries, unlike std::uniform_int_distribution).
std::uint64_t uniform_index(Rng& rng, std::uint64_t n);

/// Product of `length` random generators or inverses of H.
Element random_word(const FgSubgroup& h, std::size_t length, Rng& rng);

}  // namespace displace
