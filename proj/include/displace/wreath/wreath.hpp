#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "displace/checkers/certificate.hpp"
#include "displace/core/element.hpp"
#include "displace/core/group_ops.hpp"

namespace displace {

/// Restricted wreath product B ≀ Z/n (or B ≀ Z when n = 0). Elements are
/// pairs (f, k) with f a finitely supported map into B and k the top shift.
/// Multiplication is (f, k)(g, l) = (f · k⊳g, k + l) with (k⊳g)(x) = g(x - k).
class WreathGroup final : public Group {
 public:
  static std::shared_ptr<const WreathGroup> make(GroupPtr base, std::int64_t n);

  const GroupPtr& base() const { return base_; }
  /// Order of the top group; 0 for Z.
  std::int64_t top_order() const { return n_; }
  bool infinite_top() const { return n_ == 0; }

  /// Canonicalizes: reduces indices and the shift mod n, multiplies repeated
  /// indices in the given order and drops identity values.
  Element element(std::vector<Lamp> lamps, std::int64_t shift) const;

  /// (x@index, 0).
  Element lamp(std::int64_t index, const Element& x) const;

  /// ((), 1).
  Element shift_generator() const;

  /// x ↦ (x@0, 0).
  Element embed(const Element& x) const;

  Element identity() const override;
  Element multiply(const Element& a, const Element& b) const override;
  Element invert(const Element& a) const override;
  std::string format(const Element& a) const override;
  std::optional<std::uint64_t> order() const override;

  /// Shift-major; within a shift the lamp values run through the base
  /// enumeration like an odometer with lamp 0 as the most significant digit.
  Element element_at(std::uint64_t index) const override;

  WreathGroup(GroupPtr base, std::int64_t n);

 private:
  std::int64_t reduce(std::int64_t i) const;

  GroupPtr base_;
  std::int64_t n_;
};

/// Sequence n = (n_1, n_2, ...) of a wreath tower: an explicit prefix followed
/// by a generating rule.
struct TowerSpec {
  enum class Rule { Explicit, Constant, IncreasingPrimes, PrimeProducts };

  GroupPtr base;
  Rule rule = Rule::Explicit;
  std::vector<std::int64_t> prefix;
  /// Value for Rule::Constant.
  std::int64_t constant = 2;
  /// Prime list for Rule::PrimeProducts, increasing.
  std::vector<std::int64_t> primes;
  /// Generators of the base; taken from the group when it is a permutation
  /// group and this is left empty.
  std::vector<Element> base_generators;

  /// n_i for i >= 1. Throws InvalidArgument beyond an explicit prefix.
  std::int64_t n(std::size_t i) const;
  std::string to_string() const;
};

std::string to_string(TowerSpec::Rule rule);
TowerSpec::Rule parse_tower_rule(const std::string& text);

/// The first `count` primes.
std::vector<std::int64_t> first_primes(std::size_t count);

/// Levels Γ_0, ..., Γ_depth of a wreath tower, Γ_i = Γ_{i-1} ≀ Z/n_i.
class Tower {
 public:
  Tower(TowerSpec spec, std::size_t depth);

  const TowerSpec& spec() const { return spec_; }
  std::size_t depth() const { return levels_.size() - 1; }
  const GroupPtr& level(std::size_t i) const;
  const WreathGroup& wreath_level(std::size_t i) const;

  /// Generator of the top Z/n_i of level i >= 1.
  Element shift_generator(std::size_t i) const;

  /// Standard embedding Γ_from → Γ_to, from <= to.
  Element embed(const Element& x, std::size_t from, std::size_t to) const;
  FgSubgroup embed(const FgSubgroup& h, std::size_t from, std::size_t to) const;

  /// Generators of Γ_i: the base generators and the shift generators of
  /// levels 1..i, all embedded into level i.
  FgSubgroup level_generators(std::size_t i) const;

  /// Membership in the image of Γ_j inside Γ_i (wreath-coordinate projection).
  MembershipOracle level_membership(std::size_t j, std::size_t i) const;

 private:
  TowerSpec spec_;
  std::vector<GroupPtr> levels_;
};

/// t = (shift generator of level i)^k with n_i = k p, certified against
/// H ≤ Γ_{h_level} embedded into Γ_i. Requires h_level < i and p | n_i.
CertifiedWitness zn_witness(const Tower& tower, const FgSubgroup& h, std::size_t h_level, std::size_t i,
                            std::int64_t p);

/// First element of G, in canonical enumeration order, meeting the
/// Z/p-conjugate conditions for H; nullopt after exhausting G.
std::optional<Element> brute_search_zp_witness(const Group& g, const FgSubgroup& h, std::int64_t p,
                                               unsigned jobs = 1, std::uint64_t budget = kSearchBudget);

/// For non-abelian H and t of finite order q: passes iff
/// [H, t^q H t^-q] = [H, H] != 1, i.e. t fails the Z-conjugate conditions at
/// p = q. Abelian H gives not-applicable.
PropertyReport torsion_obstruction_check(const FgSubgroup& h, const Element& t, std::uint64_t order_cap = 1'000'000);

/// H ≤ Sym(k) viewed in Sym(kn), with t = prod_j (j, j+k, ..., j+(n-1)k).
CertifiedWitness sym_zn_witness(const FgSubgroup& h, std::int64_t n);

}  // namespace displace
