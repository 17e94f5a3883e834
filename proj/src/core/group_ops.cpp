#include "displace/core/group_ops.hpp"

#include <algorithm>
#include <deque>

namespace displace {

void require_same_context(const Element& a, const Element& b) {
  if (!a.group().same_as(b.group())) {
    throw ContextMismatch("elements from different groups: " + a.group().descriptor() + " vs " +
                          b.group().descriptor());
  }
}

Element mul(const Element& a, const Element& b) {
  require_same_context(a, b);
  return a.group().multiply(a, b);
}

Element inv(const Element& a) { return a.group().invert(a); }

Element conj(const Element& t, const Element& g) { return mul(mul(t, g), inv(t)); }

Element commutator(const Element& a, const Element& b) { return mul(mul(a, b), mul(inv(a), inv(b))); }

Element power(const Element& g, std::int64_t k) {
  Element base = k < 0 ? inv(g) : g;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
  Element result = g.group().identity();
  while (e > 0) {
    if (e & 1U) result = mul(result, base);
    e >>= 1U;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

bool commute(const Element& a, const Element& b) { return mul(a, b) == mul(b, a); }

std::optional<std::uint64_t> order_of(const Element& g, std::uint64_t cap) {
  Element x = g;
  for (std::uint64_t k = 1; k <= cap; ++k) {
    if (x.is_identity()) return k;
    x = mul(x, g);
  }
  return std::nullopt;
}

FgSubgroup::FgSubgroup(std::string label, GroupPtr group, std::vector<Element> generators)
    : label_(std::move(label)), group_(std::move(group)) {
  if (!group_) throw InvalidArgument("subgroup without a group context");
  for (auto& g : generators) {
    if (!g.group().same_as(*group_)) {
      throw ContextMismatch("generator of " + label_ + " lies in " + g.group().descriptor() +
                            ", expected " + group_->descriptor());
    }
    if (g.is_identity()) continue;
    if (std::find(generators_.begin(), generators_.end(), g) != generators_.end()) continue;
    generators_.push_back(std::move(g));
  }
}

FgSubgroup FgSubgroup::conjugated_by(const Element& t) const {
  if (!t.group().same_as(*group_)) {
    throw ContextMismatch("conjugating " + label_ + " by an element of " + t.group().descriptor());
  }
  std::vector<Element> gens;
  gens.reserve(generators_.size());
  for (const auto& g : generators_) gens.push_back(conj(t, g));
  return FgSubgroup("^(" + t.to_string() + ")" + label_, group_, std::move(gens));
}

bool FgSubgroup::is_abelian() const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    for (std::size_t j = i + 1; j < generators_.size(); ++j)
      if (!commute(generators_[i], generators_[j])) return false;
  return true;
}

PropertyReport subgroups_commute(const FgSubgroup& h, const FgSubgroup& k) {
  if (!h.group()->same_as(*k.group())) {
    throw ContextMismatch("subgroups " + h.label() + " and " + k.label() + " live in different groups");
  }
  PropertyReport report;
  report.property = "COMMUTE";
  report.subject = h.label() + " , " + k.label();
  report.checks.push_back("[h, k] = 1 for " + std::to_string(h.generators().size() * k.generators().size()) +
                          " generator pairs");
  for (const auto& a : h.generators()) {
    for (const auto& b : k.generators()) {
      if (!commutator(a, b).is_identity()) {
        report.fail("[" + a.to_string() + ", " + b.to_string() + "] != 1",
                    Counterexample{Counterexample::Kind::Commutator, a, b});
        return report;
      }
    }
  }
  return report;
}

std::vector<Element> closure(const FgSubgroup& h, std::uint64_t budget) {
  std::vector<Element> seen{h.group()->identity()};
  std::deque<std::size_t> frontier{0};
  auto known = [&](const Element& x) { return std::find(seen.begin(), seen.end(), x) != seen.end(); };
  while (!frontier.empty()) {
    std::size_t i = frontier.front();
    frontier.pop_front();
    for (const auto& g : h.generators()) {
      Element next = mul(seen[i], g);
      if (known(next)) continue;
      if (seen.size() >= budget) {
        throw BudgetExceeded("closure of " + h.label() + " exceeds " + std::to_string(budget) + " elements");
      }
      seen.push_back(std::move(next));
      frontier.push_back(seen.size() - 1);
    }
  }
  return seen;
}

std::uint64_t uniform_index(Rng& rng, std::uint64_t n) {
  if (n == 0) throw InvalidArgument("uniform_index over an empty range");
  return rng() % n;
}

Element random_word(const FgSubgroup& h, std::size_t length, Rng& rng) {
  Element x = h.group()->identity();
  if (h.trivial()) return x;
  const auto& gens = h.generators();
  for (std::size_t i = 0; i < length; ++i) {
    std::uint64_t pick = uniform_index(rng, 2 * gens.size());
    const Element& g = gens[pick / 2];
    x = mul(x, pick % 2 == 0 ? g : inv(g));
  }
  return x;
}

}  // namespace displace
