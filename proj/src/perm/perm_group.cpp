#include "displace/perm/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace displace {

namespace {

std::string describe(std::size_t degree, const std::vector<Permutation>& gens, bool full) {
  if (full) return "Sym(" + std::to_string(degree) + ")";
  std::string out = "<";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ",";
    out += gens[i].to_string();
  }
  return out + "> <= Sym(" + std::to_string(degree) + ")";
}

std::vector<Permutation> symmetric_generators(std::size_t degree) {
  std::vector<Permutation> gens;
  if (degree >= 2) gens.push_back(Permutation::from_cycles(degree, {{1, 2}}));
  if (degree >= 3) {
    std::vector<Permutation::Point> cycle;
    for (std::size_t i = 1; i <= degree; ++i) cycle.push_back(static_cast<Permutation::Point>(i));
    gens.push_back(Permutation::from_cycles(degree, {cycle}));
  }
  return gens;
}

std::uint64_t factorial_capped(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) {
    if (f > UINT64_MAX / i) return UINT64_MAX;
    f *= i;
  }
  return f;
}

}  // namespace

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators, std::string label, bool full)
    : Group(describe(degree, generators, full)),
      degree_(degree),
      generators_(std::move(generators)),
      label_(std::move(label)),
      full_(full) {}

std::shared_ptr<const PermGroup> PermGroup::symmetric(std::size_t degree) {
  return std::make_shared<const PermGroup>(degree, symmetric_generators(degree),
                                           "S" + std::to_string(degree), true);
}

std::shared_ptr<const PermGroup> PermGroup::generated(std::size_t degree, std::vector<Permutation> generators,
                                                      std::string label) {
  std::vector<Permutation> gens;
  for (auto& g : generators) {
    if (g.degree() != degree) throw InvalidArgument("generator degree differs from group degree");
    if (g.is_identity()) continue;
    if (std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(std::move(g));
  }
  return std::make_shared<const PermGroup>(degree, std::move(gens), std::move(label), false);
}

const std::vector<Permutation>& PermGroup::sorted_elements() const {
  std::call_once(enumerated_, [this] {
    if (full_ && factorial_capped(degree_) > kSearchBudget) {
      throw BudgetExceeded("Sym(" + std::to_string(degree_) + ") is too large to enumerate");
    }
    std::set<Permutation> seen{Permutation::identity(degree_)};
    std::deque<Permutation> frontier{Permutation::identity(degree_)};
    while (!frontier.empty()) {
      Permutation x = frontier.front();
      frontier.pop_front();
      for (const auto& g : generators_) {
        Permutation y = x.compose(g);
        if (seen.insert(y).second) {
          if (seen.size() > kSearchBudget) throw BudgetExceeded("permutation group closure exceeds budget");
          frontier.push_back(std::move(y));
        }
      }
    }
    elements_.assign(seen.begin(), seen.end());
  });
  return elements_;
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  if (full_) return true;
  const auto& els = sorted_elements();
  return std::binary_search(els.begin(), els.end(), p);
}

Element PermGroup::element(const Permutation& p) const {
  if (!contains(p)) {
    throw InvalidArgument("permutation " + p.to_string() + " is not in " + descriptor());
  }
  return wrap(p);
}

Element PermGroup::parse(std::string_view cycles) const { return element(Permutation::parse(degree_, cycles)); }

std::vector<Element> PermGroup::generators() const {
  std::vector<Element> out;
  for (const auto& g : generators_) out.push_back(wrap(g));
  return out;
}

FgSubgroup PermGroup::as_subgroup() const { return FgSubgroup(label_, shared_from_this(), generators()); }

Element PermGroup::identity() const { return wrap(Permutation::identity(degree_)); }

Element PermGroup::multiply(const Element& a, const Element& b) const {
  return wrap(a.as<Permutation>().compose(b.as<Permutation>()));
}

Element PermGroup::invert(const Element& a) const { return wrap(a.as<Permutation>().inverse()); }

std::string PermGroup::format(const Element& a) const { return a.as<Permutation>().to_string(); }

std::optional<std::uint64_t> PermGroup::order() const {
  if (full_) {
    std::uint64_t f = factorial_capped(degree_);
    if (f == UINT64_MAX) return std::nullopt;
    return f;
  }
  return sorted_elements().size();
}

Element PermGroup::element_at(std::uint64_t index) const {
  const auto& els = sorted_elements();
  if (index >= els.size()) throw InvalidArgument("element index out of range");
  return wrap(els[index]);
}

std::shared_ptr<const PermGroup> symmetric_s3() { return PermGroup::symmetric(3); }

std::shared_ptr<const PermGroup> cyclic_group(std::size_t n) {
  if (n < 1) throw InvalidArgument("cyclic group of order 0");
  std::vector<Permutation::Point> cycle;
  for (std::size_t i = 1; i <= n; ++i) cycle.push_back(static_cast<Permutation::Point>(i));
  std::vector<Permutation> gens;
  if (n >= 2) gens.push_back(Permutation::from_cycles(n, {cycle}));
  return PermGroup::generated(n, std::move(gens), "Z/" + std::to_string(n));
}

std::shared_ptr<const PermGroup> trivial_group() { return PermGroup::generated(1, {}, "1"); }

}  // namespace displace
