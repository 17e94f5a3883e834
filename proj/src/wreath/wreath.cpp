#include "displace/wreath/wreath.hpp"

#include <map>

#include "displace/checkers/checkers.hpp"
#include "displace/core/parallel.hpp"
#include "displace/perm/perm_group.hpp"

namespace displace {

namespace {

std::string top_name(std::int64_t n) { return n == 0 ? "Z" : "Z/" + std::to_string(n); }

Element from_map(const WreathGroup& g, const std::map<std::int64_t, Element>& values, std::int64_t shift) {
  std::vector<Lamp> lamps;
  for (const auto& [index, value] : values) lamps.push_back(Lamp{index, value});
  return g.element(std::move(lamps), shift);
}

}  // namespace

std::shared_ptr<const WreathGroup> WreathGroup::make(GroupPtr base, std::int64_t n) {
  if (!base) throw InvalidArgument("wreath product needs a base group");
  if (n < 0 || n == 1) throw InvalidArgument("top order must be 0 (for Z) or at least 2");
  return std::make_shared<const WreathGroup>(std::move(base), n);
}

WreathGroup::WreathGroup(GroupPtr base, std::int64_t n)
    : Group("(" + base->descriptor() + " wr " + top_name(n) + ")"), base_(std::move(base)), n_(n) {}

std::int64_t WreathGroup::reduce(std::int64_t i) const {
  if (n_ == 0) return i;
  std::int64_t r = i % n_;
  return r < 0 ? r + n_ : r;
}

Element WreathGroup::element(std::vector<Lamp> lamps, std::int64_t shift) const {
  std::map<std::int64_t, Element> values;
  for (auto& lamp : lamps) {
    if (!lamp.value.group().same_as(*base_)) {
      throw ContextMismatch("lamp value lies in " + lamp.value.group().descriptor() + ", expected " +
                            base_->descriptor());
    }
    const std::int64_t index = reduce(lamp.index);
    auto it = values.find(index);
    if (it == values.end()) {
      values.emplace(index, std::move(lamp.value));
    } else {
      it->second = base_->multiply(it->second, lamp.value);
    }
  }
  WreathElement out;
  out.shift = reduce(shift);
  for (auto& [index, value] : values) {
    if (!value.is_identity()) out.lamps.push_back(Lamp{index, value});
  }
  return wrap(std::move(out));
}

Element WreathGroup::lamp(std::int64_t index, const Element& x) const { return element({Lamp{index, x}}, 0); }

Element WreathGroup::shift_generator() const { return wrap(WreathElement{reduce(1), {}}); }

Element WreathGroup::embed(const Element& x) const { return lamp(0, x); }

Element WreathGroup::identity() const { return wrap(WreathElement{}); }

Element WreathGroup::multiply(const Element& a, const Element& b) const {
  const auto& f = a.as<WreathElement>();
  const auto& g = b.as<WreathElement>();
  std::map<std::int64_t, Element> values;
  for (const auto& lamp : f.lamps) values.emplace(lamp.index, lamp.value);
  for (const auto& lamp : g.lamps) {
    const std::int64_t index = reduce(lamp.index + f.shift);
    auto it = values.find(index);
    if (it == values.end()) {
      values.emplace(index, lamp.value);
    } else {
      it->second = base_->multiply(it->second, lamp.value);
    }
  }
  return from_map(*this, values, f.shift + g.shift);
}

Element WreathGroup::invert(const Element& a) const {
  const auto& f = a.as<WreathElement>();
  std::map<std::int64_t, Element> values;
  for (const auto& lamp : f.lamps) values.emplace(reduce(lamp.index - f.shift), base_->invert(lamp.value));
  return from_map(*this, values, -f.shift);
}

std::string WreathGroup::format(const Element& a) const {
  const auto& f = a.as<WreathElement>();
  std::string out = "((";
  for (std::size_t i = 0; i < f.lamps.size(); ++i) {
    if (i) out += ", ";
    out += f.lamps[i].value.to_string() + "@" + std::to_string(f.lamps[i].index);
  }
  return out + "), " + std::to_string(f.shift) + ")";
}

std::optional<std::uint64_t> WreathGroup::order() const {
  auto b = base_->order();
  if (!b || n_ == 0) return std::nullopt;
  unsigned __int128 total = static_cast<unsigned __int128>(n_);
  for (std::int64_t i = 0; i < n_; ++i) {
    total *= *b;
    if (total > static_cast<unsigned __int128>(UINT64_MAX)) return std::nullopt;
  }
  return static_cast<std::uint64_t>(total);
}

Element WreathGroup::element_at(std::uint64_t index) const {
  auto total = order();
  if (!total) throw InvalidArgument("group " + descriptor() + " is not enumerable");
  if (index >= *total) throw InvalidArgument("element index out of range");
  const std::uint64_t b = *base_->order();
  const std::uint64_t per_shift = *total / static_cast<std::uint64_t>(n_);
  std::uint64_t rest = index % per_shift;
  std::vector<Lamp> lamps;
  for (std::int64_t i = n_ - 1; i >= 0; --i) {
    const std::uint64_t digit = rest % b;
    rest /= b;
    if (digit != 0) lamps.push_back(Lamp{i, base_->element_at(digit)});
  }
  return element(std::move(lamps), static_cast<std::int64_t>(index / per_shift));
}

std::string to_string(TowerSpec::Rule rule) {
  switch (rule) {
    case TowerSpec::Rule::Explicit: return "explicit";
    case TowerSpec::Rule::Constant: return "constant";
    case TowerSpec::Rule::IncreasingPrimes: return "increasing-primes";
    case TowerSpec::Rule::PrimeProducts: return "prime-products";
  }
  return "explicit";
}

TowerSpec::Rule parse_tower_rule(const std::string& text) {
  for (auto rule : {TowerSpec::Rule::Explicit, TowerSpec::Rule::Constant, TowerSpec::Rule::IncreasingPrimes,
                    TowerSpec::Rule::PrimeProducts}) {
    if (to_string(rule) == text) return rule;
  }
  throw ParseError("unknown tower rule '" + text + "'");
}

std::vector<std::int64_t> first_primes(std::size_t count) {
  std::vector<std::int64_t> primes;
  for (std::int64_t candidate = 2; primes.size() < count; ++candidate) {
    bool prime = true;
    for (std::int64_t p : primes) {
      if (p * p > candidate) break;
      if (candidate % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) primes.push_back(candidate);
  }
  return primes;
}

std::int64_t TowerSpec::n(std::size_t i) const {
  if (i == 0) throw InvalidArgument("tower indices start at 1");
  std::int64_t value = 0;
  if (i <= prefix.size()) {
    value = prefix[i - 1];
  } else {
    switch (rule) {
      case Rule::Explicit:
        throw InvalidArgument("explicit tower sequence has only " + std::to_string(prefix.size()) + " terms");
      case Rule::Constant:
        value = constant;
        break;
      case Rule::IncreasingPrimes:
        value = first_primes(i).back();
        break;
      case Rule::PrimeProducts: {
        if (primes.empty()) throw InvalidArgument("prime-products rule needs a nonempty prime list");
        value = 1;
        for (std::size_t j = 0; j < std::min(i, primes.size()); ++j) value *= primes[j];
        break;
      }
    }
  }
  if (value < 2) throw InvalidArgument("tower entry n_" + std::to_string(i) + " must be at least 2");
  return value;
}

std::string TowerSpec::to_string() const {
  std::string out = "tower(" + (base ? base->descriptor() : std::string("?")) + "; n = (";
  for (std::size_t i = 0; i < prefix.size(); ++i) out += (i ? ", " : "") + std::to_string(prefix[i]);
  out += ")";
  if (rule != Rule::Explicit) out += " then " + displace::to_string(rule);
  if (rule == Rule::Constant) out += " " + std::to_string(constant);
  if (rule == Rule::PrimeProducts) {
    out += " over {";
    for (std::size_t i = 0; i < primes.size(); ++i) out += (i ? ", " : "") + std::to_string(primes[i]);
    out += "}";
  }
  return out + ")";
}

Tower::Tower(TowerSpec spec, std::size_t depth) : spec_(std::move(spec)) {
  if (!spec_.base) throw InvalidArgument("tower needs a base group");
  if (spec_.base_generators.empty()) {
    if (const auto* perm = dynamic_cast<const PermGroup*>(spec_.base.get())) spec_.base_generators = perm->generators();
  }
  levels_.push_back(spec_.base);
  for (std::size_t i = 1; i <= depth; ++i) levels_.push_back(WreathGroup::make(levels_.back(), spec_.n(i)));
}

const GroupPtr& Tower::level(std::size_t i) const {
  if (i >= levels_.size()) throw InvalidArgument("tower level " + std::to_string(i) + " not materialized");
  return levels_[i];
}

const WreathGroup& Tower::wreath_level(std::size_t i) const {
  if (i == 0) throw InvalidArgument("level 0 is the base group");
  return static_cast<const WreathGroup&>(*level(i));
}

Element Tower::shift_generator(std::size_t i) const { return wreath_level(i).shift_generator(); }

Element Tower::embed(const Element& x, std::size_t from, std::size_t to) const {
  if (from > to) throw InvalidArgument("cannot embed downwards");
  if (!x.group().same_as(*level(from))) throw ContextMismatch("element is not in level " + std::to_string(from));
  Element y = x;
  for (std::size_t l = from + 1; l <= to; ++l) y = wreath_level(l).embed(y);
  return y;
}

FgSubgroup Tower::embed(const FgSubgroup& h, std::size_t from, std::size_t to) const {
  std::vector<Element> gens;
  for (const auto& g : h.generators()) gens.push_back(embed(g, from, to));
  return FgSubgroup(h.label(), level(to), std::move(gens));
}

FgSubgroup Tower::level_generators(std::size_t i) const {
  std::vector<Element> gens;
  for (const auto& g : spec_.base_generators) gens.push_back(embed(g, 0, i));
  for (std::size_t j = 1; j <= i; ++j) gens.push_back(embed(shift_generator(j), j, i));
  return FgSubgroup("Gamma_" + std::to_string(i), level(i), std::move(gens));
}

MembershipOracle Tower::level_membership(std::size_t j, std::size_t i) const {
  if (j > i) throw InvalidArgument("level_membership needs j <= i");
  level(i);
  return MembershipOracle{"image of level " + std::to_string(j) + " in level " + std::to_string(i),
                          [j, i](const Element& x) {
                            const Element* cur = &x;
                            for (std::size_t l = i; l > j; --l) {
                              const auto& w = cur->as<WreathElement>();
                              if (w.shift != 0) return false;
                              if (w.lamps.empty()) return true;
                              if (w.lamps.size() > 1 || w.lamps[0].index != 0) return false;
                              cur = &w.lamps[0].value;
                            }
                            return true;
                          }};
}

CertifiedWitness zn_witness(const Tower& tower, const FgSubgroup& h, std::size_t h_level, std::size_t i,
                            std::int64_t p) {
  if (h_level >= i) throw InvalidArgument("zn_witness needs the subgroup level below i");
  const std::int64_t n_i = tower.spec().n(i);
  if (p < 2 || n_i % p != 0) {
    throw InvalidArgument(std::to_string(p) + " does not divide n_" + std::to_string(i) + " = " +
                          std::to_string(n_i));
  }
  const std::int64_t k = n_i / p;
  FgSubgroup embedded = tower.embed(h, h_level, i);
  WitnessCertificate certificate{embedded, CznWitness{power(tower.shift_generator(i), k), p}};
  PropertyReport report = verify(certificate);
  report.facts.emplace_back("level", std::to_string(i));
  report.facts.emplace_back("k", std::to_string(k));
  return {std::move(certificate), std::move(report)};
}

std::optional<Element> brute_search_zp_witness(const Group& g, const FgSubgroup& h, std::int64_t p, unsigned jobs,
                                               std::uint64_t budget) {
  if (!h.group()->same_as(g)) throw ContextMismatch(h.label() + " is not a subgroup of " + g.descriptor());
  auto total = g.order();
  if (!total) throw InvalidArgument("exhaustive search needs a finite group");
  if (*total > budget) {
    throw BudgetExceeded("search space " + std::to_string(*total) + " exceeds budget " + std::to_string(budget));
  }
  auto hit = parallel_first_index(*total, jobs,
                                  [&](std::uint64_t i) { return check_cznc(h, g.element_at(i), p).passed(); });
  if (!hit) return std::nullopt;
  return g.element_at(*hit);
}

PropertyReport torsion_obstruction_check(const FgSubgroup& h, const Element& t, std::uint64_t order_cap) {
  PropertyReport report;
  report.property = "TORSION-OBSTRUCTION";
  report.subject = h.label();
  if (h.is_abelian()) {
    report.verdict = Verdict::NotApplicable;
    report.notes.push_back("the obstruction needs a non-abelian subgroup");
    return report;
  }
  auto q = order_of(t, order_cap);
  if (!q) throw InvalidArgument("t has infinite order or order above " + std::to_string(order_cap));
  report.facts.emplace_back("ord(t)", std::to_string(*q));
  report.checks.push_back("[H, t^q H t^-q] != 1 at q = ord(t)");
  PropertyReport at_order = subgroups_commute(h, h.conjugated_by(power(t, static_cast<std::int64_t>(*q))));
  if (at_order.passed()) {
    report.fail("[H, t^" + std::to_string(*q) + " H t^-" + std::to_string(*q) + "] = 1 although H is non-abelian");
  } else {
    report.counterexample = at_order.counterexample;
    report.notes.push_back("Z-conjugate condition fails at p = " + std::to_string(*q));
  }
  return report;
}

CertifiedWitness sym_zn_witness(const FgSubgroup& h, std::int64_t n) {
  const auto* source = dynamic_cast<const PermGroup*>(h.group().get());
  if (!source) throw ContextMismatch(h.label() + " is not a permutation group");
  if (n < 2) throw InvalidArgument("sym_zn_witness needs n >= 2");
  const std::size_t k = source->degree();
  const std::size_t degree = k * static_cast<std::size_t>(n);
  auto target = PermGroup::symmetric(degree);

  std::vector<std::vector<Permutation::Point>> cycles;
  for (std::size_t j = 1; j <= k; ++j) {
    std::vector<Permutation::Point> cycle;
    for (std::int64_t q = 0; q < n; ++q) cycle.push_back(static_cast<Permutation::Point>(j + q * k));
    cycles.push_back(std::move(cycle));
  }
  std::vector<Element> gens;
  for (const auto& g : h.generators()) gens.push_back(target->element(g.as<Permutation>().extended(degree)));
  FgSubgroup embedded(h.label(), target, std::move(gens));
  WitnessCertificate certificate{embedded, CznWitness{target->element(Permutation::from_cycles(degree, cycles)), n}};
  PropertyReport report = verify(certificate);
  report.facts.emplace_back("ambient", target->descriptor());
  return {std::move(certificate), std::move(report)};
}

}  // namespace displace
