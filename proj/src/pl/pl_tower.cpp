#include "displace/pl/pl_tower.hpp"

#include <set>

#include "displace/pl/pl_group.hpp"

namespace displace {

const PLHomeo& PLTower::dissipator(std::size_t i) const {
  if (i < 2 || i > depth()) throw InvalidArgument("no dissipator t_" + std::to_string(i));
  return dissipators[i - 2];
}

const OpenInterval& PLTower::interval(std::size_t i) const {
  if (i < 1 || i > depth()) throw InvalidArgument("no interval I_" + std::to_string(i));
  return intervals[i - 1];
}

std::vector<PLHomeo> PLTower::generators(std::size_t i) const {
  if (i < 1 || i > depth()) throw InvalidArgument("no tower level " + std::to_string(i));
  std::vector<PLHomeo> gens = base_generators;
  for (std::size_t j = 2; j <= i; ++j) gens.push_back(dissipator(j));
  return gens;
}

FgSubgroup PLTower::subgroup(std::size_t i) const {
  auto group = PLGroup::instance();
  std::vector<Element> gens;
  for (const auto& g : generators(i)) gens.push_back(group->element(g));
  return FgSubgroup("Gamma_" + std::to_string(i), group, std::move(gens));
}

PLHomeo dissipator_for(const OpenInterval& interval) {
  const Rational& l = interval.lo;
  const Rational& r = interval.hi;
  const Rational s = r - l + 1;
  const Rational right = r + kDissipatorRoom * s;
  const Rational end = right + s + 1;
  return PLHomeo::from_breakpoints({{l - 1, l - 1}, {l, l + s}, {right, right + s}, {end, end}});
}

PLTower tower_gamma(std::size_t depth) {
  if (depth < 1 || depth > kMaxPLTowerDepth) {
    throw InvalidArgument("PL tower depth must be between 1 and " + std::to_string(kMaxPLTowerDepth));
  }
  PLTower tower;
  auto [x0, x1] = thompson_generators();
  tower.base_generators = {x0, x1};
  tower.intervals.push_back(OpenInterval{0, 1});
  for (std::size_t i = 2; i <= depth; ++i) {
    PLHomeo t = dissipator_for(tower.intervals.back());
    const auto support = t.support();
    tower.intervals.push_back(support.intervals().front());
    tower.dissipators.push_back(std::move(t));
  }
  return tower;
}

MembershipOracle f_copy_membership() {
  return MembershipOracle{"standard F-copy on (0, 1): dyadic breakpoints, power-of-2 slopes",
                          [](const Element& x) { return in_standard_f_copy(x.as<PLHomeo>()); }};
}

OrbitSample sample_orbit_density(const Rational& point, std::size_t max_length, const Rational& epsilon) {
  auto [x0, x1] = thompson_generators();
  const std::vector<PLHomeo> moves = {x0, x0.inverse(), x1, x1.inverse()};
  std::set<Rational> orbit = {point};
  std::vector<Rational> frontier = {point};
  for (std::size_t length = 0; length < max_length && !frontier.empty(); ++length) {
    std::vector<Rational> next;
    for (const auto& x : frontier) {
      for (const auto& m : moves) {
        Rational y = m(x);
        if (orbit.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  OrbitSample sample;
  sample.points = orbit.size();
  Rational previous = 0;
  sample.max_gap = 0;
  for (const auto& x : orbit) {
    sample.max_gap = std::max(sample.max_gap, Rational(x - previous));
    previous = x;
  }
  sample.max_gap = std::max(sample.max_gap, Rational(1 - previous));
  sample.dense = sample.max_gap <= 2 * epsilon;
  return sample;
}

}  // namespace displace
