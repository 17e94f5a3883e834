#include "displace/pl/pl_group.hpp"

#include <algorithm>

namespace displace {

PLGroup::PLGroup() : Group("PL+(R)") {}

std::shared_ptr<const PLGroup> PLGroup::instance() {
  static const auto group = std::make_shared<const PLGroup>();
  return group;
}

Element PLGroup::identity() const { return wrap(PLHomeo::identity()); }

Element PLGroup::multiply(const Element& a, const Element& b) const {
  return wrap(a.as<PLHomeo>().compose(b.as<PLHomeo>()));
}

Element PLGroup::invert(const Element& a) const { return wrap(a.as<PLHomeo>().inverse()); }

std::string PLGroup::format(const Element& a) const { return a.as<PLHomeo>().to_string(); }

PLHomeo pl_compose(const PLHomeo& f, const PLHomeo& g) { return f.compose(g); }

IntervalSet pl_support(const PLHomeo& g) { return g.support(); }

std::pair<PLHomeo, PLHomeo> thompson_generators() {
  auto q = [](long a, long b) { return make_rational(a, b); };
  PLHomeo x0 = PLHomeo::from_breakpoints({{q(0, 1), q(0, 1)}, {q(1, 2), q(1, 4)}, {q(3, 4), q(1, 2)}, {q(1, 1), q(1, 1)}});
  PLHomeo x1 = PLHomeo::from_breakpoints({{q(1, 2), q(1, 2)}, {q(3, 4), q(5, 8)}, {q(7, 8), q(3, 4)}, {q(1, 1), q(1, 1)}});
  return {x0, x1};
}

PLHomeo unique_fixed_point_element() {
  // x0^-1 squeezed onto [0, 1/2] followed by x1 on [1/2, 1].
  auto [x0, x1] = thompson_generators();
  PLHomeo left = affine_copy(x0.inverse(), {0, 1}, {0, make_rational(1, 2)});
  return left.compose(x1);
}

bool in_standard_f_copy(const PLHomeo& g) {
  for (const auto& p : g.breakpoints()) {
    if (!is_dyadic(p.x) || !is_dyadic(p.y)) return false;
    if (p.x < 0 || p.x > 1) return false;
  }
  auto slopes = g.slopes();
  return std::all_of(slopes.begin(), slopes.end(), [](const Rational& s) { return is_power_of_two(s); });
}

PropertyReport displaces(const PLHomeo& t, const IntervalSet& region, std::int64_t p_max) {
  if (p_max < 1) throw InvalidArgument("displacement bound p_max must be at least 1");
  PropertyReport report;
  report.property = "DISPLACES";
  report.subject = region.to_string();
  report.checks.push_back("t^p(X) ∩ X = ∅ for 1 <= p <= " + std::to_string(p_max));
  IntervalSet moved = region;
  for (std::int64_t p = 1; p <= p_max; ++p) {
    moved = t.image(moved);
    IntervalSet overlap = intersect(moved, region);
    if (!overlap.empty()) {
      report.fail("t^" + std::to_string(p) + "(X) meets X in " + overlap.to_string());
      return report;
    }
  }
  return report;
}

PLHomeo affine_copy(const PLHomeo& g, const OpenInterval& from, const OpenInterval& to) {
  if (!(from.lo < from.hi) || !(to.lo < to.hi)) throw InvalidArgument("affine copy between empty intervals");
  if (!g.support().subset_of(IntervalSet({from}))) {
    throw InvalidArgument("support " + g.support().to_string() + " is not contained in the source interval");
  }
  Rational scale = (to.hi - to.lo) / (from.hi - from.lo);
  auto alpha = [&](const Rational& x) { return Rational(to.lo + (x - from.lo) * scale); };
  std::vector<Breakpoint> pts;
  for (const auto& p : g.breakpoints()) pts.push_back({alpha(p.x), alpha(p.y)});
  return PLHomeo::from_breakpoints(std::move(pts));
}

PLHomeo restrict_to(const PLHomeo& g, const IntervalSet& part) {
  IntervalSet supp = g.support();
  for (const auto& piece : part.intervals()) {
    bool component = std::find(supp.intervals().begin(), supp.intervals().end(), piece) != supp.intervals().end();
    if (!component) throw InvalidArgument("interval is not a support component");
  }
  std::vector<Breakpoint> pts;
  for (const auto& piece : part.intervals()) {
    pts.push_back({piece.lo, piece.lo});
    for (const auto& p : g.breakpoints()) {
      if (piece.lo < p.x && p.x < piece.hi) pts.push_back(p);
    }
    pts.push_back({piece.hi, piece.hi});
  }
  std::sort(pts.begin(), pts.end(), [](const Breakpoint& a, const Breakpoint& b) { return a.x < b.x; });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return PLHomeo::from_breakpoints(std::move(pts));
}

}  // namespace displace
