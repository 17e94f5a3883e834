#include "displace/pl/interval_set.hpp"

#include <algorithm>

#include "displace/core/errors.hpp"

namespace displace {

IntervalSet::IntervalSet(std::vector<OpenInterval> intervals) : intervals_(std::move(intervals)) {
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    if (!(intervals_[i].lo < intervals_[i].hi)) {
      throw InvalidArgument("empty open interval (" + displace::to_string(intervals_[i].lo) + ", " +
                            displace::to_string(intervals_[i].hi) + ")");
    }
    if (i > 0 && intervals_[i - 1].hi > intervals_[i].lo) {
      throw InvalidArgument("intervals overlap or are unsorted");
    }
  }
}

IntervalSet IntervalSet::single(Rational lo, Rational hi) {
  return IntervalSet({OpenInterval{std::move(lo), std::move(hi)}});
}

bool IntervalSet::contains(const Rational& x) const {
  return std::any_of(intervals_.begin(), intervals_.end(),
                     [&](const OpenInterval& i) { return i.contains(x); });
}

bool IntervalSet::subset_of(const IntervalSet& other) const {
  for (const auto& piece : intervals_) {
    bool covered = std::any_of(other.intervals_.begin(), other.intervals_.end(),
                               [&](const OpenInterval& o) { return o.lo <= piece.lo && piece.hi <= o.hi; });
    if (!covered) return false;
  }
  return true;
}

OpenInterval IntervalSet::hull() const {
  if (intervals_.empty()) throw InvalidArgument("hull of an empty interval set");
  return {intervals_.front().lo, intervals_.back().hi};
}

std::string IntervalSet::to_string() const {
  if (intervals_.empty()) return "{}";
  std::string out = "{";
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    if (i) out += ", ";
    out += "(" + displace::to_string(intervals_[i].lo) + ", " + displace::to_string(intervals_[i].hi) + ")";
  }
  return out + "}";
}

IntervalSet intersect(const IntervalSet& a, const IntervalSet& b) {
  std::vector<OpenInterval> out;
  const auto& xs = a.intervals();
  const auto& ys = b.intervals();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < xs.size() && j < ys.size()) {
    const Rational& lo = std::max(xs[i].lo, ys[j].lo);
    const Rational& hi = std::min(xs[i].hi, ys[j].hi);
    if (lo < hi) out.push_back({lo, hi});
    if (xs[i].hi < ys[j].hi) {
      ++i;
    } else {
      ++j;
    }
  }
  return IntervalSet(std::move(out));
}

}  // namespace displace
