#pragma once

#include <string>
#include <vector>

#include "displace/core/rational.hpp"

namespace displace {

/// Open interval (lo, hi) with lo < hi.
struct OpenInterval {
  Rational lo;
  Rational hi;

  bool contains(const Rational& x) const { return lo < x && x < hi; }
  friend bool operator==(const OpenInterval&, const OpenInterval&) = default;
};

/// Finite union of pairwise disjoint open intervals, sorted by left endpoint.
class IntervalSet {
 public:
  IntervalSet() = default;

  /// Validates sortedness, disjointness and nonemptiness of every interval.
  explicit IntervalSet(std::vector<OpenInterval> intervals);

  static IntervalSet single(Rational lo, Rational hi);

  const std::vector<OpenInterval>& intervals() const { return intervals_; }
  std::size_t size() const { return intervals_.size(); }
  bool empty() const { return intervals_.empty(); }

  bool contains(const Rational& x) const;

  /// True when every point of this set lies in `other`.
  bool subset_of(const IntervalSet& other) const;

  /// Smallest closed hull [lo, hi]; requires a nonempty set.
  OpenInterval hull() const;

  std::string to_string() const;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  std::vector<OpenInterval> intervals_;
};

IntervalSet intersect(const IntervalSet& a, const IntervalSet& b);

}  // namespace displace
