#pragma once

#include <string>
#include <vector>

#include "displace/core/rational.hpp"
#include "displace/pl/interval_set.hpp"

namespace displace {

struct Breakpoint {
  Rational x;
  Rational y;
  friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

/// Compactly supported, orientation-preserving piecewise-linear homeomorphism
/// of the real line. The map is the identity left of the first breakpoint and
/// right of the last one, and affine between consecutive breakpoints.
///
/// The breakpoint list is canonical: every listed point is a genuine change
/// of slope (collinear points and points on an identity ray are removed), so
/// the identity has no breakpoints and equality is list equality.
class PLHomeo {
 public:
  PLHomeo() = default;

  /// Validates strict monotonicity and diagonal endpoints, then canonicalizes.
  static PLHomeo from_breakpoints(std::vector<Breakpoint> points);

  static PLHomeo identity() { return {}; }

  const std::vector<Breakpoint>& breakpoints() const { return points_; }
  bool is_identity() const { return points_.empty(); }

  Rational operator()(const Rational& x) const;
  Rational preimage(const Rational& y) const;

  PLHomeo inverse() const;

  /// f.compose(g) = f ∘ g.
  PLHomeo compose(const PLHomeo& g) const;

  /// Slopes of the affine pieces between consecutive breakpoints.
  std::vector<Rational> slopes() const;

  /// The open set {x : g(x) != x}.
  IntervalSet support() const;

  /// Image of an open interval (endpoints map to endpoints).
  OpenInterval image(const OpenInterval& interval) const;
  IntervalSet image(const IntervalSet& set) const;

  std::string to_string() const;

  friend bool operator==(const PLHomeo&, const PLHomeo&) = default;

 private:
  std::vector<Breakpoint> points_;
};

}  // namespace displace
