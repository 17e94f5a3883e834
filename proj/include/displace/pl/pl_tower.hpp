#pragma once

#include <cstddef>
#include <vector>

#include "displace/checkers/certificate.hpp"
#include "displace/core/group_ops.hpp"
#include "displace/pl/pl_homeo.hpp"

namespace displace {

/// Concrete PL realization of the restricted tower Γ_1 < Γ_2 < ... with
/// Γ_1 the F-copy on I_1 = (0, 1) and Γ_{i+1} = <Γ_i, t_{i+1}> ≅ Γ_i ≀ Z.
struct PLTower {
  std::vector<PLHomeo> base_generators;  ///< x0, x1
  std::vector<PLHomeo> dissipators;      ///< t_2, ..., t_depth
  std::vector<OpenInterval> intervals;   ///< I_1, ..., I_depth

  std::size_t depth() const { return intervals.size(); }

  /// t_i for 2 <= i <= depth.
  const PLHomeo& dissipator(std::size_t i) const;
  const OpenInterval& interval(std::size_t i) const;

  /// Generators of Γ_i: x0, x1, t_2, ..., t_i.
  std::vector<PLHomeo> generators(std::size_t i) const;
  FgSubgroup subgroup(std::size_t i) const;
};

inline constexpr std::size_t kMaxPLTowerDepth = 5;

/// Forward images of I under the dissipator stay in its translation zone for
/// this many steps.
inline constexpr std::int64_t kDissipatorRoom = 50;

/// For I = (l, r) and s = r - l + 1: t(x) = x + s on [l, R] with
/// R = r + 50 s, interpolated to the identity at l - 1 and R + s + 1. Its
/// support is the interval (l - 1, R + s + 1) and t(x) > x there.
PLHomeo dissipator_for(const OpenInterval& interval);

/// Throws InvalidArgument for depth outside [1, 5].
PLTower tower_gamma(std::size_t depth);

/// Membership in the standard F-copy on (0, 1), as an oracle.
MembershipOracle f_copy_membership();

struct OrbitSample {
  std::size_t points = 0;
  Rational max_gap;
  bool dense = false;
};

/// Orbit of `point` under words of length <= max_length in x0, x1 and their
/// inverses. `dense` is true when every point of [0, 1] lies within epsilon
/// of the orbit, i.e. all gaps (including those at 0 and 1) are <= 2 epsilon.
OrbitSample sample_orbit_density(const Rational& point, std::size_t max_length, const Rational& epsilon);

}  // namespace displace
