#pragma once

#include <cstdint>
#include <memory>
#include <utility>

#include "displace/core/element.hpp"
#include "displace/core/report.hpp"
#include "displace/pl/pl_homeo.hpp"

namespace displace {

/// The group of compactly supported PL homeomorphisms of the line with
/// rational breakpoints.
class PLGroup final : public Group {
 public:
  static std::shared_ptr<const PLGroup> instance();

  Element element(const PLHomeo& f) const { return wrap(f); }

  Element identity() const override;
  Element multiply(const Element& a, const Element& b) const override;
  Element invert(const Element& a) const override;
  std::string format(const Element& a) const override;

  PLGroup();
};

/// f ∘ g.
PLHomeo pl_compose(const PLHomeo& f, const PLHomeo& g);

IntervalSet pl_support(const PLHomeo& g);

/// Generators x0, x1 of the standard copy of Thompson's group F on (0, 1).
std::pair<PLHomeo, PLHomeo> thompson_generators();

/// An element of the F-copy whose only fixed point in (0, 1) is 1/2: it
/// pushes points up on (0, 1/2) and down on (1/2, 1).
PLHomeo unique_fixed_point_element();

/// Membership in the standard copy of F on (0, 1): dyadic breakpoints,
/// power-of-two slopes and support inside (0, 1).
bool in_standard_f_copy(const PLHomeo& g);

/// t^p(I) ∩ I = ∅ for 1 <= p <= p_max, exactly.
PropertyReport displaces(const PLHomeo& t, const IntervalSet& region, std::int64_t p_max);

/// Conjugate of g by the increasing affine map from I onto J. Requires
/// supp(g) ⊆ I.
PLHomeo affine_copy(const PLHomeo& g, const OpenInterval& from, const OpenInterval& to);

/// Restriction of g to a union of components of its support: equal to g on
/// `part`, the identity elsewhere. `part` must be a union of support
/// components.
PLHomeo restrict_to(const PLHomeo& g, const IntervalSet& part);

}  // namespace displace
