#pragma once

#include <memory>
#include <vector>

#include "displace/core/element.hpp"

namespace displace {

/// Direct product G1 × ... × Gk with componentwise multiplication.
class ProductGroup final : public Group {
 public:
  static std::shared_ptr<const ProductGroup> make(std::vector<GroupPtr> factors);

  const std::vector<GroupPtr>& factors() const { return factors_; }

  /// Builds (x1, ..., xk); each component must lie in its factor.
  Element element(std::vector<Element> components) const;

  /// Embeds x into factor i, identity elsewhere.
  Element inject(std::size_t i, const Element& x) const;

  const Element& component(const Element& a, std::size_t i) const;

  Element identity() const override;
  Element multiply(const Element& a, const Element& b) const override;
  Element invert(const Element& a) const override;
  std::string format(const Element& a) const override;
  std::optional<std::uint64_t> order() const override;

  /// Mixed-radix order: the first factor is the most significant digit.
  Element element_at(std::uint64_t index) const override;

  explicit ProductGroup(std::vector<GroupPtr> factors);

 private:
  std::vector<GroupPtr> factors_;
};

}  // namespace displace
