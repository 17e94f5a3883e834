#include "displace/core/element.hpp"

namespace displace {

Element::Element(GroupPtr group, Payload payload)
    : group_(std::move(group)), payload_(std::make_shared<const Payload>(std::move(payload))) {
  if (!group_) throw InvalidArgument("element without a group context");
}

bool Element::is_identity() const { return *this == group_->identity(); }

std::string Element::to_string() const { return group_->format(*this); }

bool operator==(const Element& a, const Element& b) {
  if (a.payload_ == b.payload_) return a.group_->same_as(*b.group_);
  return a.group_->same_as(*b.group_) && *a.payload_ == *b.payload_;
}

bool operator==(const Lamp& a, const Lamp& b) { return a.index == b.index && a.value == b.value; }

bool operator==(const WreathElement& a, const WreathElement& b) {
  return a.shift == b.shift && a.lamps == b.lamps;
}

bool operator==(const BrittonWord& a, const BrittonWord& b) {
  return a.letters == b.letters && a.bases == b.bases;
}

bool operator==(const ProductElement& a, const ProductElement& b) { return a.components == b.components; }

Element Group::element_at(std::uint64_t) const {
  throw InvalidArgument("group " + descriptor() + " is not enumerable");
}

std::vector<Element> enumerate_group(const Group& group, std::uint64_t budget) {
  auto n = group.order();
  if (!n) throw InvalidArgument("group " + group.descriptor() + " is not known to be finite");
  if (*n > budget) {
    throw BudgetExceeded("group of order " + std::to_string(*n) + " exceeds enumeration budget " +
                         std::to_string(budget));
  }
  std::vector<Element> out;
  out.reserve(*n);
  for (std::uint64_t i = 0; i < *n; ++i) out.push_back(group.element_at(i));
  return out;
}

}  // namespace displace
