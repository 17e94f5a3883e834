#include "displace/hnn/product_group.hpp"

#include "displace/core/group_ops.hpp"

namespace displace {

namespace {

std::string describe(const std::vector<GroupPtr>& factors) {
  std::string out = "(";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += " x ";
    out += factors[i]->descriptor();
  }
  return out + ")";
}

}  // namespace

ProductGroup::ProductGroup(std::vector<GroupPtr> factors) : Group(describe(factors)), factors_(std::move(factors)) {
  if (factors_.empty()) throw InvalidArgument("direct product of no factors");
}

std::shared_ptr<const ProductGroup> ProductGroup::make(std::vector<GroupPtr> factors) {
  return std::make_shared<const ProductGroup>(std::move(factors));
}

Element ProductGroup::element(std::vector<Element> components) const {
  if (components.size() != factors_.size()) throw InvalidArgument("wrong number of product components");
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (!components[i].group().same_as(*factors_[i])) {
      throw ContextMismatch("product component " + std::to_string(i) + " lies in " +
                            components[i].group().descriptor());
    }
  }
  return wrap(ProductElement{std::move(components)});
}

Element ProductGroup::inject(std::size_t i, const Element& x) const {
  std::vector<Element> cs;
  for (const auto& f : factors_) cs.push_back(f->identity());
  if (i >= cs.size()) throw InvalidArgument("factor index out of range");
  cs[i] = x;
  return element(std::move(cs));
}

const Element& ProductGroup::component(const Element& a, std::size_t i) const {
  return a.as<ProductElement>().components.at(i);
}

Element ProductGroup::identity() const {
  std::vector<Element> cs;
  for (const auto& f : factors_) cs.push_back(f->identity());
  return wrap(ProductElement{std::move(cs)});
}

Element ProductGroup::multiply(const Element& a, const Element& b) const {
  const auto& x = a.as<ProductElement>().components;
  const auto& y = b.as<ProductElement>().components;
  std::vector<Element> cs;
  cs.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) cs.push_back(mul(x[i], y[i]));
  return wrap(ProductElement{std::move(cs)});
}

Element ProductGroup::invert(const Element& a) const {
  std::vector<Element> cs;
  for (const auto& c : a.as<ProductElement>().components) cs.push_back(inv(c));
  return wrap(ProductElement{std::move(cs)});
}

std::string ProductGroup::format(const Element& a) const {
  std::string out = "(";
  const auto& cs = a.as<ProductElement>().components;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (i) out += ", ";
    out += cs[i].to_string();
  }
  return out + ")";
}

std::optional<std::uint64_t> ProductGroup::order() const {
  std::uint64_t total = 1;
  for (const auto& f : factors_) {
    auto n = f->order();
    if (!n) return std::nullopt;
    if (*n != 0 && total > UINT64_MAX / *n) return std::nullopt;
    total *= *n;
  }
  return total;
}

Element ProductGroup::element_at(std::uint64_t index) const {
  std::vector<std::uint64_t> digits(factors_.size());
  for (std::size_t i = factors_.size(); i-- > 0;) {
    auto n = factors_[i]->order();
    if (!n) throw InvalidArgument("infinite factor in enumeration");
    digits[i] = index % *n;
    index /= *n;
  }
  if (index != 0) throw InvalidArgument("element index out of range");
  std::vector<Element> cs;
  for (std::size_t i = 0; i < factors_.size(); ++i) cs.push_back(factors_[i]->element_at(digits[i]));
  return wrap(ProductElement{std::move(cs)});
}

}  // namespace displace
