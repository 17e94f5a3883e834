#pragma once

#include <memory>
#include <string_view>

#include "displace/core/element.hpp"

namespace displace {

/// Free group on `rank` generators, written a, b, c, ...; inverses as
/// upper-case letters. Elements are freely reduced words.
class FreeGroup final : public Group {
 public:
  static std::shared_ptr<const FreeGroup> make(std::size_t rank);

  std::size_t rank() const { return rank_; }

  Element generator(std::size_t i) const;

  /// Word from letters ±(i+1); reduced on construction.
  Element word(std::vector<int> letters) const;

  /// Parses "abA" style words; "1" or "" is the identity.
  Element parse(std::string_view text) const;

  Element identity() const override;
  Element multiply(const Element& a, const Element& b) const override;
  Element invert(const Element& a) const override;
  std::string format(const Element& a) const override;

  explicit FreeGroup(std::size_t rank);

 private:
  std::size_t rank_;
};

}  // namespace displace
