#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "displace/core/errors.hpp"
#include "displace/linalg/rational_matrix.hpp"
#include "displace/perm/permutation.hpp"
#include "displace/pl/pl_homeo.hpp"

namespace displace {

class Element;
class Group;
using GroupPtr = std::shared_ptr<const Group>;

struct Lamp;

/// Element (f, k) of a restricted wreath product with cyclic or infinite
/// cyclic top: the finitely supported base function f followed by the top
/// shift k. Lamps are sorted by index and never carry the identity.
struct WreathElement {
  std::int64_t shift = 0;
  std::vector<Lamp> lamps;
};

/// One occurrence of a stable letter (or its inverse) in an HNN word.
struct StableLetter {
  std::uint8_t letter = 0;
  std::int8_t sign = 1;

  StableLetter inverse() const { return {letter, static_cast<std::int8_t>(-sign)}; }
  friend bool operator==(const StableLetter&, const StableLetter&) = default;
};

/// Alternating word b0 s1 b1 ... sm bm over an HNN presentation; the b_i are
/// elements of the base group and `bases.size() == letters.size() + 1`.
struct BrittonWord {
  std::vector<Element> bases;
  std::vector<StableLetter> letters;
};

/// Freely reduced word; letter +(i+1) is generator i, -(i+1) its inverse.
struct FreeWord {
  std::vector<int> letters;
  friend bool operator==(const FreeWord&, const FreeWord&) = default;
};

/// Element of a direct product, one component per factor.
struct ProductElement {
  std::vector<Element> components;
};

/// A group element in one concrete realization. Every element carries the
/// group (context) it belongs to; its payload is in that group's canonical
/// form, so equality is structural.
class Element {
 public:
  using Payload =
      std::variant<Permutation, RationalMatrix, WreathElement, PLHomeo, BrittonWord, FreeWord, ProductElement>;

  Element(GroupPtr group, Payload payload);

  const Group& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  const Payload& payload() const { return *payload_; }

  template <class T>
  const T& as() const {
    if (const T* p = std::get_if<T>(payload_.get())) return *p;
    throw RealizationMismatch("element is not of the requested realization");
  }

  bool is_identity() const;
  std::string to_string() const;

  friend bool operator==(const Element& a, const Element& b);

 private:
  GroupPtr group_;
  std::shared_ptr<const Payload> payload_;
};

struct Lamp {
  std::int64_t index = 0;
  Element value;
};

bool operator==(const Lamp& a, const Lamp& b);
bool operator==(const WreathElement& a, const WreathElement& b);
bool operator==(const BrittonWord& a, const BrittonWord& b);
bool operator==(const ProductElement& a, const ProductElement& b);

/// A group context: owns the realization descriptor and implements the group
/// law on canonical payloads. Contexts are immutable and shared.
class Group : public std::enable_shared_from_this<Group> {
 public:
  virtual ~Group() = default;

  /// Canonical description; two contexts with equal descriptors are the same
  /// group and their elements interoperate.
  const std::string& descriptor() const { return descriptor_; }

  virtual Element identity() const = 0;
  virtual Element multiply(const Element& a, const Element& b) const = 0;
  virtual Element invert(const Element& a) const = 0;
  virtual std::string format(const Element& a) const = 0;

  /// Group order when finite and known.
  virtual std::optional<std::uint64_t> order() const { return std::nullopt; }

  /// The index-th element of a fixed canonical enumeration (identity first).
  /// Only finite, enumerable groups implement this.
  virtual Element element_at(std::uint64_t index) const;

  bool same_as(const Group& other) const { return this == &other || descriptor_ == other.descriptor_; }

 protected:
  explicit Group(std::string descriptor) : descriptor_(std::move(descriptor)) {}

  Element wrap(Element::Payload payload) const { return Element(shared_from_this(), std::move(payload)); }

 private:
  std::string descriptor_;
};

/// Default bound on exhaustive enumerations and searches.
inline constexpr std::uint64_t kSearchBudget = 10'000'000;

/// All elements of a finite group in canonical order; throws BudgetExceeded
/// when the order exceeds `budget` and InvalidArgument for infinite groups.
std::vector<Element> enumerate_group(const Group& group, std::uint64_t budget = kSearchBudget);

}  // namespace displace
