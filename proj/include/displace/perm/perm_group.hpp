#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "displace/core/element.hpp"
#include "displace/core/group_ops.hpp"

namespace displace {

/// A finite permutation group: either the full symmetric group Sym(k) or the
/// subgroup of Sym(k) generated by a list of permutations.
class PermGroup final : public Group {
 public:
  static std::shared_ptr<const PermGroup> symmetric(std::size_t degree);

  /// Subgroup of Sym(degree) generated by `generators`; `label` is used only
  /// for display (S3, Z/2, ...).
  static std::shared_ptr<const PermGroup> generated(std::size_t degree, std::vector<Permutation> generators,
                                                    std::string label);

  std::size_t degree() const { return degree_; }
  bool is_full_symmetric() const { return full_; }
  const std::string& label() const { return label_; }

  /// Wraps a permutation, checking that it belongs to this group.
  Element element(const Permutation& p) const;
  Element parse(std::string_view cycles) const;

  bool contains(const Permutation& p) const;

  /// The defining generators as elements (for Sym(k): a transposition and a
  /// k-cycle).
  std::vector<Element> generators() const;
  FgSubgroup as_subgroup() const;

  Element identity() const override;
  Element multiply(const Element& a, const Element& b) const override;
  Element invert(const Element& a) const override;
  std::string format(const Element& a) const override;
  std::optional<std::uint64_t> order() const override;

  /// Elements sorted by image array; the identity comes first.
  Element element_at(std::uint64_t index) const override;

  PermGroup(std::size_t degree, std::vector<Permutation> generators, std::string label, bool full);

 private:
  const std::vector<Permutation>& sorted_elements() const;

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::string label_;
  bool full_;

  mutable std::once_flag enumerated_;
  mutable std::vector<Permutation> elements_;
};

/// Common small groups as permutation groups.
std::shared_ptr<const PermGroup> symmetric_s3();
std::shared_ptr<const PermGroup> cyclic_group(std::size_t n);
std::shared_ptr<const PermGroup> trivial_group();

}  // namespace displace
