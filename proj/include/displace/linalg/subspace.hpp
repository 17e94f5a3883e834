#pragma once

#include <string>
#include <vector>

#include "displace/linalg/rational_matrix.hpp"

namespace displace {

/// Linear subspace of Q^n, stored by the nonzero rows of the reduced row
/// echelon form of any spanning set. That basis is canonical, so equal
/// subspaces compare equal.
class RationalSubspace {
 public:
  explicit RationalSubspace(std::size_t ambient = 0) : ambient_(ambient) {}

  static RationalSubspace span(std::size_t ambient, const std::vector<RationalVector>& vectors);

  /// Span of the standard basis vectors e_i for the given 1-based indices.
  static RationalSubspace coordinate(std::size_t ambient, const std::vector<std::size_t>& indices);

  static RationalSubspace whole(std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<RationalVector>& basis() const { return basis_; }

  bool contains(const RationalVector& v) const;
  bool contains(const RationalSubspace& other) const;

  std::string to_string() const;

  friend bool operator==(const RationalSubspace&, const RationalSubspace&) = default;

 private:
  std::size_t ambient_;
  std::vector<RationalVector> basis_;
};

RationalSubspace subspace_sum(const RationalSubspace& u, const RationalSubspace& v);

/// Exact intersection via the nullspace of the concatenated basis system.
RationalSubspace subspace_intersection(const RationalSubspace& u, const RationalSubspace& v);

/// Image of a subspace under a square matrix (columns act on column vectors).
RationalSubspace image(const RationalMatrix& m, const RationalSubspace& u);

}  // namespace displace
