#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace displace {

/// A bijection of {1, ..., k}. Stored as a 0-based image array, which is
/// already canonical for a fixed degree. Products compose as functions:
/// (a * b)(x) = a(b(x)).
class Permutation {
 public:
  using Point = std::uint32_t;

  Permutation() = default;

  /// `images[i]` is the 0-based image of the 0-based point i.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  /// Builds a permutation from 1-based cycles. Points absent from every
  /// cycle are fixed.
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);

  /// Parses cycle notation such as "(1 2 3)(4 5)" or "()" (1-based).
  static Permutation parse(std::size_t degree, std::string_view text);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point point) const { return images_[point]; }
  const std::vector<Point>& images() const { return images_; }

  Permutation compose(const Permutation& rhs) const;
  Permutation inverse() const;
  bool is_identity() const;

  /// Extends the permutation to a larger degree, fixing the new points.
  Permutation extended(std::size_t degree) const;

  /// Nontrivial cycles, 1-based, each starting at its least point and sorted
  /// by least moved point.
  std::vector<std::vector<Point>> cycles() const;

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

}  // namespace displace
