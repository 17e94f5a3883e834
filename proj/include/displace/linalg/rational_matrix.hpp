#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "displace/core/rational.hpp"

namespace displace {

using RationalVector = std::vector<Rational>;

/// Dense row-major matrix over Q. Entries are kept in lowest terms.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows);
  static RationalMatrix from_ints(std::initializer_list<std::initializer_list<long>> rows);

  /// Block-diagonal sum diag(a, b).
  static RationalMatrix direct_sum(const RationalMatrix& a, const RationalMatrix& b);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const Rational& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  RationalVector row(std::size_t r) const;

  /// Square matrix padded with an identity block up to size n (a ⊕ I).
  RationalMatrix padded(std::size_t n) const;

  /// Sub-block with top-left corner (r0, c0).
  RationalMatrix block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const;

  RationalMatrix transpose() const;
  Rational determinant() const;
  bool is_invertible() const;

  /// Throws SingularMatrix when the determinant vanishes.
  RationalMatrix inverse() const;

  RationalVector apply(const RationalVector& v) const;

  bool is_identity() const;

  /// Rows joined by ';', entries as "n/d", e.g. "[1/1 0/1; 0/1 1/1]".
  std::string to_string() const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

struct RowEchelon {
  RationalMatrix reduced;            ///< reduced row echelon form
  std::vector<std::size_t> pivots;   ///< pivot column of each nonzero row
};

RowEchelon row_reduce(const RationalMatrix& m);
std::size_t rank(const RationalMatrix& m);

/// Basis of {x : m x = 0}, one vector per free column.
std::vector<RationalVector> nullspace(const RationalMatrix& m);

}  // namespace displace
