#include "displace/linalg/rational_matrix.hpp"

#include <utility>

#include "displace/core/errors.hpp"

namespace displace {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows) {
  if (rows.empty()) return {};
  RationalMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) {
      throw InvalidArgument("ragged matrix rows");
    }
    for (std::size_t c = 0; c < m.cols_; ++c) {
      m.at(r, c) = rows[r][c];
      m.at(r, c).canonicalize();
    }
  }
  return m;
}

RationalMatrix RationalMatrix::from_ints(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<RationalVector> data;
  for (const auto& row : rows) {
    RationalVector v;
    for (long x : row) v.emplace_back(x);
    data.push_back(std::move(v));
  }
  return from_rows(data);
}

RationalMatrix RationalMatrix::direct_sum(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix m(a.rows_ + b.rows_, a.cols_ + b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t c = 0; c < a.cols_; ++c) m.at(r, c) = a.at(r, c);
  for (std::size_t r = 0; r < b.rows_; ++r)
    for (std::size_t c = 0; c < b.cols_; ++c) m.at(a.rows_ + r, a.cols_ + c) = b.at(r, c);
  return m;
}

RationalVector RationalMatrix::row(std::size_t r) const {
  return RationalVector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                        entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RationalMatrix RationalMatrix::padded(std::size_t n) const {
  if (!is_square() || n < rows_) {
    throw InvalidArgument("padding requires a square matrix no larger than the target");
  }
  if (n == rows_) return *this;
  return direct_sum(*this, identity(n - rows_));
}

RationalMatrix RationalMatrix::block(std::size_t r0, std::size_t c0, std::size_t nrows,
                                     std::size_t ncols) const {
  if (r0 + nrows > rows_ || c0 + ncols > cols_) {
    throw InvalidArgument("block out of range");
  }
  RationalMatrix m(nrows, ncols);
  for (std::size_t r = 0; r < nrows; ++r)
    for (std::size_t c = 0; c < ncols; ++c) m.at(r, c) = at(r0 + r, c0 + c);
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
  return m;
}

Rational RationalMatrix::determinant() const {
  if (!is_square()) throw InvalidArgument("determinant of a non-square matrix");
  RationalMatrix m = *this;
  Rational det = 1;
  const std::size_t n = rows_;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m.at(pivot, col) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m.at(pivot, c), m.at(col, c));
      det = -det;
    }
    det *= m.at(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m.at(r, col) == 0) continue;
      Rational factor = m.at(r, col) / m.at(col, col);
      for (std::size_t c = col; c < n; ++c) m.at(r, c) -= factor * m.at(col, c);
    }
  }
  return det;
}

bool RationalMatrix::is_invertible() const { return is_square() && determinant() != 0; }

RationalMatrix RationalMatrix::inverse() const {
  if (!is_square()) throw SingularMatrix("inverse of a non-square matrix");
  const std::size_t n = rows_;
  RationalMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = at(r, c);
    aug.at(r, n + r) = 1;
  }
  RowEchelon e = row_reduce(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) {
    throw SingularMatrix("matrix is singular");
  }
  return e.reduced.block(0, n, n, n);
}

RationalVector RationalMatrix::apply(const RationalVector& v) const {
  if (v.size() != cols_) throw InvalidArgument("vector length does not match matrix");
  RationalVector out(rows_, Rational(0));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r] += at(r, c) * v[c];
  return out;
}

bool RationalMatrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (at(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

std::string RationalMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) out += "; ";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out += ' ';
      out += displace::to_string(at(r, c));
    }
  }
  return out + "]";
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw InvalidArgument("matrix product dimension mismatch");
  RationalMatrix m(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a.at(r, k);
      if (x == 0) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) m.at(r, c) += x * b.at(k, c);
    }
  }
  return m;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidArgument("matrix sum dimension mismatch");
  RationalMatrix m = a;
  for (std::size_t i = 0; i < m.entries_.size(); ++i) m.entries_[i] += b.entries_[i];
  return m;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidArgument("matrix difference dimension mismatch");
  RationalMatrix m = a;
  for (std::size_t i = 0; i < m.entries_.size(); ++i) m.entries_[i] -= b.entries_[i];
  return m;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

RowEchelon row_reduce(const RationalMatrix& input) {
  RowEchelon result{input, {}};
  RationalMatrix& m = result.reduced;
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < m.cols() && lead_row < m.rows(); ++col) {
    std::size_t pivot = lead_row;
    while (pivot < m.rows() && m.at(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead_row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(pivot, c), m.at(lead_row, c));
    }
    Rational scale = m.at(lead_row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m.at(lead_row, c) /= scale;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m.at(r, col) == 0) continue;
      Rational factor = m.at(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m.at(r, c) -= factor * m.at(lead_row, c);
    }
    result.pivots.push_back(col);
    ++lead_row;
  }
  return result;
}

std::size_t rank(const RationalMatrix& m) { return row_reduce(m).pivots.size(); }

std::vector<RationalVector> nullspace(const RationalMatrix& m) {
  RowEchelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(m.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      v[e.pivots[r]] = -e.reduced.at(r, free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace displace
