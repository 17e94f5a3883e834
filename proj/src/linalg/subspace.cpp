#include "displace/linalg/subspace.hpp"

#include "displace/core/errors.hpp"

namespace displace {

RationalSubspace RationalSubspace::span(std::size_t ambient, const std::vector<RationalVector>& vectors) {
  RationalSubspace s(ambient);
  if (vectors.empty()) return s;
  for (const auto& v : vectors) {
    if (v.size() != ambient) throw InvalidArgument("vector length differs from ambient dimension");
  }
  RowEchelon e = row_reduce(RationalMatrix::from_rows(vectors));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) s.basis_.push_back(e.reduced.row(r));
  return s;
}

RationalSubspace RationalSubspace::coordinate(std::size_t ambient, const std::vector<std::size_t>& indices) {
  std::vector<RationalVector> vs;
  for (std::size_t i : indices) {
    if (i < 1 || i > ambient) throw InvalidArgument("coordinate index out of range");
    RationalVector v(ambient, Rational(0));
    v[i - 1] = 1;
    vs.push_back(std::move(v));
  }
  return span(ambient, vs);
}

RationalSubspace RationalSubspace::whole(std::size_t ambient) {
  std::vector<std::size_t> all;
  for (std::size_t i = 1; i <= ambient; ++i) all.push_back(i);
  return coordinate(ambient, all);
}

bool RationalSubspace::contains(const RationalVector& v) const {
  if (v.size() != ambient_) throw InvalidArgument("vector length differs from ambient dimension");
  std::vector<RationalVector> rows = basis_;
  rows.push_back(v);
  return rank(RationalMatrix::from_rows(rows)) == basis_.size();
}

bool RationalSubspace::contains(const RationalSubspace& other) const {
  if (other.ambient_ != ambient_) throw InvalidArgument("ambient dimension mismatch");
  return subspace_sum(*this, other).dim() == dim();
}

std::string RationalSubspace::to_string() const {
  std::string out = "span{";
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (i) out += ", ";
    out += "(";
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (j) out += " ";
      out += displace::to_string(basis_[i][j]);
    }
    out += ")";
  }
  return out + "} in Q^" + std::to_string(ambient_);
}

RationalSubspace subspace_sum(const RationalSubspace& u, const RationalSubspace& v) {
  if (u.ambient() != v.ambient()) throw InvalidArgument("ambient dimension mismatch");
  std::vector<RationalVector> rows = u.basis();
  rows.insert(rows.end(), v.basis().begin(), v.basis().end());
  return RationalSubspace::span(u.ambient(), rows);
}

RationalSubspace subspace_intersection(const RationalSubspace& u, const RationalSubspace& v) {
  if (u.ambient() != v.ambient()) throw InvalidArgument("ambient dimension mismatch");
  const std::size_t n = u.ambient();
  if (u.dim() == 0 || v.dim() == 0) return RationalSubspace(n);
  // Solve sum a_i u_i - sum b_j v_j = 0; the columns are the basis vectors.
  RationalMatrix system(n, u.dim() + v.dim());
  for (std::size_t i = 0; i < u.dim(); ++i)
    for (std::size_t r = 0; r < n; ++r) system.at(r, i) = u.basis()[i][r];
  for (std::size_t j = 0; j < v.dim(); ++j)
    for (std::size_t r = 0; r < n; ++r) system.at(r, u.dim() + j) = -v.basis()[j][r];
  std::vector<RationalVector> common;
  for (const auto& coeffs : nullspace(system)) {
    RationalVector w(n, Rational(0));
    for (std::size_t i = 0; i < u.dim(); ++i)
      for (std::size_t r = 0; r < n; ++r) w[r] += coeffs[i] * u.basis()[i][r];
    common.push_back(std::move(w));
  }
  return RationalSubspace::span(n, common);
}

RationalSubspace image(const RationalMatrix& m, const RationalSubspace& u) {
  if (!m.is_square() || m.rows() != u.ambient()) throw InvalidArgument("matrix size differs from ambient dimension");
  std::vector<RationalVector> vs;
  for (const auto& b : u.basis()) vs.push_back(m.apply(b));
  return RationalSubspace::span(u.ambient(), vs);
}

}  // namespace displace
