#include "displace/linalg/gl.hpp"

#include <algorithm>

#include "displace/checkers/checkers.hpp"

namespace displace {

RationalMatrix trim_identity_block(const RationalMatrix& m) {
  std::size_t n = m.rows();
  auto tail_is_identity = [&](std::size_t k) {
    // Row and column k - 1 agree with the identity.
    for (std::size_t j = 0; j < n; ++j) {
      Rational expected = (j == k - 1) ? 1 : 0;
      if (m.at(k - 1, j) != expected || m.at(j, k - 1) != expected) return false;
    }
    return true;
  };
  std::size_t size = n;
  while (size > 0 && tail_is_identity(size)) --size;
  return size == n ? m : m.block(0, 0, size, size);
}

std::shared_ptr<const GeneralLinearGroup> GeneralLinearGroup::instance() {
  static const auto group = std::make_shared<const GeneralLinearGroup>();
  return group;
}

GeneralLinearGroup::GeneralLinearGroup() : Group("GL(Q)") {}

Element GeneralLinearGroup::element(const RationalMatrix& m) const {
  if (!m.is_square()) throw InvalidArgument("GL element must be square");
  if (!m.is_invertible()) throw SingularMatrix("matrix is singular: " + m.to_string());
  return wrap(trim_identity_block(m));
}

std::size_t GeneralLinearGroup::size(const Element& a) { return a.as<RationalMatrix>().rows(); }

RationalMatrix GeneralLinearGroup::matrix(const Element& a, std::size_t n) {
  const auto& m = a.as<RationalMatrix>();
  if (n < m.rows()) throw InvalidArgument("cannot view a matrix of size " + std::to_string(m.rows()) + " in size " +
                                          std::to_string(n));
  return m.padded(n);
}

Element GeneralLinearGroup::identity() const { return wrap(RationalMatrix()); }

Element GeneralLinearGroup::multiply(const Element& a, const Element& b) const {
  std::size_t n = std::max(size(a), size(b));
  return wrap(trim_identity_block(matrix(a, n) * matrix(b, n)));
}

Element GeneralLinearGroup::invert(const Element& a) const {
  if (size(a) == 0) return a;
  return wrap(trim_identity_block(a.as<RationalMatrix>().inverse()));
}

std::string GeneralLinearGroup::format(const Element& a) const {
  return size(a) == 0 ? "I" : a.as<RationalMatrix>().to_string();
}

RationalMatrix block_conjugate(const RationalMatrix& x, const RationalMatrix& g) {
  if (x.rows() != 2 || x.cols() != 2) throw InvalidArgument("X must be 2x2");
  if (!g.is_square() || g.rows() < 2) throw InvalidArgument("g must be square of size at least 2");
  const std::size_t n = g.rows();
  const RationalMatrix x_inv = x.inverse();
  const RationalMatrix a = g.block(0, 0, 2, 2);
  const RationalMatrix b = g.block(0, 2, 2, n - 2);
  const RationalMatrix c = g.block(2, 0, n - 2, 2);

  RationalMatrix out = g;
  auto place = [&](const RationalMatrix& blk, std::size_t r0, std::size_t c0) {
    for (std::size_t r = 0; r < blk.rows(); ++r) {
      for (std::size_t col = 0; col < blk.cols(); ++col) out.at(r0 + r, c0 + col) = blk.at(r, col);
    }
  };
  place(x * a * x_inv, 0, 0);
  if (n > 2) {
    place(x * b, 0, 2);
    place(c * x_inv, 2, 0);
  }
  return out;
}

RationalVector vectorize(const RationalMatrix& m) {
  RationalVector v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m.at(r, c));
  }
  return v;
}

RationalMatrix unvectorize(const RationalVector& v, std::size_t n) {
  if (v.size() != n * n) throw InvalidArgument("vector length is not n^2");
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < v.size(); ++i) m.at(i / n, i % n) = v[i];
  return m;
}

RationalSubspace centralizer_space(const std::vector<RationalMatrix>& generators) {
  if (generators.empty()) throw InvalidArgument("centralizer_space needs at least one generator");
  std::size_t n = 0;
  for (const auto& g : generators) {
    if (!g.is_square()) throw InvalidArgument("generators must be square");
    n = std::max(n, g.rows());
  }
  // Row (i, j) of the system for g: (Mg - gM)_ij as a linear form in M_ab.
  RationalMatrix system(generators.size() * n * n, n * n);
  std::size_t row = 0;
  for (const auto& generator : generators) {
    const RationalMatrix g = generator.padded(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j, ++row) {
        for (std::size_t k = 0; k < n; ++k) {
          system.at(row, i * n + k) += g.at(k, j);
          system.at(row, k * n + j) -= g.at(i, k);
        }
      }
    }
  }
  return RationalSubspace::span(n * n, nullspace(system));
}

std::vector<RationalMatrix> test_matrices() {
  return {RationalMatrix::from_ints({{-1, 0}, {0, 1}}), RationalMatrix::from_ints({{1, 0}, {0, -1}}),
          RationalMatrix::from_ints({{1, 0}, {1, 1}})};
}

std::vector<RationalMatrix> gl2z_generators() {
  auto gens = test_matrices();
  gens.push_back(RationalMatrix::from_ints({{0, 1}, {1, 0}}));
  return gens;
}

FgSubgroup gl_subgroup(const std::string& label, const std::vector<RationalMatrix>& generators) {
  auto group = GeneralLinearGroup::instance();
  std::vector<Element> elements;
  for (const auto& m : generators) elements.push_back(group->element(m));
  return FgSubgroup(label, group, std::move(elements));
}

RationalMatrix block_swap(std::size_t n) {
  RationalMatrix t(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    t.at(i, n + i) = 1;
    t.at(n + i, i) = 1;
  }
  return t;
}

CertifiedWitness gl_block_swap_witness(const FgSubgroup& h) {
  auto group = GeneralLinearGroup::instance();
  if (!h.group()->same_as(*group)) throw ContextMismatch(h.label() + " is not a subgroup of GL(Q)");
  std::size_t n = 1;
  for (const auto& g : h.generators()) n = std::max(n, GeneralLinearGroup::size(g));
  WitnessCertificate certificate{h, CznWitness{group->element(block_swap(n)), 2}};
  PropertyReport report = verify(certificate);
  report.facts.emplace_back("block size", std::to_string(n));
  return {std::move(certificate), std::move(report)};
}

PropertyReport scalar_action_check(const FgSubgroup& h, const RationalSubspace& v) {
  if (!h.group()->same_as(*GeneralLinearGroup::instance())) {
    throw ContextMismatch(h.label() + " is not a subgroup of GL(Q)");
  }
  PropertyReport report;
  report.property = "SCALAR-ACTION";
  report.subject = h.label();
  report.facts.emplace_back("V", v.to_string());
  report.checks.push_back("every generator preserves V");
  report.checks.push_back("every generator acts on V as a scalar");

  const std::size_t n = v.ambient();
  std::vector<RationalMatrix> matrices;
  for (const auto& g : h.generators()) {
    if (GeneralLinearGroup::size(g) > n) {
      throw InvalidArgument(g.to_string() + " does not act on Q^" + std::to_string(n));
    }
    matrices.push_back(GeneralLinearGroup::matrix(g, n));
    if (!(image(matrices.back(), v) == v)) throw InvalidArgument("V is not invariant under " + g.to_string());
  }
  for (std::size_t i = 0; i < matrices.size(); ++i) {
    if (v.dim() == 0) break;
    // Basis vectors are RREF rows, so the first pivot entry of g v equals the scalar.
    const RationalVector& first = v.basis().front();
    std::size_t pivot = 0;
    while (first[pivot] == 0) ++pivot;
    const Rational lambda = matrices[i].apply(first)[pivot];
    for (const auto& b : v.basis()) {
      RationalVector expected = b;
      for (auto& x : expected) x *= lambda;
      if (matrices[i].apply(b) != expected) {
        report.fail(h.generators()[i].to_string() + " does not act on V as a scalar");
        return report;
      }
    }
    report.facts.emplace_back("scalar of " + h.generators()[i].to_string(), to_string(lambda));
  }
  return report;
}

}  // namespace displace
