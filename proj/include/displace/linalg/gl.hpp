#pragma once

#include <memory>
#include <vector>

#include "displace/checkers/certificate.hpp"
#include "displace/core/element.hpp"
#include "displace/core/group_ops.hpp"
#include "displace/linalg/rational_matrix.hpp"
#include "displace/linalg/subspace.hpp"

namespace displace {

/// GL(Q) as the directed union of the GL_n(Q): a matrix of size n is
/// identified with its padding a ⊕ I in every larger size. Elements are
/// stored trimmed (the trailing identity block removed), so the identity is
/// the empty matrix.
class GeneralLinearGroup final : public Group {
 public:
  static std::shared_ptr<const GeneralLinearGroup> instance();

  /// Throws SingularMatrix for non-invertible input.
  Element element(const RationalMatrix& m) const;

  /// The matrix of `a` padded to size n (n must be at least its trimmed size).
  static RationalMatrix matrix(const Element& a, std::size_t n);
  static std::size_t size(const Element& a);

  Element identity() const override;
  Element multiply(const Element& a, const Element& b) const override;
  Element invert(const Element& a) const override;
  std::string format(const Element& a) const override;

  GeneralLinearGroup();
};

/// Smallest-size representative: drops trailing rows and columns on which
/// the matrix agrees with the identity.
RationalMatrix trim_identity_block(const RationalMatrix& m);

/// (X ⊕ I) g (X^-1 ⊕ I) for a 2x2 matrix X, computed blockwise:
/// [[A, B], [C, D]] maps to [[X A X^-1, X B], [C X^-1, D]].
RationalMatrix block_conjugate(const RationalMatrix& x, const RationalMatrix& g);

/// {M : M g = g M for every g}, as a subspace of M_n ≅ Q^(n*n) (row-major
/// coordinates). Generators of different sizes are padded to the largest.
RationalSubspace centralizer_space(const std::vector<RationalMatrix>& generators);

/// Row-major vector of an n x n matrix and back.
RationalVector vectorize(const RationalMatrix& m);
RationalMatrix unvectorize(const RationalVector& v, std::size_t n);

/// diag(-1, 1), diag(1, -1) and the lower unitriangular [[1, 0], [1, 1]].
std::vector<RationalMatrix> test_matrices();

/// The test matrices together with [[0, 1], [1, 0]]; stands for a copy of
/// GL_2(Z) in the checkers, which only ever use generators.
std::vector<RationalMatrix> gl2z_generators();

FgSubgroup gl_subgroup(const std::string& label, const std::vector<RationalMatrix>& generators);

/// [[0, I_n], [I_n, 0]].
RationalMatrix block_swap(std::size_t n);

/// Z/2-conjugates witness for H ≤ GL_n: the block swap t in GL_2n, checked
/// with check_cznc at n = 2.
CertifiedWitness gl_block_swap_witness(const FgSubgroup& h);

/// Pass iff every generator acts on V by a scalar; the scalars are listed in
/// the report facts. Throws InvalidArgument when V is not invariant.
PropertyReport scalar_action_check(const FgSubgroup& h, const RationalSubspace& v);

}  // namespace displace
