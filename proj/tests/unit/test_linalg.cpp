#include "displace/checkers/checkers.hpp"
#include "displace/core/errors.hpp"
#include "displace/linalg/gl.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace displace;

TEST_CASE("determinant, inverse and rank") {
  const auto m = RationalMatrix::from_ints({{2, 1}, {7, 4}});
  CHECK(m.determinant() == 1);
  CHECK((m * m.inverse()).is_identity());
  CHECK(rank(RationalMatrix::from_ints({{1, 2}, {2, 4}})) == 1);
  CHECK(nullspace(RationalMatrix::from_ints({{1, 2}, {2, 4}})).size() == 1);
  CHECK_THROWS_AS(RationalMatrix::from_ints({{1, 2}, {2, 4}}).inverse(), SingularMatrix);
  CHECK(RationalMatrix::direct_sum(m, RationalMatrix::identity(1)) == m.padded(3));
}

TEST_CASE("subspaces: sum, intersection, containment") {
  const auto a = RationalSubspace::coordinate(4, {1, 2});
  const auto b = RationalSubspace::coordinate(4, {2, 3});
  CHECK(subspace_intersection(a, b) == RationalSubspace::coordinate(4, {2}));
  CHECK(subspace_sum(a, b).dim() == 3);
  CHECK(subspace_sum(a, b).contains(a));
  CHECK(RationalSubspace::whole(3).dim() == 3);
  CHECK(image(block_swap(2), a) == RationalSubspace::coordinate(4, {3, 4}));
}

TEST_CASE("block conjugation examples") {
  const auto x = test_matrices()[2];
  const auto g = RationalMatrix::from_ints({{1, 2, 0, 1}, {0, 1, 3, 0}, {1, 0, 1, 0}, {0, 0, 2, 1}});
  CHECK(block_conjugate(x, g) == x.padded(4) * g * x.inverse().padded(4));
  CHECK(block_conjugate(RationalMatrix::identity(2), g) == g);
  CHECK(block_conjugate(test_matrices()[0], RationalMatrix::identity(4)) == RationalMatrix::identity(4));
  CHECK_THROWS(block_conjugate(RationalMatrix::from_ints({{1, 1}, {1, 1}}), g));
}

TEST_CASE("centralizer dimensions agree with an elimination oracle") {
  const auto padded = [](std::vector<RationalMatrix> ms, std::size_t n) {
    for (auto& m : ms) m = m.padded(n);
    return ms;
  };
  const std::vector<std::vector<std::vector<long>>> test4 = {
      {{-1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}},
      {{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}},
      {{1, 0, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}};
  const std::size_t oracle_dim = oracle::centralizer_dimension(test4);
  CHECK(oracle_dim == 5);
  CHECK(centralizer_space(padded(test_matrices(), 4)).dim() == oracle_dim);
  CHECK(centralizer_space({RationalMatrix::identity(4)}).dim() ==
        oracle::centralizer_dimension({{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}}));
  CHECK(centralizer_space(gl2z_generators()).dim() ==
        oracle::centralizer_dimension({{{-1, 0}, {0, 1}}, {{1, 0}, {0, -1}}, {{1, 0}, {1, 1}}, {{0, 1}, {1, 0}}}));
  const auto v = vectorize(test_matrices()[2]);
  CHECK(unvectorize(v, 2) == test_matrices()[2]);
}

TEST_CASE("GL(Q) elements ignore trailing identity blocks") {
  auto gl = GeneralLinearGroup::instance();
  const auto a = gl->element(test_matrices()[0]);
  CHECK(a == gl->element(test_matrices()[0].padded(5)));
  CHECK(gl->element(RationalMatrix::identity(3)).is_identity());
  CHECK(GeneralLinearGroup::size(a) == 1);
  CHECK(GeneralLinearGroup::matrix(a, 3) == test_matrices()[0].padded(3));
  CHECK(trim_identity_block(RationalMatrix::identity(4)).rows() == 0);
  CHECK_THROWS_AS(gl->element(RationalMatrix::from_ints({{1, 1}, {1, 1}})), SingularMatrix);
  // Mixed sizes multiply as if padded.
  const auto b = gl->element(block_swap(2));
  CHECK(GeneralLinearGroup::matrix(a * b, 4) == test_matrices()[0].padded(4) * block_swap(2));
}

TEST_CASE("block swap witness and the p = 2 failure") {
  const auto h = gl_subgroup("GL_2(Z)", gl2z_generators());
  const auto w = gl_block_swap_witness(h);
  CHECK(w.report.verdict == Verdict::Pass);
  CHECK(verify(w.certificate).verdict == Verdict::Pass);
  const auto t = std::get<CznWitness>(w.certificate.witness).t;
  CHECK(check_czc(h, t, 2).failed());
  CHECK(check_czc(h, t, 1).verdict == Verdict::BoundedPass);
}

TEST_CASE("scalar action check") {
  CHECK(scalar_action_check(gl_subgroup("T", test_matrices()), RationalSubspace::coordinate(4, {3, 4})).passed());
  CHECK(scalar_action_check(gl_subgroup("Z", gl2z_generators()), RationalSubspace::coordinate(2, {1, 2})).failed());
  CHECK_THROWS_AS(scalar_action_check(gl_subgroup("Z", gl2z_generators()), RationalSubspace::coordinate(2, {1})),
                  InvalidArgument);
}
