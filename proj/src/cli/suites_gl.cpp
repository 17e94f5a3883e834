#include "displace/checkers/checkers.hpp"
#include "displace/linalg/gl.hpp"
#include "suite_util.hpp"

namespace displace::suites {

namespace {

Rational random_rational(Rng& rng) {
  const long num = static_cast<long>(uniform_index(rng, 11)) - 5;
  const long den = static_cast<long>(uniform_index(rng, 3)) + 1;
  return make_rational(num, den);
}

RationalMatrix random_invertible(Rng& rng, std::size_t n) {
  for (;;) {
    RationalMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) m.at(r, c) = random_rational(rng);
    }
    if (m.is_invertible()) return m;
  }
}

RationalSubspace random_subspace(Rng& rng, std::size_t ambient) {
  std::vector<RationalVector> vectors(uniform_index(rng, ambient + 1));
  for (auto& v : vectors) {
    v.resize(ambient);
    for (auto& x : v) x = uniform_index(rng, 3) == 0 ? random_rational(rng) : Rational(0);
  }
  return RationalSubspace::span(ambient, vectors);
}

std::vector<RationalMatrix> padded(const std::vector<RationalMatrix>& ms, std::size_t n) {
  std::vector<RationalMatrix> out;
  for (const auto& m : ms) out.push_back(m.padded(n));
  return out;
}

bool has_scalar_plus_block_shape(const RationalMatrix& m) {
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 2; c < 4; ++c) {
      if (m.at(r, c) != 0 || m.at(c, r) != 0) return false;
    }
  }
  return m.at(0, 1) == 0 && m.at(1, 0) == 0 && m.at(0, 0) == m.at(1, 1);
}

}  // namespace

Suite gl_block_suite() {
  Suite suite{"gl-block", "(X + I) g (X^-1 + I) = [[X A X^-1, X B], [C X^-1, D]] by exact block multiplication", {}};
  suite.checks.push_back(check("random-200", "block formula equals full conjugation on 200 random GL_4(Q) inputs",
                               Verdict::Pass, [](const RunOptions& o) {
                                 Rng rng(o.seed);
                                 auto gl = GeneralLinearGroup::instance();
                                 PropertyReport r = report("BLOCK-CONJUGATION", "GL_4(Q)");
                                 r.checks.push_back("block_conjugate(X, g) = (X + I) g (X^-1 + I)");
                                 r.checks.push_back("agrees with conj in the GL(Q) context");
                                 for (int i = 0; i < 200; ++i) {
                                   const RationalMatrix x = random_invertible(rng, 2);
                                   const RationalMatrix g = random_invertible(rng, 4);
                                   const RationalMatrix blockwise = block_conjugate(x, g);
                                   const RationalMatrix full = x.padded(4) * g * x.inverse().padded(4);
                                   if (!(blockwise == full) ||
                                       !(gl->element(blockwise) == conj(gl->element(x), gl->element(g)))) {
                                     r.fail("mismatch for X = " + x.to_string() + ", g = " + g.to_string());
                                     return r;
                                   }
                                 }
                                 r.facts.emplace_back("samples", "200");
                                 return r;
                               }));
  suite.checks.push_back(check("identity-x", "X = I leaves g unchanged", Verdict::Pass, [](const RunOptions& o) {
    Rng rng(o.seed + 1);
    const RationalMatrix g = random_invertible(rng, 4);
    return expect(report("BLOCK-CONJUGATION", "X = I"), block_conjugate(RationalMatrix::identity(2), g) == g,
                  "X = I changed g");
  }));
  suite.checks.push_back(check("identity-g", "X = diag(-1, 1), g = I_4 gives I_4", Verdict::Pass,
                               [](const RunOptions&) {
                                 return expect(report("BLOCK-CONJUGATION", "g = I_4"),
                                               block_conjugate(test_matrices()[0], RationalMatrix::identity(4)) ==
                                                   RationalMatrix::identity(4),
                                               "identity not central");
                               }));
  return suite;
}

Suite gl_centralizer_suite() {
  Suite suite{"gl-centralizer", "centralizer of the test matrices is {a I_2 + D}; substeps of the GL(R) argument", {}};
  suite.checks.push_back(check("test-matrices-dim5", "centralizer of the three test matrices in M_4 is a I_2 + D",
                               Verdict::Pass, [](const RunOptions&) {
                                 const RationalSubspace c = centralizer_space(padded(test_matrices(), 4));
                                 PropertyReport r = report("CENTRALIZER", "test matrices in M_4");
                                 r.facts.emplace_back("dimension", std::to_string(c.dim()));
                                 r.checks.push_back("dimension is 5");
                                 r.checks.push_back("every basis element has the block shape a I_2 + D");
                                 if (c.dim() != 5) r.fail("dimension " + std::to_string(c.dim()));
                                 for (const auto& v : c.basis()) {
                                   if (!has_scalar_plus_block_shape(unvectorize(v, 4))) {
                                     r.fail("basis element " + unvectorize(v, 4).to_string() + " has the wrong shape");
                                   }
                                 }
                                 return r;
                               }));
  suite.checks.push_back(check("identity-full", "centralizer of {I_4} is all of M_4", Verdict::Pass,
                               [](const RunOptions&) {
                                 const auto c = centralizer_space({RationalMatrix::identity(4)});
                                 return expect(report("CENTRALIZER", "{I_4}"), c.dim() == 16,
                                               "dimension " + std::to_string(c.dim()));
                               }));
  suite.checks.push_back(check("gl2z-scalars", "centralizer of the GL_2(Z) generators is the scalars",
                               Verdict::Pass, [](const RunOptions&) {
                                 const auto c = centralizer_space(gl2z_generators());
                                 const bool scalar = c.dim() == 1 && unvectorize(c.basis()[0], 2).is_identity();
                                 return expect(report("CENTRALIZER", "GL_2(Z) generators"), scalar,
                                               "centralizer " + c.to_string());
                               }));
  suite.checks.push_back(check("scalar-on-complement", "test matrices act on span(e3, e4) by 1", Verdict::Pass,
                               [](const RunOptions&) {
                                 return scalar_action_check(gl_subgroup("test matrices", test_matrices()),
                                                            RationalSubspace::coordinate(4, {3, 4}));
                               }));
  suite.checks.push_back(check("gl2z-not-scalar", "GL_2(Z) does not act on span(e1, e2) by scalars", Verdict::Fail,
                               [](const RunOptions&) {
                                 return scalar_action_check(gl_subgroup("GL_2(Z)", gl2z_generators()),
                                                            RationalSubspace::coordinate(2, {1, 2}));
                               }));
  suite.checks.push_back(check("minus-identity", "-I_2 acts on span(e1, e2) by -1", Verdict::Pass,
                               [](const RunOptions&) {
                                 return scalar_action_check(
                                     gl_subgroup("<-I_2>", {RationalMatrix::from_ints({{-1, 0}, {0, -1}})}),
                                     RationalSubspace::coordinate(2, {1, 2}));
                               }));
  suite.checks.push_back(check("swap-intersection", "span(e1, e2) meets its image under the block swap in 0",
                               Verdict::Pass, [](const RunOptions&) {
                                 const auto u = RationalSubspace::coordinate(4, {1, 2});
                                 const auto meet = subspace_intersection(u, image(block_swap(2), u));
                                 PropertyReport r = report("INTERSECTION", "R^2 and t R^2 in Q^4");
                                 r.facts.emplace_back("dimension", std::to_string(meet.dim()));
                                 return expect(r, meet.dim() == 0, "nonzero intersection");
                               }));
  suite.checks.push_back(check("basic-intersections", "span(e1,e2) ∩ span(e1,e3) = span(e1) and U ∩ U = U",
                               Verdict::Pass, [](const RunOptions&) {
                                 const auto a = RationalSubspace::coordinate(3, {1, 2});
                                 const auto b = RationalSubspace::coordinate(3, {1, 3});
                                 const bool ok = subspace_intersection(a, b) == RationalSubspace::coordinate(3, {1}) &&
                                                 subspace_intersection(a, a) == a;
                                 return expect(report("INTERSECTION", "coordinate subspaces of Q^3"), ok,
                                               "wrong intersection");
                               }));
  suite.checks.push_back(check("dimension-formula", "dim(U ∩ V) + dim(U + V) = dim U + dim V on 100 random pairs",
                               Verdict::Pass, [](const RunOptions& o) {
                                 Rng rng(o.seed + 2);
                                 PropertyReport r = report("DIMENSION-FORMULA", "random subspaces of Q^5");
                                 for (int i = 0; i < 100; ++i) {
                                   const auto u = random_subspace(rng, 5);
                                   const auto v = random_subspace(rng, 5);
                                   if (subspace_intersection(u, v).dim() + subspace_sum(u, v).dim() != u.dim() + v.dim()) {
                                     r.fail("formula fails for U = " + u.to_string() + ", V = " + v.to_string());
                                     return r;
                                   }
                                 }
                                 r.facts.emplace_back("pairs", "100");
                                 return r;
                               }));
  return suite;
}

Suite gl_z2_suite() {
  Suite suite{"gl-z2", "block swap t = [[0, I], [I, 0]] gives commuting Z/2-conjugates in GL(Q)", {}};
  suite.checks.push_back(check("block-swap-gl2z", "block swap is a Z/2 witness for GL_2(Z)", Verdict::Pass,
                               [](const RunOptions&) {
                                 return gl_block_swap_witness(gl_subgroup("GL_2(Z)", gl2z_generators())).report;
                               }));
  suite.checks.push_back(check("t-squared", "t^2 = I_4", Verdict::Pass, [](const RunOptions&) {
    auto gl = GeneralLinearGroup::instance();
    const Element t = gl->element(block_swap(2));
    return expect(report("INVOLUTION", "block swap"), power(t, 2).is_identity(), "t^2 != 1");
  }));
  suite.checks.push_back(check("czc-fails-at-2", "the same t is not a Z-witness: fails at p = 2", Verdict::Fail,
                               [](const RunOptions&) {
                                 auto w = gl_block_swap_witness(gl_subgroup("GL_2(Z)", gl2z_generators()));
                                 return check_czc(w.certificate.subject, std::get<CznWitness>(w.certificate.witness).t, 2);
                               }));
  suite.checks.push_back(check("trivial", "trivial H passes vacuously", Verdict::Pass, [](const RunOptions&) {
    return gl_block_swap_witness(FgSubgroup("1", GeneralLinearGroup::instance(), {})).report;
  }));
  suite.checks.push_back(check("random-swap-shape", "t = [[0, P], [P^-1, 0]] for 50 random P are Z/2 witnesses",
                               Verdict::Pass, [](const RunOptions& o) {
                                 Rng rng(o.seed + 3);
                                 auto gl = GeneralLinearGroup::instance();
                                 const FgSubgroup h = gl_subgroup("GL_2(Z)", gl2z_generators());
                                 PropertyReport r = report("CZNC", "GL_2(Z), random block-swap shapes");
                                 for (int i = 0; i < 50; ++i) {
                                   const RationalMatrix p = random_invertible(rng, 2);
                                   const RationalMatrix q = p.inverse();
                                   RationalMatrix t(4, 4);
                                   for (std::size_t a = 0; a < 2; ++a) {
                                     for (std::size_t b = 0; b < 2; ++b) {
                                       t.at(a, 2 + b) = p.at(a, b);
                                       t.at(2 + a, b) = q.at(a, b);
                                     }
                                   }
                                   PropertyReport one = check_cznc(h, gl->element(t), 2);
                                   if (one.failed()) {
                                     r.fail("P = " + p.to_string() + ": " + one.failed_condition, one.counterexample);
                                     return r;
                                   }
                                 }
                                 r.facts.emplace_back("samples", "50");
                                 return r;
                               }));
  return suite;
}

}  // namespace displace::suites
