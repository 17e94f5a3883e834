#include "displace/checkers/checkers.hpp"
#include "displace/core/errors.hpp"
#include "displace/hnn/hnn.hpp"
#include "displace/linalg/gl.hpp"
#include "displace/perm/perm_group.hpp"
#include "displace/pl/pl_group.hpp"
#include "displace/pl/pl_tower.hpp"
#include "displace/wreath/wreath.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace displace;

namespace {

std::shared_ptr<const PermGroup> sym(std::size_t k) { return PermGroup::symmetric(k); }

FgSubgroup s3_in(std::size_t degree) {
  auto g = sym(degree);
  return FgSubgroup("S3", g, {g->parse("(1 2)"), g->parse("(1 2 3)")});
}

Element pl(const PLHomeo& f) { return PLGroup::instance()->element(f); }

}  // namespace

TEST_CASE("check_cc on permutations") {
  auto g = sym(6);
  const auto h = s3_in(6);
  const Element t = g->parse("(1 4)(2 5)(3 6)");
  CHECK(check_cc(h, t).passed());
  const auto bad = check_cc(h, g->parse("(3 4)"));
  CHECK(bad.failed());
  REQUIRE(bad.counterexample);
  CHECK(bad.counterexample->reverify());
  CHECK(check_cc(FgSubgroup("1", g, {}), g->parse("(1 2)")).passed());
}

TEST_CASE("check_cznc and check_czc") {
  auto g = sym(6);
  const auto h = s3_in(6);
  const Element t = g->parse("(1 4)(2 5)(3 6)");
  CHECK(check_cznc(h, t, 2).passed());
  CHECK(check_czc(h, t, 2).failed());
  CHECK(check_czc(h, t, 1).verdict == Verdict::BoundedPass);
  CHECK(check_ccc(h, t, 2, 10).passed());
  CHECK(check_ccc(h, t, std::nullopt, 3).failed());
  CHECK_THROWS_AS(check_cznc(h, t, 1), InvalidArgument);
  CHECK_THROWS_AS(check_czc(h, t, 0), InvalidArgument);
  CHECK_THROWS_AS(check_cc(h, sym(7)->parse("(1 2)")), ContextMismatch);
}

TEST_CASE("verdicts agree with brute-force closure commutation") {
  auto g = sym(6);
  const auto h = s3_in(6);
  const auto closure_h = oracle::closure({{1, 0, 2, 3, 4, 5}, {1, 2, 0, 3, 4, 5}}, 6);
  for (const auto& t : enumerate_group(*sym(6))) {
    std::vector<int> img;
    for (auto p : t.as<Permutation>().images()) img.push_back(static_cast<int>(p));
    std::set<oracle::Perm> conj;
    for (const auto& x : closure_h) conj.insert(oracle::compose(oracle::compose(img, x), oracle::inverse(img)));
    CHECK(check_cc(h, t).passed() == oracle::all_commute(closure_h, conj));
  }
}

TEST_CASE("generator subsets keep a passing witness passing") {
  auto g = sym(6);
  const auto h = s3_in(6);
  const Element t = g->parse("(1 4)(2 5)(3 6)");
  for (const auto& gen : h.generators()) {
    const FgSubgroup sub("sub", g, {gen});
    CHECK(check_cznc(sub, t, 2).passed());
    CHECK(check_cc(sub, t).passed());
  }
}

TEST_CASE("check_binate and check_mitotic") {
  auto m = HnnGroup::make_mitosis(symmetric_s3()->as_subgroup());
  const auto h = m->gamma_minus();
  const Element d = m->letter(m->letter_index("d"));
  const Element s = m->letter(m->letter_index("s"));
  GeneratorMap f;
  for (const auto& x : h.generators()) f.images.push_back(conj(s, x));
  CHECK(check_mitotic(h, s, d * s).passed());
  CHECK(check_binate(h, f, d).passed());
  CHECK(check_binate(h, f, d * s).failed());
  CHECK(check_mitotic(h, s, s).failed());
  GeneratorMap short_map;
  CHECK_THROWS_AS(check_binate(h, short_map, d), InvalidArgument);
  // Relators of S3 on (1 2), (1 2 3).
  const std::vector<Relator> rel = {{{1, 1}}, {{2, 2, 2}}, {{1, 2, 1, 2}}};
  CHECK(check_binate(h, f, d, rel).passed());
  CHECK_THROWS_AS(check_binate(h, f, d, {{{3}}}), InvalidArgument);
}

TEST_CASE("check_dissipator") {
  const auto tower = tower_gamma(2);
  const FgSubgroup sample("Gamma_1", PLGroup::instance(),
                          {pl(tower.base_generators[0]), pl(tower.base_generators[1])});
  const IntervalSet unit = IntervalSet::single(0, 1);
  CHECK(check_dissipator(unit, pl(tower.dissipator(2)), sample, 10).passed());
  CHECK(check_dissipator(unit, pl(tower.base_generators[0]), sample, 10).failed());
  CHECK_THROWS_AS(check_dissipator(unit, pl(tower.dissipator(2)), sample, 0), InvalidArgument);
}

TEST_CASE("check_M and the derived czc witness") {
  auto g = sym(4);
  const FgSubgroup lambda("L", g, {g->parse("(1 2)")});
  const Element t0 = g->parse("(1 3)(2 4)");
  const Element s = g->parse("(2 3)");
  const FgSubgroup h("H", g, {g->parse("(1 3)")});
  const auto oracle = finite_membership(lambda);
  CHECK(oracle.contains(g->parse("(1 2)")));
  CHECK_FALSE(oracle.contains(g->parse("(1 3)")));
  const auto report = check_M(lambda, t0, h.generators(), s, 10, oracle);
  CHECK(report.passed());
  CHECK(check_M(lambda, t0, {g->parse("(1 4)")}, s, 10, oracle).failed());
  CHECK_THROWS_AS(check_M(lambda, t0, h.generators(), s, 10, std::nullopt), OracleUnavailable);
  const WitnessCertificate cert{h, MWitness{lambda, t0, h.generators(), s, 10, oracle}};
  CHECK(verify(cert).passed());
  const auto derived = derive_czc_from_M(cert, h, s);
  CHECK(derived.report.passed());
  CHECK(verify(derived.certificate).passed());
  CHECK(std::get<CzWitness>(derived.certificate.witness).t == conj(s, t0));
}

TEST_CASE("witness operations re-verify") {
  TowerSpec spec;
  spec.base = symmetric_s3();
  spec.prefix = {2, 2, 2, 2};
  const Tower tower(spec, 4);
  for (std::size_t i = 1; i <= 4; ++i) {
    const auto w = zn_witness(tower, tower.level_generators(i - 1), i - 1, i, 2);
    CHECK(w.report.passed());
    CHECK(verify(w.certificate).passed());
  }
  for (std::int64_t n : {2, 3, 4}) {
    const auto w = sym_zn_witness(symmetric_s3()->as_subgroup(), n);
    CHECK(w.report.passed());
    CHECK(verify(w.certificate).passed());
  }
  const auto gl = gl_block_swap_witness(gl_subgroup("GL2(Z)", gl2z_generators()));
  CHECK(gl.report.passed());
  CHECK(verify(gl.certificate).passed());
  auto g6 = sym(6);
  const WitnessCertificate first{s3_in(6), CcWitness{g6->parse("(1 4)(2 5)(3 6)")}};
  const auto gl_t = std::get<CznWitness>(gl.certificate.witness).t;
  const WitnessCertificate second{gl.certificate.subject, CcWitness{gl_t}};
  const auto product = product_cc_witness(first, second);
  CHECK(product.report.passed());
  CHECK(verify(product.certificate).passed());
}

TEST_CASE("verify rejects a tampered witness") {
  auto w = sym_zn_witness(symmetric_s3()->as_subgroup(), 3);
  auto& payload = std::get<CznWitness>(w.certificate.witness);
  payload.t = w.certificate.subject.group()->identity();
  CHECK(verify(w.certificate).failed());
}

TEST_CASE("property names round trip") {
  for (auto p : {Property::CC, Property::CCC, Property::CZC, Property::CZNC, Property::M, Property::Binate,
                 Property::Mitotic, Property::Dissipator}) {
    CHECK(parse_property(to_string(p)) == p);
  }
  CHECK_THROWS_AS(parse_property("nope"), ParseError);
}

TEST_CASE("reports are deterministic") {
  auto g = sym(6);
  const auto a = check_cc(s3_in(6), g->parse("(3 4)"));
  const auto b = check_cc(s3_in(6), g->parse("(3 4)"));
  CHECK(a.verdict == b.verdict);
  CHECK(a.failed_condition == b.failed_condition);
  CHECK(a.counterexample->first == b.counterexample->first);
  CHECK(a.counterexample->second == b.counterexample->second);
}
