#include "displace/checkers/checkers.hpp"
#include "displace/perm/perm_group.hpp"
#include "suite_util.hpp"

namespace displace::suites {

namespace {

WitnessCertificate transposition_cc() {
  auto sym4 = PermGroup::symmetric(4);
  return {FgSubgroup("<(1 2)>", sym4, {sym4->parse("(1 2)")}), CcWitness{sym4->parse("(1 3)(2 4)")}};
}

WitnessCertificate s3_in_sym6_cc(const std::string& t) {
  auto sym6 = PermGroup::symmetric(6);
  return {FgSubgroup("S3", sym6, {sym6->parse("(1 2)"), sym6->parse("(1 2 3)")}), CcWitness{sym6->parse(t)}};
}

}  // namespace

Suite product_cc_suite() {
  Suite suite{"product-cc", "H1 x H2 has commuting conjugates in G1 x G2 because each factor does", {}};
  suite.checks.push_back(check("sym4-sym6", "<(1 2)> in Sym(4) times S3 in Sym(6)", Verdict::Pass,
                               [](const RunOptions&) {
                                 return product_cc_witness(transposition_cc(), s3_in_sym6_cc("(1 4)(2 5)(3 6)")).report;
                               }));
  suite.checks.push_back(check("failing-factor", "a factor with t = 1 on non-abelian S3 is rejected", Verdict::Fail,
                               [](const RunOptions&) {
                                 return precondition("CC", "<(1 2)> x S3", [] {
                                   product_cc_witness(transposition_cc(), s3_in_sym6_cc("()"));
                                 });
                               }));
  suite.checks.push_back(check("trivial-second", "H2 = 1 reduces to the first factor", Verdict::Pass,
                               [](const RunOptions&) {
                                 auto sym3 = symmetric_s3();
                                 const WitnessCertificate trivial{FgSubgroup("1", sym3, {}), CcWitness{sym3->identity()}};
                                 auto product = product_cc_witness(transposition_cc(), trivial);
                                 const PropertyReport first = verify(transposition_cc());
                                 return expect(product.report, first.passed() == product.report.passed(),
                                               "product verdict differs from the first factor");
                               }));
  suite.checks.push_back(check("components", "the product witness is (t1, t2) and re-verifies", Verdict::Pass,
                               [](const RunOptions&) {
                                 auto product = product_cc_witness(transposition_cc(), s3_in_sym6_cc("(1 4)(2 5)(3 6)"));
                                 const auto& t = std::get<CcWitness>(product.certificate.witness).t;
                                 const auto& parts = t.as<ProductElement>().components;
                                 const bool ok = parts.size() == 2 &&
                                                 parts[0] == std::get<CcWitness>(transposition_cc().witness).t &&
                                                 verify(product.certificate).passed();
                                 return expect(verify(product.certificate), ok, "witness components differ");
                               }));
  return suite;
}

}  // namespace displace::suites
