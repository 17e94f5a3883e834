#include <set>

#include "displace/checkers/checkers.hpp"
#include "displace/perm/perm_group.hpp"
#include "displace/wreath/wreath.hpp"
#include "suite_util.hpp"

namespace displace::suites {

namespace {

TowerSpec s3_spec(TowerSpec::Rule rule, std::vector<std::int64_t> prefix, std::int64_t constant = 2,
                  std::vector<std::int64_t> primes = {}) {
  TowerSpec spec;
  spec.base = symmetric_s3();
  spec.rule = rule;
  spec.prefix = std::move(prefix);
  spec.constant = constant;
  spec.primes = std::move(primes);
  return spec;
}

FgSubgroup s3_in_wreath(std::int64_t n) {
  Tower tower(s3_spec(TowerSpec::Rule::Constant, {}, n), 1);
  return tower.embed(symmetric_s3()->as_subgroup(), 0, 1);
}

PropertyReport search_report(const Group& g, const FgSubgroup& h, std::int64_t p, const RunOptions& options,
                             const std::optional<Element>& expected_hit) {
  PropertyReport r = report("ZP-WITNESS-SEARCH", h.label() + " in " + g.descriptor());
  r.facts.emplace_back("p", std::to_string(p));
  r.facts.emplace_back("searched", std::to_string(*g.order()));
  r.checks.push_back("exhaustive search over all elements in canonical order");
  auto hit = brute_search_zp_witness(g, h, p, options.jobs, options.budget);
  if (!hit) {
    r.fail("no element satisfies the Z/" + std::to_string(p) + "-conjugate conditions");
    return r;
  }
  r.facts.emplace_back("witness", hit->to_string());
  if (expected_hit && !(*hit == *expected_hit)) {
    r.fail("first witness " + hit->to_string() + " differs from " + expected_hit->to_string());
  }
  return r;
}

}  // namespace

Suite wreath_cznc_suite() {
  Suite suite{"wreath-cznc", "t^k from the top Z/n_i gives commuting Z/p-conjugates when n_i = kp", {}};
  for (std::size_t i = 1; i <= 4; ++i) {
    suite.checks.push_back(check("level-" + std::to_string(i),
                                 "S3 tower n = (2,2,2,2): shift of level " + std::to_string(i) +
                                     " is a Z/2 witness for Gamma_" + std::to_string(i - 1),
                                 Verdict::Pass, [i](const RunOptions&) {
                                   Tower tower(s3_spec(TowerSpec::Rule::Explicit, {2, 2, 2, 2}), 4);
                                   return zn_witness(tower, tower.level_generators(i - 1), i - 1, i, 2).report;
                                 }));
  }
  suite.checks.push_back(check("n4-k2", "n_1 = 4, p = 2: t = shift^2 is a Z/2 witness for S3", Verdict::Pass,
                               [](const RunOptions&) {
                                 Tower tower(s3_spec(TowerSpec::Rule::Constant, {}, 4), 1);
                                 return zn_witness(tower, tower.level_generators(0), 0, 1, 2).report;
                               }));
  suite.checks.push_back(check("p3-n4-rejected", "p = 3 does not divide n_1 = 4", Verdict::Fail,
                               [](const RunOptions&) {
                                 return precondition("ZN-WITNESS", "S3 wr Z/4", [] {
                                   Tower tower(s3_spec(TowerSpec::Rule::Constant, {}, 4), 1);
                                   zn_witness(tower, tower.level_generators(0), 0, 1, 3);
                                 });
                               }));
  suite.checks.push_back(check("identity-not-witness", "t = 1 fails for non-abelian S3", Verdict::Fail,
                               [](const RunOptions&) {
                                 FgSubgroup h = s3_in_wreath(2);
                                 return check_cznc(h, h.group()->identity(), 2);
                               }));
  return suite;
}

Suite wreath_converse_suite() {
  Suite suite{"wreath-converse", "exhaustive finite-level converse: no Z/p witness when p does not divide n_i", {}};
  suite.checks.push_back(check("s3-wr-z3-no-z2-witness", "no element of S3 wr Z/3 is a Z/2 witness for S3",
                               Verdict::Fail, [](const RunOptions& o) {
                                 FgSubgroup h = s3_in_wreath(3);
                                 return search_report(*h.group(), h, 2, o, std::nullopt);
                               }));
  suite.checks.push_back(check("s3-wr-z2-shift", "the first Z/2 witness in S3 wr Z/2 is the shift generator",
                               Verdict::Pass, [](const RunOptions& o) {
                                 FgSubgroup h = s3_in_wreath(2);
                                 const auto& w = static_cast<const WreathGroup&>(*h.group());
                                 return search_report(w, h, 2, o, w.shift_generator());
                               }));
  suite.checks.push_back(check("abelian-identity", "abelian <(1 2)> is served by t = 1", Verdict::Pass,
                               [](const RunOptions& o) {
                                 auto s3 = symmetric_s3();
                                 Tower tower(s3_spec(TowerSpec::Rule::Constant, {}, 2), 1);
                                 FgSubgroup h("<(1 2)>", tower.level(1), {tower.embed(s3->parse("(1 2)"), 0, 1)});
                                 return search_report(*h.group(), h, 2, o, h.group()->identity());
                               }));
  suite.checks.push_back(check("orders", "|S3 wr Z/n| = 6^n n by enumeration for n = 2, 3, 4", Verdict::Pass,
                               [](const RunOptions& o) {
                                 PropertyReport r = report("WREATH-ORDER", "S3 wr Z/n");
                                 for (std::int64_t n : {2, 3, 4}) {
                                   auto g = WreathGroup::make(symmetric_s3(), n);
                                   std::set<std::string> seen;
                                   for (const auto& x : enumerate_group(*g, o.budget)) seen.insert(x.to_string());
                                   std::uint64_t expected = static_cast<std::uint64_t>(n);
                                   for (std::int64_t i = 0; i < n; ++i) expected *= 6;
                                   r.facts.emplace_back("n = " + std::to_string(n), std::to_string(seen.size()));
                                   r.checks.push_back("distinct elements of S3 wr Z/" + std::to_string(n));
                                   if (seen.size() != expected) r.fail("wrong order for n = " + std::to_string(n));
                                 }
                                 return r;
                               }));
  return suite;
}

Suite torsion_suite() {
  Suite suite{"torsion", "non-abelian torsion groups have no commuting Z-conjugates", {}};
  suite.checks.push_back(check("exhaustive-s3-wr-z3", "check_czc(S3, t, ord(t)) fails for every t in S3 wr Z/3",
                               Verdict::Pass, [](const RunOptions& o) {
                                 FgSubgroup h = s3_in_wreath(3);
                                 PropertyReport r = report("TORSION-EXHAUSTIVE", h.label() + " in " +
                                                                                     h.group()->descriptor());
                                 std::size_t count = 0;
                                 for (const auto& t : enumerate_group(*h.group(), o.budget)) {
                                   const auto q = order_of(t);
                                   if (!check_czc(h, t, static_cast<std::int64_t>(*q)).failed()) {
                                     r.fail("check_czc passed for t = " + t.to_string());
                                     return r;
                                   }
                                   ++count;
                                 }
                                 r.checks.push_back("check_czc fails at p <= ord(t) for all elements");
                                 r.facts.emplace_back("elements", std::to_string(count));
                                 return r;
                               }));
  suite.checks.push_back(check("shift-generator", "shift of order 3 fails at p = 3", Verdict::Pass,
                               [](const RunOptions&) {
                                 FgSubgroup h = s3_in_wreath(3);
                                 return torsion_obstruction_check(
                                     h, static_cast<const WreathGroup&>(*h.group()).shift_generator());
                               }));
  suite.checks.push_back(check("abelian-not-applicable", "abelian H has no obstruction", Verdict::NotApplicable,
                               [](const RunOptions&) {
                                 auto s3 = symmetric_s3();
                                 FgSubgroup h("<(1 2 3)>", s3, {s3->parse("(1 2 3)")});
                                 return torsion_obstruction_check(h, s3->parse("(1 2)"));
                               }));
  suite.checks.push_back(check("identity", "t = 1 fails at p = 1", Verdict::Pass, [](const RunOptions&) {
    FgSubgroup h = s3_in_wreath(3);
    return torsion_obstruction_check(h, h.group()->identity());
  }));
  return suite;
}

Suite hall_analogue_suite() {
  Suite suite{"hall-analogue", "H wr Z/n inside Sym(kn): block cycles give commuting Z/n-conjugates", {}};
  for (std::int64_t n : {2, 3, 4}) {
    suite.checks.push_back(check("s3-n" + std::to_string(n), "S3 in Sym(3), n = " + std::to_string(n),
                                 Verdict::Pass,
                                 [n](const RunOptions&) { return sym_zn_witness(symmetric_s3()->as_subgroup(), n).report; }));
  }
  suite.checks.push_back(check("s3-n3-shape", "n = 3 gives t = (1 4 7)(2 5 8)(3 6 9) with t^3 = 1", Verdict::Pass,
                               [](const RunOptions&) {
                                 auto w = sym_zn_witness(symmetric_s3()->as_subgroup(), 3);
                                 const Element& t = std::get<CznWitness>(w.certificate.witness).t;
                                 PropertyReport r = report("WITNESS-SHAPE", "S3 in Sym(9)");
                                 r.facts.emplace_back("t", t.to_string());
                                 r.checks.push_back("cycle form and t^3 = 1");
                                 return expect(r, t.to_string() == "(1 4 7)(2 5 8)(3 6 9)" && power(t, 3).is_identity(),
                                               "unexpected witness " + t.to_string());
                               }));
  suite.checks.push_back(check("transposition-n2", "<(1 2)> in Sym(2), n = 2 gives t = (1 3)(2 4)", Verdict::Pass,
                               [](const RunOptions&) {
                                 auto s2 = PermGroup::symmetric(2);
                                 auto w = sym_zn_witness(FgSubgroup("<(1 2)>", s2, {s2->parse("(1 2)")}), 2);
                                 const Element& t = std::get<CznWitness>(w.certificate.witness).t;
                                 w.report.facts.emplace_back("t", t.to_string());
                                 return expect(w.report, t.to_string() == "(1 3)(2 4)", "unexpected witness");
                               }));
  suite.checks.push_back(check("trivial", "trivial H passes vacuously", Verdict::Pass, [](const RunOptions&) {
    return sym_zn_witness(FgSubgroup("1", symmetric_s3(), {}), 2).report;
  }));
  return suite;
}

Suite prime_towers_suite() {
  Suite suite{"prime-towers", "prime-set towers: Z/p witnesses exist exactly for p dividing some n_i", {}};
  const std::vector<std::pair<std::int64_t, std::size_t>> cases = {{2, 1}, {3, 2}, {2, 3}};
  for (const auto& [p, level] : cases) {
    suite.checks.push_back(check("products-p" + std::to_string(p) + "-level" + std::to_string(level),
                                 "P = {2, 3}: Z/" + std::to_string(p) + " witness at level " + std::to_string(level),
                                 Verdict::Pass, [p = p, level = level](const RunOptions&) {
                                   Tower tower(s3_spec(TowerSpec::Rule::PrimeProducts, {}, 2, {2, 3}), level);
                                   return zn_witness(tower, tower.level_generators(level - 1), level - 1, level, p)
                                       .report;
                                 }));
  }
  suite.checks.push_back(check("products-p5-rejected", "P = {2, 3}: 5 divides no n_i", Verdict::Fail,
                               [](const RunOptions&) {
                                 return precondition("ZN-WITNESS", "prime products over {2, 3}", [] {
                                   TowerSpec spec = s3_spec(TowerSpec::Rule::PrimeProducts, {}, 2, {2, 3});
                                   for (std::size_t i = 1; i <= 4; ++i) {
                                     if (spec.n(i) % 5 == 0) return;
                                   }
                                   throw InvalidArgument("5 divides none of n_1..n_4");
                                 });
                               }));
  suite.checks.push_back(check("increasing-primes-once", "n = (2, 3, 5, 7): each p <= 7 divides exactly one n_i",
                               Verdict::Pass, [](const RunOptions&) {
                                 TowerSpec spec = s3_spec(TowerSpec::Rule::IncreasingPrimes, {});
                                 PropertyReport r = report("PRIME-DIVISIBILITY", spec.to_string());
                                 std::string seq;
                                 for (std::size_t i = 1; i <= 4; ++i) seq += (i > 1 ? "," : "") + std::to_string(spec.n(i));
                                 r.facts.emplace_back("n_1..n_4", seq);
                                 r.checks.push_back("count of i <= 4 with p | n_i");
                                 for (std::int64_t p : {2, 3, 5, 7}) {
                                   int hits = 0;
                                   for (std::size_t i = 1; i <= 4; ++i) hits += spec.n(i) % p == 0 ? 1 : 0;
                                   if (hits != 1) r.fail(std::to_string(p) + " divides " + std::to_string(hits) + " terms");
                                 }
                                 return r;
                               }));
  suite.checks.push_back(check("increasing-primes-level1-no-z3", "n_1 = 2: no Z/3 witness for S3 in S3 wr Z/2",
                               Verdict::Fail, [](const RunOptions& o) {
                                 FgSubgroup h = s3_in_wreath(2);
                                 return search_report(*h.group(), h, 3, o, std::nullopt);
                               }));
  return suite;
}

}  // namespace displace::suites
