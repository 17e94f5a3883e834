#include "displace/checkers/checkers.hpp"
#include "displace/perm/perm_group.hpp"
#include "displace/pl/pl_group.hpp"
#include "displace/pl/pl_tower.hpp"
#include "suite_util.hpp"

namespace displace::suites {

namespace {

constexpr std::size_t kTowerDepth = 3;
constexpr int kSampledWords = 200;

Element pl(const PLHomeo& f) { return PLGroup::instance()->element(f); }

Element random_tower_word(const FgSubgroup& gamma, Rng& rng) {
  return random_word(gamma, 1 + uniform_index(rng, 8), rng);
}

/// Sign of g(x) - x at the interior breakpoints of g inside `interval`. g - id
/// is affine between breakpoints and vanishes at fixed endpoints, so these
/// signs decide the sign on the whole interval.
bool moves_up_on(const PLHomeo& g, const OpenInterval& interval, bool up) {
  bool any = false;
  for (const auto& b : g.breakpoints()) {
    if (!interval.contains(b.x)) continue;
    any = true;
    if (up ? !(b.y > b.x) : !(b.y < b.x)) return false;
  }
  return any;
}

MWitness f_copy_m_witness(const PLTower& tower, std::vector<Element> subset, std::int64_t p_max) {
  return MWitness{tower.subgroup(1), pl(tower.dissipator(2)), std::move(subset), PLGroup::instance()->identity(),
                  p_max, f_copy_membership()};
}

}  // namespace

Suite pl_tower_suite() {
  Suite suite{"pl-tower", "Gamma_{i+1} = <Gamma_i, t_{i+1}> realized by PL homeomorphisms of the line", {}};
  suite.checks.push_back(check("build-depth-3", "dissipators have connected support I_{i+1}, move points up "
                                                "and displace I_i",
                               Verdict::Pass, [](const RunOptions&) {
                                 const PLTower tower = tower_gamma(kTowerDepth);
                                 PropertyReport r = report("PL-TOWER", "depth 3");
                                 r.checks.push_back("supp(t_{i+1}) = I_{i+1} is one interval");
                                 r.checks.push_back("t_{i+1}(x) > x on its support");
                                 r.checks.push_back("t_{i+1}(I_i) ∩ I_i = ∅");
                                 for (std::size_t i = 1; i < kTowerDepth; ++i) {
                                   const PLHomeo& t = tower.dissipator(i + 1);
                                   const OpenInterval& next = tower.interval(i + 1);
                                   const OpenInterval& cur = tower.interval(i);
                                   r.facts.emplace_back("t_" + std::to_string(i + 1), t.to_string());
                                   if (!(t.support() == IntervalSet({next}))) r.fail("support of t_" + std::to_string(i + 1));
                                   if (!moves_up_on(t, next, true)) r.fail("t_" + std::to_string(i + 1) + " not increasing");
                                   if (!intersect(t.image(IntervalSet({cur})), IntervalSet({cur})).empty()) {
                                     r.fail("t_" + std::to_string(i + 1) + " does not displace I_" + std::to_string(i));
                                   }
                                 }
                                 return r;
                               }));
  for (std::size_t i = 1; i < kTowerDepth; ++i) {
    const std::string idx = std::to_string(i);
    const std::string next = std::to_string(i + 1);
    suite.checks.push_back(check("displaces-" + idx, "t_" + next + "^p(I_" + idx + ") ∩ I_" + idx + " = ∅ for p <= 50",
                                 Verdict::Pass, [i](const RunOptions&) {
                                   const PLTower tower = tower_gamma(kTowerDepth);
                                   return displaces(tower.dissipator(i + 1), IntervalSet({tower.interval(i)}),
                                                    kDissipatorRoom);
                                 }));
    suite.checks.push_back(check("czc-" + idx, "t_" + next + " is a bounded Z-witness for Gamma_" + idx,
                                 Verdict::BoundedPass, [i](const RunOptions& o) {
                                   const PLTower tower = tower_gamma(kTowerDepth);
                                   return check_czc(tower.subgroup(i), pl(tower.dissipator(i + 1)), o.p_max);
                                 }));
    suite.checks.push_back(check("dissipator-" + idx, "t_" + next + " dissipates I_" + idx + " for Gamma_" + idx,
                                 Verdict::BoundedPass, [i](const RunOptions& o) {
                                   const PLTower tower = tower_gamma(kTowerDepth);
                                   return check_dissipator(IntervalSet({tower.interval(i)}), pl(tower.dissipator(i + 1)),
                                                           tower.subgroup(i), o.p_max);
                                 }));
  }
  suite.checks.push_back(check("dichotomy-200", "g(I_i) ∩ I_i = ∅ or g(I_i) = I_i for 200 random tower words",
                               Verdict::Pass, [](const RunOptions& o) {
                                 const PLTower tower = tower_gamma(kTowerDepth);
                                 const FgSubgroup gamma = tower.subgroup(kTowerDepth);
                                 Rng rng(o.seed);
                                 PropertyReport r = report("CONJUGACY-DICHOTOMY", "Gamma_3");
                                 std::int64_t equal = 0;
                                 for (int k = 0; k < kSampledWords; ++k) {
                                   const Element g = random_tower_word(gamma, rng);
                                   for (std::size_t i = 1; i < kTowerDepth; ++i) {
                                     const IntervalSet domain({tower.interval(i)});
                                     const IntervalSet moved = g.as<PLHomeo>().image(domain);
                                     if (moved == domain) {
                                       ++equal;
                                     } else if (!intersect(moved, domain).empty()) {
                                       r.fail("g(I_" + std::to_string(i) + ") = " + moved.to_string() +
                                              " meets I_" + std::to_string(i) + " for g = " + g.to_string());
                                       return r;
                                     }
                                   }
                                 }
                                 r.facts.emplace_back("samples", std::to_string(kSampledWords));
                                 r.facts.emplace_back("preserved", std::to_string(equal));
                                 return r;
                               }));
  suite.checks.push_back(check("finite-supports-200", "supports of 200 random tower words are finite disjoint "
                                                      "unions of bounded intervals inside I_3",
                               Verdict::Pass, [](const RunOptions& o) {
                                 const PLTower tower = tower_gamma(kTowerDepth);
                                 const FgSubgroup gamma = tower.subgroup(kTowerDepth);
                                 const IntervalSet top({tower.interval(kTowerDepth)});
                                 Rng rng(o.seed + 1);
                                 PropertyReport r = report("FINITE-SUPPORT", "Gamma_3");
                                 std::size_t most = 0;
                                 for (int k = 0; k < kSampledWords; ++k) {
                                   const Element g = random_tower_word(gamma, rng);
                                   const IntervalSet s = pl_support(g.as<PLHomeo>());
                                   most = std::max(most, s.size());
                                   const auto& parts = s.intervals();
                                   for (std::size_t j = 0; j + 1 < parts.size(); ++j) {
                                     if (!(parts[j].hi <= parts[j + 1].lo)) {
                                       r.fail("overlapping support components for " + g.to_string());
                                       return r;
                                     }
                                   }
                                   if (!s.subset_of(top)) {
                                     r.fail("support " + s.to_string() + " leaves I_3");
                                     return r;
                                   }
                                 }
                                 r.facts.emplace_back("max components", std::to_string(most));
                                 return r;
                               }));
  suite.checks.push_back(check("support-transport", "supp(t g t^-1) = t(supp g) on 100 random pairs",
                               Verdict::Pass, [](const RunOptions& o) {
                                 const FgSubgroup gamma = tower_gamma(kTowerDepth).subgroup(kTowerDepth);
                                 Rng rng(o.seed + 2);
                                 PropertyReport r = report("SUPPORT-TRANSPORT", "Gamma_3");
                                 for (int k = 0; k < 100; ++k) {
                                   const Element t = random_tower_word(gamma, rng);
                                   const Element g = random_tower_word(gamma, rng);
                                   const IntervalSet lhs = pl_support(conj(t, g).as<PLHomeo>());
                                   const IntervalSet rhs = t.as<PLHomeo>().image(pl_support(g.as<PLHomeo>()));
                                   if (!(lhs == rhs)) {
                                     r.fail("supports differ for t = " + t.to_string() + ", g = " + g.to_string());
                                     return r;
                                   }
                                 }
                                 return r;
                               }));
  suite.checks.push_back(check("associativity", "(ab)c = a(bc) on 100 random triples", Verdict::Pass,
                               [](const RunOptions& o) {
                                 const FgSubgroup gamma = tower_gamma(kTowerDepth).subgroup(kTowerDepth);
                                 Rng rng(o.seed + 3);
                                 PropertyReport r = report("ASSOCIATIVITY", "Gamma_3");
                                 for (int k = 0; k < 100; ++k) {
                                   const Element a = random_tower_word(gamma, rng);
                                   const Element b = random_tower_word(gamma, rng);
                                   const Element c = random_tower_word(gamma, rng);
                                   if (!((a * b) * c == a * (b * c))) {
                                     r.fail("not associative", Counterexample{Counterexample::Kind::Equality, (a * b) * c,
                                                                              a * (b * c)});
                                     return r;
                                   }
                                 }
                                 return r;
                               }));
  suite.checks.push_back(check("orbit-density", "orbit of 1/3 under F-words of length <= 12 is 1/16-dense",
                               Verdict::Pass, [](const RunOptions&) {
                                 const OrbitSample sample = sample_orbit_density(make_rational(1, 3), 12,
                                                                                 make_rational(1, 16));
                                 PropertyReport r = report("ORBIT-DENSITY", "orbit of 1/3 in (0, 1)");
                                 r.facts.emplace_back("points", std::to_string(sample.points));
                                 r.facts.emplace_back("max gap", to_string(sample.max_gap));
                                 r.notes.push_back("sampled density only; minimality is not verified");
                                 return expect(r, sample.dense, "a gap exceeds 1/8");
                               }));
  suite.checks.push_back(check("cc-f-copy", "[Gamma_1, t_2 Gamma_1 t_2^-1] = 1", Verdict::Pass,
                               [](const RunOptions&) {
                                 const PLTower tower = tower_gamma(2);
                                 return check_cc(tower.subgroup(1), pl(tower.dissipator(2)));
                               }));
  suite.checks.push_back(check("m-f-copy", "M certificate for Lambda = Gamma_1, t = t_2, s = 1 on 20 F-words",
                               Verdict::BoundedPass, [](const RunOptions& o) {
                                 const PLTower tower = tower_gamma(2);
                                 Rng rng(o.seed + 4);
                                 std::vector<Element> subset;
                                 for (int k = 0; k < 20; ++k) subset.push_back(random_tower_word(tower.subgroup(1), rng));
                                 const MWitness m = f_copy_m_witness(tower, subset, o.p_max);
                                 return check_M(m.lambda, m.t, m.subset, m.s, m.p_max, m.oracle);
                               }));
  suite.checks.push_back(check("m-rejects-dissipator", "S = {t_2} lies in no conjugate s Gamma_1 s^-1 for "
                                                       "bounded candidates s",
                               Verdict::Fail, [](const RunOptions& o) {
                                 const PLTower tower = tower_gamma(3);
                                 const Element x0 = pl(tower.base_generators[0]);
                                 const Element t2 = pl(tower.dissipator(2));
                                 const Element t3 = pl(tower.dissipator(3));
                                 const std::vector<Element> candidates = {
                                     PLGroup::instance()->identity(), x0, t2, inv(t2), t3, inv(t3), t3 * t2, t2 * t3 * x0};
                                 PropertyReport r = report("M", "Gamma_1, S = {t_2}");
                                 r.checks.push_back("check_M fails for every candidate conjugator");
                                 r.facts.emplace_back("candidates", std::to_string(candidates.size()));
                                 for (const auto& s : candidates) {
                                   const PropertyReport one = check_M(tower.subgroup(1), t2, {t2}, s, o.p_max,
                                                                      f_copy_membership());
                                   if (one.passed()) return r;
                                 }
                                 r.fail("t_2 is not contained in s Gamma_1 s^-1 for any candidate s");
                                 return r;
                               }));
  return suite;
}

Suite fixed_point_suite() {
  Suite suite{"fixed-point", "an F element with unique fixed point 1/2; elements commuting with it fix 1/2", {}};
  suite.checks.push_back(check("thompson-generators", "x0 breakpoints, x0(1/2) = 1/4, dyadic data", Verdict::Pass,
                               [](const RunOptions&) {
                                 auto [x0, x1] = thompson_generators();
                                 const auto expected = PLHomeo::from_breakpoints(
                                     {{0, 0}, {make_rational(1, 2), make_rational(1, 4)},
                                      {make_rational(3, 4), make_rational(1, 2)}, {1, 1}});
                                 PropertyReport r = report("THOMPSON-F", "x0, x1");
                                 r.facts.emplace_back("x0", x0.to_string());
                                 r.facts.emplace_back("x1", x1.to_string());
                                 if (!(x0 == expected)) r.fail("x0 breakpoints differ");
                                 if (x0(make_rational(1, 2)) != make_rational(1, 4)) r.fail("x0(1/2) != 1/4");
                                 if (!in_standard_f_copy(x0) || !in_standard_f_copy(x1)) r.fail("not in the F-copy");
                                 if (!pl_support(x1).subset_of(IntervalSet::single(make_rational(1, 2), 1))) {
                                   r.fail("x1 moves points of (0, 1/2)");
                                 }
                                 return r;
                               }));
  suite.checks.push_back(check("unique-fixed-point", "h fixes 1/2, moves up on (0, 1/2) and down on (1/2, 1)",
                               Verdict::Pass, [](const RunOptions&) {
                                 const PLHomeo h = unique_fixed_point_element();
                                 const Rational half = make_rational(1, 2);
                                 PropertyReport r = report("UNIQUE-FIXED-POINT", h.to_string());
                                 if (h(half) != half) r.fail("h(1/2) != 1/2");
                                 if (!(pl_support(h) == IntervalSet({{0, half}, {half, 1}}))) r.fail("support of h");
                                 if (!moves_up_on(h, {0, half}, true)) r.fail("h(x) <= x somewhere on (0, 1/2)");
                                 if (!moves_up_on(h, {half, 1}, false)) r.fail("h(x) >= x somewhere on (1/2, 1)");
                                 if (!in_standard_f_copy(h)) r.fail("h is not in the F-copy");
                                 return r;
                               }));
  suite.checks.push_back(check("centralizers-fix-half", "50 sampled elements commuting with h fix 1/2 exactly",
                               Verdict::Pass, [](const RunOptions& o) {
                                 const PLHomeo h = unique_fixed_point_element();
                                 const Rational half = make_rational(1, 2);
                                 auto group = PLGroup::instance();
                                 const FgSubgroup hs("<h>", group, {pl(h)});
                                 auto [x0, x1] = thompson_generators();
                                 const FgSubgroup f_copy("F", group, {pl(x0), pl(x1)});
                                 // Centralizing candidates: powers of the two halves of h times F-copies far
                                 // to the right; plain F-words are mixed in and mostly rejected.
                                 const PLHomeo h_left = restrict_to(h, IntervalSet::single(0, half));
                                 const PLHomeo h_right = restrict_to(h, IntervalSet::single(half, 1));
                                 Rng rng(o.seed);
                                 PropertyReport r = report("CENTRALIZER-FIXES-HALF", "<h> in F");
                                 r.checks.push_back("subgroups_commute(<h>, <u>) passes");
                                 r.checks.push_back("u(1/2) = 1/2");
                                 int accepted = 0;
                                 int rejected = 0;
                                 while (accepted < 50) {
                                   if (rejected > 100000) {
                                     r.fail("too few centralizing samples");
                                     return r;
                                   }
                                   Element u = group->identity();
                                   if (uniform_index(rng, 2) == 0) {
                                     const auto a = static_cast<std::int64_t>(uniform_index(rng, 7)) - 3;
                                     const auto b = static_cast<std::int64_t>(uniform_index(rng, 7)) - 3;
                                     const Rational shift = static_cast<long>(2 + uniform_index(rng, 5));
                                     const PLHomeo far = affine_copy(random_word(f_copy, 1 + uniform_index(rng, 4), rng)
                                                                         .as<PLHomeo>(),
                                                                     {0, 1}, {shift, shift + 1});
                                     u = power(pl(h_left), a) * power(pl(h_right), b) * pl(far);
                                   } else {
                                     u = random_word(f_copy, 1 + uniform_index(rng, 6), rng);
                                   }
                                   if (!subgroups_commute(hs, FgSubgroup("<u>", group, {u})).passed()) {
                                     ++rejected;
                                     continue;
                                   }
                                   ++accepted;
                                   if (u.as<PLHomeo>()(half) != half) {
                                     r.fail("u = " + u.to_string() + " commutes with h but moves 1/2");
                                     return r;
                                   }
                                 }
                                 r.facts.emplace_back("accepted", std::to_string(accepted));
                                 r.facts.emplace_back("rejected", std::to_string(rejected));
                                 return r;
                               }));
  suite.checks.push_back(check("x0-moves-half", "x0 does not commute with h and moves 1/2", Verdict::Pass,
                               [](const RunOptions&) {
                                 const Element h = pl(unique_fixed_point_element());
                                 const Element x0 = pl(thompson_generators().first);
                                 const bool ok = !commute(h, x0) && x0.as<PLHomeo>()(make_rational(1, 2)) != make_rational(1, 2);
                                 return expect(report("CENTRALIZER-FIXES-HALF", "x0"), ok, "x0 commutes with h or fixes 1/2");
                               }));
  suite.checks.push_back(check("t2-not-zn-witness", "t_2 is not a Z/n witness for Gamma_1, n = 2..5",
                               Verdict::Fail, [](const RunOptions&) {
                                 const PLTower tower = tower_gamma(2);
                                 PropertyReport r = report("CZNC", "Gamma_1, t_2");
                                 for (std::int64_t n = 2; n <= 5; ++n) {
                                   if (check_cznc(tower.subgroup(1), pl(tower.dissipator(2)), n).passed()) return r;
                                 }
                                 r.fail("[Gamma_1, t_2^n] != 1 for n = 2..5");
                                 return r;
                               }));
  return suite;
}

Suite m_implies_czc_suite() {
  Suite suite{"m-implies-czc", "an M certificate and H ≤ s<Lambda>s^-1 give the Z-witness s t0 s^-1", {}};
  suite.checks.push_back(check("pl-identity", "Lambda = Gamma_1, t0 = t_2, s = 1, H = <x0>", Verdict::BoundedPass,
                               [](const RunOptions& o) {
                                 const PLTower tower = tower_gamma(2);
                                 const WitnessCertificate m{tower.subgroup(1), f_copy_m_witness(tower, {}, o.p_max)};
                                 const FgSubgroup h("<x0>", PLGroup::instance(), {pl(tower.base_generators[0])});
                                 auto derived = derive_czc_from_M(m, h, PLGroup::instance()->identity());
                                 const Element t = std::get<CzWitness>(derived.certificate.witness).t;
                                 return expect(derived.report, t == pl(tower.dissipator(2)), "derived t != t_2");
                               }));
  suite.checks.push_back(check("pl-conjugated", "s = x0 x1^-1 (t_2 x0 t_2^-1) preserves I_1, H = <x0>",
                               Verdict::BoundedPass, [](const RunOptions& o) {
                                 const PLTower tower = tower_gamma(2);
                                 const Element x0 = pl(tower.base_generators[0]);
                                 const Element x1 = pl(tower.base_generators[1]);
                                 const Element s = x0 * inv(x1) * conj(pl(tower.dissipator(2)), x0);
                                 const WitnessCertificate m{tower.subgroup(1), f_copy_m_witness(tower, {}, o.p_max)};
                                 return derive_czc_from_M(m, FgSubgroup("<x0>", PLGroup::instance(), {x0}), s).report;
                               }));
  suite.checks.push_back(check("pl-not-contained", "H = <t_2> is not in Gamma_1: derivation rejected",
                               Verdict::Fail, [](const RunOptions& o) {
                                 return precondition("CZC", "<t_2>", [&] {
                                   const PLTower tower = tower_gamma(2);
                                   const WitnessCertificate m{tower.subgroup(1), f_copy_m_witness(tower, {}, o.p_max)};
                                   derive_czc_from_M(m, FgSubgroup("<t_2>", PLGroup::instance(), {pl(tower.dissipator(2))}),
                                                     PLGroup::instance()->identity());
                                 });
                               }));
  suite.checks.push_back(check("sym4-conjugated", "Lambda = <(1 2)>, t0 = (1 3)(2 4), s = (2 3), H = <(1 3)> in Sym(4)",
                               Verdict::BoundedPass, [](const RunOptions&) {
                                 auto sym4 = PermGroup::symmetric(4);
                                 const FgSubgroup lambda("<(1 2)>", sym4, {sym4->parse("(1 2)")});
                                 const std::int64_t p_max = 4;
                                 const WitnessCertificate m{
                                     lambda, MWitness{lambda, sym4->parse("(1 3)(2 4)"), {sym4->parse("(1 2)")},
                                                      sym4->identity(), p_max, finite_membership(lambda)}};
                                 const PropertyReport base = verify(m);
                                 if (!base.passed()) return base;
                                 const FgSubgroup h("<(1 3)>", sym4, {sym4->parse("(1 3)")});
                                 return derive_czc_from_M(m, h, sym4->parse("(2 3)")).report;
                               }));
  suite.checks.push_back(check("oracle-unavailable", "check_M without a membership oracle is refused",
                               Verdict::Fail, [](const RunOptions& o) {
                                 const PLTower tower = tower_gamma(2);
                                 PropertyReport r = report("M", "Gamma_1 without oracle");
                                 try {
                                   check_M(tower.subgroup(1), pl(tower.dissipator(2)), {}, PLGroup::instance()->identity(),
                                           o.p_max, std::nullopt);
                                 } catch (const OracleUnavailable& e) {
                                   r.fail(std::string("oracle unavailable: ") + e.what());
                                 }
                                 return r;
                               }));
  return suite;
}

}  // namespace displace::suites
