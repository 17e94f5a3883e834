#include <algorithm>

#include "displace/checkers/checkers.hpp"
#include "displace/hnn/hnn.hpp"
#include "displace/perm/perm_group.hpp"
#include "suite_util.hpp"

namespace displace::suites {

namespace {

using HnnPtr = std::shared_ptr<const HnnGroup>;

HnnPtr b_s3() { return HnnGroup::make_binate(symmetric_s3()->as_subgroup()); }
HnnPtr m_s3() { return HnnGroup::make_mitosis(symmetric_s3()->as_subgroup()); }

std::vector<Element> s3_elements() { return enumerate_group(*symmetric_s3()); }

BrittonWord raw(std::vector<Element> bases, std::vector<StableLetter> letters) {
  return BrittonWord{std::move(bases), std::move(letters)};
}

BrittonWord invert_word(const BrittonWord& w) {
  BrittonWord out;
  for (auto it = w.bases.rbegin(); it != w.bases.rend(); ++it) out.bases.push_back(inv(*it));
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out.letters.push_back(it->inverse());
  return out;
}

BrittonWord concat(const BrittonWord& a, const BrittonWord& b) {
  BrittonWord out = a;
  out.bases.back() = a.bases.back() * b.bases.front();
  out.bases.insert(out.bases.end(), b.bases.begin() + 1, b.bases.end());
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

/// Random word biased toward pinches: bases are often drawn from Γ₋, Γ₊ or Δ.
BrittonWord random_raw_word(const HnnGroup& g, const std::vector<Element>& gamma, Rng& rng) {
  const auto pick = [&] { return gamma[uniform_index(rng, gamma.size())]; };
  const auto base = [&] {
    switch (uniform_index(rng, 5)) {
      case 0: return g.minus(pick());
      case 1: return g.plus(pick());
      case 2: return g.diagonal(pick());
      case 3: return g.base()->identity();
      default: return g.pair(pick(), pick());
    }
  };
  BrittonWord w;
  w.bases.push_back(base());
  const std::size_t length = uniform_index(rng, 7);
  for (std::size_t i = 0; i < length; ++i) {
    w.letters.push_back(StableLetter{static_cast<std::uint8_t>(uniform_index(rng, g.letters().size())),
                                     static_cast<std::int8_t>(uniform_index(rng, 2) == 0 ? 1 : -1)});
    w.bases.push_back(base());
  }
  return w;
}

Vertex vertex_of(const HnnGroup& g, const Element& x) {
  Vertex v = x.as<BrittonWord>();
  v.bases.back() = g.base()->identity();
  return v;
}

/// Vertices in a ball of radius r of the (q_+ + q_d)-regular tree.
std::size_t regular_ball_size(std::size_t degree, std::size_t radius) {
  std::size_t total = 1;
  std::size_t layer = degree;
  for (std::size_t k = 1; k <= radius; ++k) {
    total += layer;
    layer *= degree - 1;
  }
  return total;
}

bool contains_vertex(const std::vector<Vertex>& vs, const Vertex& v) {
  return std::any_of(vs.begin(), vs.end(), [&](const Vertex& u) { return u == v; });
}

PropertyReport relation_report(const HnnGroup& g, const std::string& subject) {
  PropertyReport r = report("BRITTON-RELATIONS", subject);
  const Element identity = g.base()->identity();
  for (const auto& x : s3_elements()) {
    for (std::size_t letter = 0; letter < g.letters().size(); ++letter) {
      const auto& spec = g.letters()[letter];
      const auto in = [&](SubgroupKind k) {
        return k == SubgroupKind::Plus ? g.plus(x) : k == SubgroupKind::Minus ? g.minus(x) : g.diagonal(x);
      };
      const Element a = in(spec.domain);
      const Element b = in(spec.codomain);
      const StableLetter t{static_cast<std::uint8_t>(letter), 1};
      const BrittonWord forward = raw({identity, a, identity}, {t, t.inverse()});
      const BrittonWord backward = raw({identity, b, identity}, {t.inverse(), t});
      const BrittonWord fr = g.britton_reduce(forward);
      const BrittonWord br = g.britton_reduce(backward);
      if (!fr.letters.empty() || !(fr.bases.front() == b) || !br.letters.empty() || !(br.bases.front() == a)) {
        r.fail(spec.name + " relation fails for g = " + x.to_string());
        return r;
      }
      if (!(g.word(forward) == g.from_base(b)) ||
          !is_identity(g, concat(raw({inv(b)}, {}), forward))) {
        r.fail(spec.name + " relation fails in the group law for g = " + x.to_string());
        return r;
      }
    }
  }
  r.checks.push_back("sigma a sigma^-1 -> phi(a) and sigma^-1 phi(a) sigma -> a for every g in S3");
  r.checks.push_back("phi(a)^-1 sigma a sigma^-1 is the identity");
  return r;
}

PropertyReport britton_lemma_report(const HnnGroup& g, const std::string& subject) {
  PropertyReport r = report("BRITTON-LEMMA", subject);
  const auto base = enumerate_group(*g.base());
  std::uint64_t words = 0;
  for (std::size_t letter = 0; letter < g.letters().size(); ++letter) {
    for (const int sign : {1, -1}) {
      const StableLetter t{static_cast<std::uint8_t>(letter), static_cast<std::int8_t>(sign)};
      for (const auto& c0 : base) {
        for (const auto& c1 : base) {
          ++words;
          if (is_identity(g, raw({c0, c1}, {t}))) {
            r.fail("reduced word " + c0.to_string() + " " + g.letter_name(t) + " " + c1.to_string() + " is trivial");
            return r;
          }
        }
      }
    }
  }
  r.facts.emplace_back("words", std::to_string(words));
  r.checks.push_back("every word c0 sigma c1 is nontrivial");
  return r;
}

PropertyReport confluence_report(const HnnGroup& g, const std::string& subject, std::uint64_t seed) {
  PropertyReport r = report("BRITTON-CONFLUENCE", subject);
  r.checks.push_back("two random pinch orders give group-equal reduced words");
  r.checks.push_back("reduced words have no pinch and no more letters than the input");
  Rng rng(seed);
  const auto gamma = s3_elements();
  std::size_t pinched = 0;
  for (int k = 0; k < 500; ++k) {
    const BrittonWord w = random_raw_word(g, gamma, rng);
    const BrittonWord a = britton_reduce_randomized(g, w, rng);
    const BrittonWord b = britton_reduce_randomized(g, w, rng);
    if (a.letters.size() < w.letters.size()) ++pinched;
    if (!g.pinch_sites(a).empty() || !g.pinch_sites(b).empty() || a.letters.size() > w.letters.size() ||
        a.letters.size() != b.letters.size()) {
      r.fail("reduction left a pinch or changed the letter count");
      return r;
    }
    if (!is_identity(g, concat(invert_word(a), b))) {
      r.fail("two reductions of one word differ in the group");
      return r;
    }
  }
  r.facts.emplace_back("words", "500");
  r.facts.emplace_back("words with a pinch", std::to_string(pinched));
  return r;
}

}  // namespace

Suite britton_suite() {
  Suite suite{"britton", "Britton reduction for b(S3) and m(S3): d (1, g) d^-1 = (g, g), s (g, 1) s^-1 = (1, g)", {}};
  suite.checks.push_back(check("relations-b", "defining relations of b(S3) for every g", Verdict::Pass,
                               [](const RunOptions&) { return relation_report(*b_s3(), "b(S3)"); }));
  suite.checks.push_back(check("relations-m", "defining relations of m(S3) for every g", Verdict::Pass,
                               [](const RunOptions&) { return relation_report(*m_s3(), "m(S3)"); }));
  suite.checks.push_back(check("non-pinch", "d (g, 1) d^-1 stays reduced for g != 1", Verdict::Pass,
                               [](const RunOptions&) {
                                 auto b = b_s3();
                                 PropertyReport r = report("BRITTON-REDUCE", "b(S3)");
                                 const Element one = b->base()->identity();
                                 for (const auto& g : s3_elements()) {
                                   if (g.is_identity()) continue;
                                   const auto w = b->britton_reduce(raw({one, b->minus(g), one}, {{0, 1}, {0, -1}}));
                                   if (w.letters.size() != 2) r.fail("d (g, 1) d^-1 pinched for g = " + g.to_string());
                                 }
                                 return r;
                               }));
  suite.checks.push_back(check("d-dinv", "d d^-1 is the identity and d is not", Verdict::Pass,
                               [](const RunOptions&) {
                                 auto b = b_s3();
                                 const Element one = b->base()->identity();
                                 const bool ok = is_identity(*b, raw({one, one, one}, {{0, 1}, {0, -1}})) &&
                                                 !is_identity(*b, raw({one, one}, {{0, 1}})) &&
                                                 is_identity(*b, raw({one}, {}));
                                 return expect(report("IDENTITY-TEST", "b(S3)"), ok, "identity test wrong");
                               }));
  suite.checks.push_back(check("britton-lemma-b", "all 2592 reduced one-letter words of b(S3) are nontrivial",
                               Verdict::Pass, [](const RunOptions&) { return britton_lemma_report(*b_s3(), "b(S3)"); }));
  suite.checks.push_back(check("britton-lemma-m", "all 5184 reduced one-letter words of m(S3) are nontrivial",
                               Verdict::Pass, [](const RunOptions&) { return britton_lemma_report(*m_s3(), "m(S3)"); }));
  suite.checks.push_back(check("confluence-b", "randomized pinch orders agree on 500 words of b(S3)", Verdict::Pass,
                               [](const RunOptions& o) { return confluence_report(*b_s3(), "b(S3)", o.seed); }));
  suite.checks.push_back(check("confluence-m", "randomized pinch orders agree on 500 words of m(S3)", Verdict::Pass,
                               [](const RunOptions& o) { return confluence_report(*m_s3(), "m(S3)", o.seed + 1); }));
  return suite;
}

Suite bass_serre_suite() {
  Suite suite{"bass-serre", "(g, 1) with g != 1 fixes a unique vertex of the Bass-Serre tree of b(S3)", {}};
  suite.checks.push_back(check("ball-size", "radius-3 ball has 1 + q + q(q-1) + q(q-1)^2 vertices", Verdict::Pass,
                               [](const RunOptions& o) {
                                 auto b = b_s3();
                                 const std::size_t degree =
                                     b->transversal(SubgroupKind::Plus).size() + b->transversal(SubgroupKind::Diagonal).size();
                                 const std::size_t size = bass_serre_ball(*b, 3, o.budget).size();
                                 PropertyReport r = report("BASS-SERRE-BALL", "b(S3), radius 3");
                                 r.facts.emplace_back("degree", std::to_string(degree));
                                 r.facts.emplace_back("vertices", std::to_string(size));
                                 return expect(r, size == regular_ball_size(degree, 3), "ball is not a regular tree ball");
                               }));
  suite.checks.push_back(check("minus-unique-fixed", "each nontrivial (g, 1) fixes only the base vertex within "
                                                     "radius 3",
                               Verdict::Pass, [](const RunOptions&) {
                                 auto b = b_s3();
                                 const Vertex base = raw({b->base()->identity()}, {});
                                 PropertyReport r = report("UNIQUE-FIXED-VERTEX", "Gamma- in b(S3)");
                                 for (const auto& g : s3_elements()) {
                                   if (g.is_identity()) continue;
                                   const auto fixed = bass_serre_fixed_vertices(b->from_base(b->minus(g)), 3);
                                   if (fixed.size() != 1 || !(fixed.front() == base)) {
                                     r.fail("(" + g.to_string() + ", 1) fixes " + std::to_string(fixed.size()) + " vertices");
                                   }
                                 }
                                 r.facts.emplace_back("elements", "5");
                                 return r;
                               }));
  suite.checks.push_back(check("diagonal-fixes-edge", "(h, h) with h != 1 fixes the base and d K at radius 1",
                               Verdict::Pass, [](const RunOptions&) {
                                 auto b = b_s3();
                                 const Element one = b->base()->identity();
                                 const Vertex base = raw({one}, {});
                                 const Vertex neighbour = raw({one, one}, {{0, 1}});
                                 PropertyReport r = report("FIXED-EDGE", "Delta in b(S3)");
                                 for (const auto& h : s3_elements()) {
                                   if (h.is_identity()) continue;
                                   const auto fixed = bass_serre_fixed_vertices(b->from_base(b->diagonal(h)), 1);
                                   r.facts.emplace_back("fixed by (" + h.to_string() + ", " + h.to_string() + ")",
                                                        std::to_string(fixed.size()));
                                   if (fixed.size() < 2 || !contains_vertex(fixed, base) || !contains_vertex(fixed, neighbour)) {
                                     r.fail("(h, h) does not fix the edge K -- dK for h = " + h.to_string());
                                   }
                                 }
                                 return r;
                               }));
  suite.checks.push_back(check("identity-fixes-ball", "the identity fixes all of the radius-2 ball", Verdict::Pass,
                               [](const RunOptions&) {
                                 auto b = b_s3();
                                 const auto fixed = bass_serre_fixed_vertices(b->identity(), 2);
                                 return expect(report("FIXED-VERTICES", "1 in b(S3)"),
                                               fixed.size() == bass_serre_ball(*b, 2).size(), "identity moves a vertex");
                               }));
  suite.checks.push_back(check("stabilizers-radius-1", "g fixes c d^±1 K iff c^-1 g c lies in Delta or Gamma+",
                               Verdict::Pass, [](const RunOptions&) {
                                 auto b = b_s3();
                                 const auto base = enumerate_group(*b->base());
                                 const Vertex root = raw({b->base()->identity()}, {});
                                 PropertyReport r = report("VERTEX-STABILIZERS", "b(S3), radius 1");
                                 std::size_t pairs = 0;
                                 for (const auto& v : children(*b, root)) {
                                   const Element c = v.bases.front();
                                   const SubgroupKind stab = v.letters.front().sign > 0 ? SubgroupKind::Diagonal
                                                                                        : SubgroupKind::Plus;
                                   for (const auto& g : base) {
                                     ++pairs;
                                     const bool expected = b->in_subgroup(stab, conj(inv(c), g));
                                     if (fixes_vertex(b->from_base(g), v) != expected) {
                                       r.fail(g.to_string() + " at " + to_string(*b, v));
                                       return r;
                                     }
                                   }
                                 }
                                 r.facts.emplace_back("pairs", std::to_string(pairs));
                                 return r;
                               }));
  suite.checks.push_back(check("centralizers-preserve-fixed", "if [g, u] = 1 then u maps Fix(g) to Fix(g), "
                                                              "radius 2, 100 sampled pairs",
                               Verdict::Pass, [](const RunOptions& o) {
                                 auto b = b_s3();
                                 const auto base = enumerate_group(*b->base());
                                 std::vector<std::pair<Element, Element>> commuting;
                                 for (const auto& x : base) {
                                   for (const auto& y : base) {
                                     if (commute(x, y) && !x.is_identity()) commuting.emplace_back(x, y);
                                   }
                                 }
                                 const FgSubgroup gens("b(S3)", b,
                                                       {b->from_base(b->minus(symmetric_s3()->parse("(1 2)"))),
                                                        b->from_base(b->plus(symmetric_s3()->parse("(1 2 3)"))),
                                                        b->letter(0)});
                                 Rng rng(o.seed);
                                 PropertyReport r = report("CENTRALIZER-FIXED-SET", "b(S3)");
                                 std::size_t images = 0;
                                 for (int k = 0; k < 100; ++k) {
                                   const auto& [x, y] = commuting[uniform_index(rng, commuting.size())];
                                   const Element w = random_word(gens, uniform_index(rng, 4), rng);
                                   const Element g = conj(w, b->from_base(x));
                                   const Element u = conj(w, b->from_base(y));
                                   for (const auto& v : bass_serre_fixed_vertices(g, 2)) {
                                     ++images;
                                     const Vertex moved = vertex_of(*b, u * vertex_element(*b, v));
                                     if (!fixes_vertex(g, moved)) {
                                       r.fail("u moves a fixed vertex of g off Fix(g)",
                                              Counterexample{Counterexample::Kind::Commutator, g, u});
                                       return r;
                                     }
                                   }
                                 }
                                 r.facts.emplace_back("vertex images", std::to_string(images));
                                 return r;
                               }));
  suite.checks.push_back(check("m-fixed-edges", "Gamma- in m(S3) fixes at least the edge K -- sK within radius 3",
                               Verdict::Pass, [](const RunOptions&) {
                                 auto m = m_s3();
                                 const std::size_t edges = fixed_edge_count(m->gamma_minus(), 3);
                                 PropertyReport r = report("FIXED-EDGES", "Gamma- in m(S3), radius 3");
                                 r.facts.emplace_back("fixed edges", std::to_string(edges));
                                 r.notes.push_back("finite count only; no claim about infinitely many fixed edges");
                                 return expect(r, edges >= 1, "no fixed edge");
                               }));
  suite.checks.push_back(check("radius-budget", "radius 5 is refused", Verdict::Fail, [](const RunOptions&) {
    PropertyReport r = report("FIXED-VERTICES", "radius 5");
    try {
      bass_serre_fixed_vertices(b_s3()->identity(), kMaxTreeRadius + 1);
    } catch (const BudgetExceeded& e) {
      r.fail(std::string("budget: ") + e.what());
    }
    return r;
  }));
  return suite;
}

Suite binate_tower_suite() {
  Suite suite{"binate-tower-no-cc", "b(S3) has no commuting-conjugate witness for Gamma- among short words", {}};
  const auto search = [](FgSubgroup gamma, std::size_t letters) {
    return [gamma, letters](const RunOptions& o) {
      auto b = HnnGroup::make_binate(gamma);
      PropertyReport r = report("CC-SEARCH", "Gamma- in " + b->descriptor());
      r.facts.emplace_back("max letters", std::to_string(letters));
      r.facts.emplace_back("words", std::to_string(cc_search_space(*b, letters)));
      r.checks.push_back("every reduced word in canonical order tested with check_cc");
      const auto hit = cc_witness_search_b1(gamma, letters, o.jobs, o.budget);
      if (!hit) {
        r.fail("no witness t with [Gamma-, t Gamma- t^-1] = 1");
      } else {
        r.facts.emplace_back("witness", hit->to_string());
      }
      return r;
    };
  };
  suite.checks.push_back(check("s3-two-letters", "no witness with at most 2 stable letters", Verdict::Fail,
                               search(symmetric_s3()->as_subgroup(), 2)));
  suite.checks.push_back(check("s3-one-letter", "no witness with at most 1 stable letter", Verdict::Fail,
                               search(symmetric_s3()->as_subgroup(), 1)));
  suite.checks.push_back(check("s3-base", "no witness in the base S3 x S3", Verdict::Fail,
                               search(symmetric_s3()->as_subgroup(), 0)));
  suite.checks.push_back(check("z2-base", "abelian Z/2: the identity is a witness", Verdict::Pass,
                               search(cyclic_group(2)->as_subgroup(), 0)));
  suite.checks.push_back(check("tower-embed", "x -> (x, 1) is an injective homomorphism at stages 0 and 1",
                               Verdict::Pass, [](const RunOptions& o) {
                                 const BinateTower tower(symmetric_s3()->as_subgroup(), 2);
                                 Rng rng(o.seed);
                                 PropertyReport r = report("TOWER-EMBED", "b(b(S3))");
                                 r.checks.push_back("identity maps to identity");
                                 r.checks.push_back("multiplicative on 100 random pairs per stage");
                                 r.checks.push_back("nontrivial stage-0 elements stay nontrivial");
                                 for (std::size_t i = 0; i < 2; ++i) {
                                   const FgSubgroup& s = tower.stage(i);
                                   if (!tower.embed(s.group()->identity(), i).is_identity()) r.fail("identity not preserved");
                                   for (int k = 0; k < 100; ++k) {
                                     const Element x = random_word(s, 1 + uniform_index(rng, 5), rng);
                                     const Element y = random_word(s, 1 + uniform_index(rng, 5), rng);
                                     if (!(tower.embed(x * y, i) == tower.embed(x, i) * tower.embed(y, i))) {
                                       r.fail("embedding not multiplicative at stage " + std::to_string(i),
                                              Counterexample{Counterexample::Kind::Equality, x, y});
                                       return r;
                                     }
                                   }
                                 }
                                 for (const auto& g : s3_elements()) {
                                   if (g.is_identity()) continue;
                                   const Element once = tower.embed(g, 0);
                                   if (once.is_identity() || tower.embed(once, 1).is_identity()) {
                                     r.fail("embedding kills " + g.to_string());
                                   }
                                 }
                                 return r;
                               }));
  suite.checks.push_back(check("stage-budget", "more than 3 stages are refused", Verdict::Fail, [](const RunOptions&) {
    PropertyReport r = report("TOWER-EMBED", "4 stages");
    try {
      BinateTower(symmetric_s3()->as_subgroup(), BinateTower::kMaxStages + 1);
    } catch (const BudgetExceeded& e) {
      r.fail(std::string("budget: ") + e.what());
    }
    return r;
  }));
  return suite;
}

Suite mitosis_suite() {
  Suite suite{"mitosis", "m(Gamma) with s (g, 1) s^-1 = (1, g) is mitotic for Gamma-", {}};
  suite.checks.push_back(check("s3", "mitosis data in m(S3)", Verdict::Pass,
                               [](const RunOptions&) { return mitosis_check(symmetric_s3()->as_subgroup()); }));
  suite.checks.push_back(check("z2", "mitosis data in m(Z/2)", Verdict::Pass,
                               [](const RunOptions&) { return mitosis_check(cyclic_group(2)->as_subgroup()); }));
  suite.checks.push_back(check("trivial", "mitosis data in m(1)", Verdict::Pass,
                               [](const RunOptions&) { return mitosis_check(trivial_group()->as_subgroup()); }));
  suite.checks.push_back(check("mitotic-s-ds", "check_mitotic accepts t1 = s, t2 = d s in m(S3)", Verdict::Pass,
                               [](const RunOptions&) {
                                 auto m = m_s3();
                                 const Element s = m->letter(m->letter_index("s"));
                                 const Element d = m->letter(m->letter_index("d"));
                                 return check_mitotic(m->gamma_minus(), s, d * s);
                               }));
  suite.checks.push_back(check("binate-literal-ds", "f = conj by s with t = d s is not a binate witness",
                               Verdict::Fail, [](const RunOptions&) {
                                 auto m = m_s3();
                                 const Element s = m->letter(m->letter_index("s"));
                                 const Element d = m->letter(m->letter_index("d"));
                                 const FgSubgroup h = m->gamma_minus();
                                 GeneratorMap f;
                                 for (const auto& g : h.generators()) f.images.push_back(conj(s, g));
                                 return check_binate(h, f, d * s);
                               }));
  suite.checks.push_back(check("sym4-block-model", "no t2 in Sym(4) makes (t1 = (1 3)(2 4), t2) mitotic for <(1 2)>",
                               Verdict::Fail, [](const RunOptions&) {
                                 auto sym4 = PermGroup::symmetric(4);
                                 const FgSubgroup h("<(1 2)>", sym4, {sym4->parse("(1 2)")});
                                 const Element t1 = sym4->parse("(1 3)(2 4)");
                                 PropertyReport r = report("MITOTIC", "<(1 2)> in Sym(4), t1 = (1 3)(2 4)");
                                 r.checks.push_back("check_mitotic for all 24 choices of t2");
                                 for (const auto& t2 : enumerate_group(*sym4)) {
                                   if (check_mitotic(h, t1, t2).passed()) {
                                     r.facts.emplace_back("t2", t2.to_string());
                                     return r;
                                   }
                                 }
                                 r.fail("t2 (1 2) t2^-1 = (1 2)(3 4) has no solution: cycle types differ");
                                 return r;
                               }));
  return suite;
}

}  // namespace displace::suites
