#include "displace/checkers/checkers.hpp"
#include "displace/core/errors.hpp"
#include "displace/hnn/free_group.hpp"
#include "displace/hnn/hnn.hpp"
#include "displace/perm/perm_group.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace displace;

namespace {

BrittonWord word(std::vector<Element> bases, std::vector<StableLetter> letters) {
  return BrittonWord{std::move(bases), std::move(letters)};
}

Element s3(const char* c) { return symmetric_s3()->parse(c); }

std::vector<Element> s3_elements() { return closure(symmetric_s3()->as_subgroup()); }

}  // namespace

TEST_CASE("britton_reduce examples") {
  auto b = HnnGroup::make_binate(symmetric_s3()->as_subgroup());
  const Element one = b->base()->identity();
  const Element g = s3("(1 2 3)");
  const auto pinched = b->britton_reduce(word({one, b->plus(g), one}, {{0, 1}, {0, -1}}));
  CHECK(pinched.letters.empty());
  CHECK(pinched.bases.front() == b->diagonal(g));
  const auto back = b->britton_reduce(word({one, b->diagonal(g), one}, {{0, -1}, {0, 1}}));
  CHECK(back.bases.front() == b->plus(g));
  CHECK(b->britton_reduce(word({one, b->minus(g), one}, {{0, 1}, {0, -1}})).letters.size() == 2);
  const auto once = b->britton_reduce(word({one, one, one}, {{0, 1}, {0, -1}}));
  CHECK(once.letters.empty());
  CHECK(once.bases.front().is_identity());
  // Idempotent.
  const auto w = word({b->minus(g), b->pair(g, s3("(1 2)")), one}, {{0, 1}, {0, 1}});
  const auto r = b->britton_reduce(w);
  const auto rr = b->britton_reduce(r);
  CHECK(r.letters == rr.letters);
}

TEST_CASE("is_identity examples") {
  auto b = HnnGroup::make_binate(symmetric_s3()->as_subgroup());
  const Element one = b->base()->identity();
  CHECK(is_identity(*b, word({one}, {})));
  for (const auto& g : s3_elements()) {
    CHECK(is_identity(*b, word({inv(b->diagonal(g)), b->plus(g), one}, {{0, 1}, {0, -1}})));
  }
  CHECK_FALSE(is_identity(*b, word({one, one}, {{0, 1}})));
}

TEST_CASE("normal forms give a group") {
  auto m = HnnGroup::make_mitosis(symmetric_s3()->as_subgroup());
  const FgSubgroup gens("m(S3)", m,
                        {m->letter(0), m->letter(1), m->from_base(m->pair(s3("(1 2)"), s3("(1 3)"))),
                         m->from_base(m->pair(s3("(1 2 3)"), s3("()")))});
  Rng rng(9);
  for (int i = 0; i < 200; ++i) {
    const Element x = random_word(gens, 1 + uniform_index(rng, 6), rng);
    const Element y = random_word(gens, 1 + uniform_index(rng, 6), rng);
    const Element z = random_word(gens, 1 + uniform_index(rng, 6), rng);
    CHECK((x * y) * z == x * (y * z));
    CHECK((x * inv(x)).is_identity());
    CHECK(m->word(x.as<BrittonWord>()) == x);
  }
  CHECK(m->letter_index("s") == 1);
  CHECK_THROWS(m->letter_index("q"));
}

TEST_CASE("transversals and splits") {
  auto b = HnnGroup::make_binate(symmetric_s3()->as_subgroup());
  for (auto kind : {SubgroupKind::Plus, SubgroupKind::Minus, SubgroupKind::Diagonal}) {
    const auto reps = b->transversal(kind);
    CHECK(reps.size() == 6);
    CHECK(reps.front().is_identity());
    for (const auto& u : s3_elements()) {
      for (const auto& v : s3_elements()) {
        const Element x = b->pair(u, v);
        const auto [rep, sub] = b->split(kind, x);
        CHECK(rep * sub == x);
        CHECK(b->in_subgroup(kind, sub));
      }
    }
  }
}

TEST_CASE("Bass-Serre ball is a regular tree ball") {
  auto b = HnnGroup::make_binate(symmetric_s3()->as_subgroup());
  const Vertex root = word({b->base()->identity()}, {});
  CHECK(children(*b, root).size() == 12);
  CHECK(children(*b, children(*b, root).front()).size() == 11);
  for (std::size_t r = 0; r <= 3; ++r) CHECK(bass_serre_ball(*b, r).size() == oracle::regular_ball(12, r));
  CHECK(bass_serre_ball(*b, 3).size() == 1597);
  CHECK_THROWS_AS(bass_serre_ball(*b, 3, 100), BudgetExceeded);
}

TEST_CASE("fixed vertices") {
  auto b = HnnGroup::make_binate(symmetric_s3()->as_subgroup());
  const auto minus = bass_serre_fixed_vertices(b->from_base(b->minus(s3("(1 2)"))), 3);
  CHECK(minus.size() == 1);
  CHECK(bass_serre_fixed_vertices(b->from_base(b->diagonal(s3("(1 2)"))), 1).size() >= 2);
  CHECK(bass_serre_fixed_vertices(b->identity(), 2).size() == oracle::regular_ball(12, 2));
  CHECK_THROWS_AS(bass_serre_fixed_vertices(b->identity(), kMaxTreeRadius + 1), BudgetExceeded);
  CHECK(fixed_edge_count(HnnGroup::make_mitosis(symmetric_s3()->as_subgroup())->gamma_minus(), 2) >= 1);
}

TEST_CASE("commuting-conjugate search") {
  auto b = HnnGroup::make_binate(symmetric_s3()->as_subgroup());
  // Raw words c_0 s_1 c_1 ... s_m c_m: 36^(m+1) 2^m per m.
  CHECK(cc_search_space(*b, 0) == 36);
  CHECK(cc_search_space(*b, 2) == 36 + 2 * 36 * 36 + 4ULL * 36 * 36 * 36);
  CHECK(cc_search_space(*b, 2) == 189252);
  const auto z2 = cc_witness_search_b1(cyclic_group(2)->as_subgroup(), 0);
  REQUIRE(z2);
  CHECK(z2->is_identity());
  CHECK_FALSE(cc_witness_search_b1(symmetric_s3()->as_subgroup(), 0));
  CHECK_FALSE(cc_witness_search_b1(symmetric_s3()->as_subgroup(), 1, 2));
  CHECK_THROWS_AS(cc_witness_search_b1(symmetric_s3()->as_subgroup(), 2, 1, 1000), BudgetExceeded);
}

TEST_CASE("mitosis and the binate tower") {
  CHECK(mitosis_check(symmetric_s3()->as_subgroup()).verdict == Verdict::Pass);
  CHECK(mitosis_check(cyclic_group(2)->as_subgroup()).verdict == Verdict::Pass);
  CHECK(mitosis_check(trivial_group()->as_subgroup()).verdict == Verdict::Pass);
  const BinateTower tower(symmetric_s3()->as_subgroup(), 2);
  CHECK(tower.stages() == 2);
  const Element g = s3("(1 2)");
  CHECK(tower.embed(g, 0) == tower.extension(0).from_base(tower.extension(0).minus(g)));
  CHECK_FALSE(tower.embed(g, 0).is_identity());
  CHECK(tower.embed(symmetric_s3()->identity(), 0).is_identity());
  CHECK_THROWS_AS(BinateTower(symmetric_s3()->as_subgroup(), 4), BudgetExceeded);
}

TEST_CASE("free groups reduce freely") {
  auto f = FreeGroup::make(2);
  CHECK(f->parse("abBA").is_identity());
  CHECK(f->parse("ab") * f->parse("Ba") == f->parse("aa"));
  CHECK(f->generator(1) == f->parse("b"));
  CHECK_THROWS_AS(f->parse("ac"), InvalidArgument);
  CHECK_THROWS_AS(f->parse("a?"), ParseError);
}
