#include <set>

#include "displace/checkers/checkers.hpp"
#include "displace/core/errors.hpp"
#include "displace/perm/perm_group.hpp"
#include "displace/wreath/wreath.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace displace;

namespace {

std::vector<oracle::Perm> perms_of(const FgSubgroup& h) {
  std::vector<oracle::Perm> out;
  for (const auto& g : h.generators()) out.push_back(oracle::wreath_to_perm(g));
  return out;
}

TowerSpec explicit_spec(std::vector<std::int64_t> prefix) {
  TowerSpec spec;
  spec.base = symmetric_s3();
  spec.prefix = std::move(prefix);
  return spec;
}

}  // namespace

TEST_CASE("S3 wr Z/3 matches its imprimitive permutation realization") {
  auto w = WreathGroup::make(symmetric_s3(), 3);
  const auto elements = enumerate_group(*w);
  REQUIRE(elements.size() == 648);
  CHECK(*w->order() == 648);
  std::set<oracle::Perm> images;
  for (const auto& x : elements) images.insert(oracle::wreath_to_perm(x));
  CHECK(images.size() == 648);
  std::vector<oracle::Perm> gens = {oracle::wreath_to_perm(w->shift_generator())};
  for (const auto& g : symmetric_s3()->generators()) gens.push_back(oracle::wreath_to_perm(w->embed(g)));
  CHECK(oracle::closure(gens, 9) == images);
  Rng rng(3);
  for (int i = 0; i < 300; ++i) {
    const auto& a = elements[uniform_index(rng, elements.size())];
    const auto& b = elements[uniform_index(rng, elements.size())];
    CHECK(oracle::wreath_to_perm(a * b) == oracle::compose(oracle::wreath_to_perm(a), oracle::wreath_to_perm(b)));
    CHECK(oracle::wreath_to_perm(inv(a)) == oracle::inverse(oracle::wreath_to_perm(a)));
  }
}

TEST_CASE("wreath multiplication moves the lamp at j to j + k") {
  auto w = WreathGroup::make(symmetric_s3(), 0);
  const Element x = symmetric_s3()->parse("(1 2)");
  const Element t = w->shift_generator();
  CHECK(t * w->lamp(2, x) * inv(t) == w->lamp(3, x));
  CHECK(power(t, 5) == w->element({}, 5));
  CHECK_FALSE(w->order());
  CHECK(w->element({{1, x}, {1, x}}, 0).is_identity());
  CHECK(WreathGroup::make(symmetric_s3(), 2)->element({{3, x}}, 3) == WreathGroup::make(symmetric_s3(), 2)->element({{1, x}}, 1));
}

TEST_CASE("tower sequences") {
  TowerSpec c;
  c.base = symmetric_s3();
  c.rule = TowerSpec::Rule::Constant;
  c.constant = 3;
  CHECK(c.n(5) == 3);
  TowerSpec p = c;
  p.rule = TowerSpec::Rule::IncreasingPrimes;
  CHECK(p.n(1) == 2);
  CHECK(p.n(4) == 7);
  CHECK(first_primes(5) == std::vector<std::int64_t>{2, 3, 5, 7, 11});
  CHECK_THROWS_AS(explicit_spec({2, 2}).n(3), InvalidArgument);
  CHECK(parse_tower_rule(to_string(TowerSpec::Rule::PrimeProducts)) == TowerSpec::Rule::PrimeProducts);
}

TEST_CASE("tower levels embed and match the permutation oracle") {
  Tower tower(explicit_spec({2, 3}), 2);
  CHECK(*tower.level(1)->order() == 72);
  CHECK(*tower.level(2)->order() == 72ULL * 72 * 72 * 3);
  const auto g1 = tower.level_generators(1);
  const auto embedded = tower.embed(g1, 1, 2);
  std::set<oracle::Perm> image = oracle::closure(perms_of(embedded), 18);
  CHECK(image.size() == 72);
  const auto membership = tower.level_membership(1, 2);
  CHECK(membership.contains(embedded.generators().front()));
  CHECK_FALSE(membership.contains(tower.shift_generator(2)));
}

TEST_CASE("zn_witness at levels 1 to 4 re-verifies and agrees with a closure oracle") {
  Tower tower(explicit_spec({2, 2, 2, 2}), 4);
  for (std::size_t i = 1; i <= 4; ++i) {
    const auto h = tower.level_generators(i - 1);
    const auto w = zn_witness(tower, h, i - 1, i, 2);
    CHECK(w.report.verdict == Verdict::Pass);
    CHECK(verify(w.certificate).verdict == Verdict::Pass);
    if (i <= 2) {
      const auto hi = tower.embed(h, i - 1, i);
      const auto t = std::get<CznWitness>(w.certificate.witness).t;
      CHECK(oracle::is_zp_witness(oracle::closure(perms_of(hi), oracle::wreath_degree(*tower.level(i))),
                                  oracle::wreath_to_perm(t), 2));
    }
  }
  CHECK_THROWS_AS(zn_witness(tower, tower.level_generators(0), 0, 1, 3), InvalidArgument);
}

TEST_CASE("converse: exhaustive search agrees with the closure oracle") {
  for (std::int64_t n : {2, 3}) {
    auto w = WreathGroup::make(symmetric_s3(), n);
    FgSubgroup h("S3", w, {w->embed(symmetric_s3()->parse("(1 2)")), w->embed(symmetric_s3()->parse("(1 2 3)"))});
    const auto hp = oracle::closure(perms_of(h), 3 * n);
    std::optional<std::uint64_t> first;
    for (std::uint64_t i = 0; i < *w->order() && !first; ++i) {
      if (oracle::is_zp_witness(hp, oracle::wreath_to_perm(w->element_at(i)), 2)) first = i;
    }
    const auto hit = brute_search_zp_witness(*w, h, 2, 2);
    CHECK(hit.has_value() == first.has_value());
    if (hit && first) CHECK(*hit == w->element_at(*first));
  }
}

TEST_CASE("torsion obstruction over S3 wr Z/3") {
  auto w = WreathGroup::make(symmetric_s3(), 3);
  FgSubgroup h("S3", w, {w->embed(symmetric_s3()->parse("(1 2)")), w->embed(symmetric_s3()->parse("(1 2 3)"))});
  for (const auto& t : enumerate_group(*w)) {
    const auto order = oracle::order(oracle::wreath_to_perm(t));
    REQUIRE(*order_of(t) == order);
    CHECK(torsion_obstruction_check(h, t).verdict == Verdict::Pass);
  }
  FgSubgroup abelian("Z3", w, {w->embed(symmetric_s3()->parse("(1 2 3)"))});
  CHECK(torsion_obstruction_check(abelian, w->shift_generator()).verdict == Verdict::NotApplicable);
}

TEST_CASE("Hall analogue in Sym(3n) agrees with the closure oracle") {
  for (std::int64_t n : {2, 3, 4}) {
    const auto w = sym_zn_witness(symmetric_s3()->as_subgroup(), n);
    CHECK(w.report.verdict == Verdict::Pass);
    const auto& t = std::get<CznWitness>(w.certificate.witness).t;
    std::vector<oracle::Perm> gens;
    for (const auto& g : w.certificate.subject.generators()) gens.push_back(oracle::wreath_to_perm(g));
    CHECK(oracle::is_zp_witness(oracle::closure(gens, 3 * n), oracle::wreath_to_perm(t), static_cast<int>(n)));
  }
}
