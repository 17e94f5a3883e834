#include <set>

#include "displace/core/errors.hpp"
#include "displace/perm/perm_group.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace displace;

TEST_CASE("cycle notation parses and prints canonically") {
  const auto p = Permutation::parse(4, "(3 1)(2 4)");
  CHECK(p.to_string() == "(1 3)(2 4)");
  CHECK(Permutation::parse(3, "()").is_identity());
  CHECK(Permutation::parse(3, "()").to_string() == "()");
  CHECK(Permutation::parse(5, "(1 2 3)").cycles() == std::vector<std::vector<Permutation::Point>>{{1, 2, 3}});
  CHECK_THROWS_AS(Permutation::parse(3, "(1 4)"), InvalidArgument);
  CHECK_THROWS_AS(Permutation::parse(3, "(1 1)"), InvalidArgument);
  CHECK_THROWS_AS(Permutation::parse(3, "(1 2"), ParseError);
}

TEST_CASE("composition is function composition") {
  const auto a = Permutation::parse(3, "(1 2)");
  const auto b = Permutation::parse(3, "(2 3)");
  // (a b)(2) = a(b(2)) = a(3) = 3.
  CHECK(a.compose(b)(1) == 2);
  CHECK(a.compose(b) == Permutation::parse(3, "(1 2 3)"));
  CHECK(a.compose(a).is_identity());
  CHECK(Permutation::parse(3, "(1 2 3)").inverse() == Permutation::parse(3, "(1 3 2)"));
  CHECK(a.extended(5) == Permutation::parse(5, "(1 2)"));
}

TEST_CASE("symmetric groups: orders and canonical enumeration") {
  for (std::size_t n = 1; n <= 5; ++n) {
    auto g = PermGroup::symmetric(n);
    std::uint64_t fact = 1;
    for (std::size_t k = 2; k <= n; ++k) fact *= k;
    CHECK(*g->order() == fact);
    std::set<Permutation> seen;
    for (std::uint64_t i = 0; i < fact; ++i) seen.insert(g->element_at(i).as<Permutation>());
    CHECK(seen.size() == fact);
    CHECK(g->element_at(0).is_identity());
  }
}

TEST_CASE("generated subgroups match a closure oracle") {
  const auto g = PermGroup::generated(6, {Permutation::parse(6, "(1 2)(3 4)"), Permutation::parse(6, "(1 3 5)")}, "H");
  const auto expected = oracle::closure({{1, 0, 3, 2, 4, 5}, {2, 1, 4, 3, 0, 5}}, 6);
  CHECK(*g->order() == expected.size());
  CHECK(g->contains(Permutation::parse(6, "(1 2)(3 4)")));
  CHECK_FALSE(g->contains(Permutation::parse(6, "(1 6)")));
  CHECK_THROWS_AS(g->element(Permutation::parse(6, "(1 6)")), InvalidArgument);
}

TEST_CASE("named small groups") {
  CHECK(*symmetric_s3()->order() == 6);
  CHECK(*cyclic_group(4)->order() == 4);
  CHECK(*trivial_group()->order() == 1);
  CHECK(symmetric_s3()->generators().size() == 2);
}
