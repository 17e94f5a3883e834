#include <algorithm>
#include <atomic>

#include "displace/core/errors.hpp"
#include "displace/core/group_ops.hpp"
#include "displace/core/parallel.hpp"
#include "displace/perm/perm_group.hpp"
#include "doctest.h"

using namespace displace;

namespace {

Element s3(const char* cycles) { return symmetric_s3()->parse(cycles); }

}  // namespace

TEST_CASE("rationals parse, canonicalize and print as n/d") {
  CHECK(parse_rational("6/4") == make_rational(3, 2));
  CHECK(parse_rational("-3") == make_rational(-3));
  CHECK(to_string(make_rational(2, -4)) == "-1/2");
  CHECK(to_string(make_rational(5)) == "5/1");
  CHECK(is_dyadic(make_rational(3, 8)));
  CHECK_FALSE(is_dyadic(make_rational(1, 3)));
  CHECK(is_power_of_two(make_rational(1, 4)));
  CHECK_FALSE(is_power_of_two(make_rational(3, 4)));
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
}

TEST_CASE("conventions: conj(t, g) = t g t^-1 and [a, b] = a b a^-1 b^-1") {
  const Element a = s3("(1 2)");
  const Element b = s3("(1 2 3)");
  CHECK(conj(b, a) == b * a * inv(b));
  CHECK(commutator(a, b) == a * b * inv(a) * inv(b));
  CHECK(power(b, 3).is_identity());
  CHECK(power(b, -1) == inv(b));
  CHECK(power(b, 0).is_identity());
  CHECK(*order_of(a) == 2);
  CHECK(*order_of(b) == 3);
  CHECK(commute(b, power(b, 2)));
  CHECK_FALSE(commute(a, b));
}

TEST_CASE("group axioms on all of S3") {
  const auto elements = enumerate_group(*symmetric_s3());
  REQUIRE(elements.size() == 6);
  CHECK(elements.front().is_identity());
  for (const auto& x : elements) {
    CHECK((x * inv(x)).is_identity());
    for (const auto& y : elements) {
      for (const auto& z : elements) CHECK((x * y) * z == x * (y * z));
    }
  }
}

TEST_CASE("subgroups normalize their generators") {
  const FgSubgroup h("H", symmetric_s3(), {s3("()"), s3("(1 2)"), s3("(1 2)")});
  CHECK(h.generators().size() == 1);
  CHECK(FgSubgroup("1", symmetric_s3(), {s3("()")}).trivial());
  CHECK(h.is_abelian());
  CHECK_FALSE(symmetric_s3()->as_subgroup().is_abelian());
  CHECK(closure(symmetric_s3()->as_subgroup()).size() == 6);
  CHECK_THROWS_AS(closure(symmetric_s3()->as_subgroup(), 3), BudgetExceeded);
}

TEST_CASE("mixing contexts is an error") {
  const Element a = s3("(1 2)");
  const Element b = PermGroup::symmetric(4)->parse("(1 2)");
  CHECK_THROWS_AS(mul(a, b), ContextMismatch);
  CHECK_THROWS_AS(FgSubgroup("H", symmetric_s3(), {b}), ContextMismatch);
}

TEST_CASE("subgroups_commute reports a reverifiable counterexample") {
  const FgSubgroup h("H", symmetric_s3(), {s3("(1 2)")});
  const FgSubgroup k("K", symmetric_s3(), {s3("(2 3)")});
  const PropertyReport r = subgroups_commute(h, k);
  CHECK(r.failed());
  REQUIRE(r.counterexample);
  CHECK(r.counterexample->reverify());
  CHECK(subgroups_commute(h, h).passed());
}

TEST_CASE("uniform_index stays in range and random_word is seed-determined") {
  Rng rng(1);
  for (int i = 0; i < 1000; ++i) CHECK(uniform_index(rng, 7) < 7);
  const auto gamma = symmetric_s3()->as_subgroup();
  Rng a(42);
  Rng b(42);
  for (int i = 0; i < 20; ++i) CHECK(random_word(gamma, 5, a) == random_word(gamma, 5, b));
}

TEST_CASE("parallel_first_index agrees with a sequential scan for every job count") {
  const auto predicate = [](std::uint64_t i) { return i % 997 == 996 && i > 5000; };
  std::optional<std::uint64_t> expected;
  for (std::uint64_t i = 0; i < 20000; ++i) {
    if (predicate(i)) {
      expected = i;
      break;
    }
  }
  REQUIRE(expected);
  for (unsigned jobs = 1; jobs <= 4; ++jobs) CHECK(parallel_first_index(20000, jobs, predicate) == expected);
  CHECK_FALSE(parallel_first_index(100, 3, [](std::uint64_t) { return false; }));
}

TEST_CASE("verdict strings round-trip") {
  for (auto v : {Verdict::Pass, Verdict::Fail, Verdict::BoundedPass, Verdict::NotApplicable}) {
    CHECK(parse_verdict(to_string(v)) == v);
  }
  CHECK_THROWS(parse_verdict("maybe"));
}
