#include "displace/core/errors.hpp"
#include "displace/pl/pl_group.hpp"
#include "displace/pl/pl_tower.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace displace;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

PLHomeo bump(long lo, long mid, long hi, long image) {
  return PLHomeo::from_breakpoints({{q(lo), q(lo)}, {q(mid), q(image)}, {q(hi), q(hi)}});
}

}  // namespace

TEST_CASE("canonical breakpoints") {
  const auto f = PLHomeo::from_breakpoints({{q(0), q(0)}, {q(1), q(2)}, {q(2), q(4)}, {q(3), q(5)}, {q(6), q(6)}});
  CHECK(f.breakpoints().size() == 4);
  CHECK(PLHomeo::from_breakpoints({{q(0), q(0)}, {q(5), q(5)}}).is_identity());
  CHECK_THROWS_AS(PLHomeo::from_breakpoints({{q(0), q(0)}, {q(1), q(-1)}, {q(2), q(2)}}), InvalidArgument);
  CHECK_THROWS_AS(PLHomeo::from_breakpoints({{q(0), q(1)}, {q(2), q(2)}}), InvalidArgument);
}

TEST_CASE("composition and inverse agree with pointwise evaluation") {
  const auto f = bump(0, 1, 4, 3);
  const auto g = bump(2, 3, 6, 5);
  const auto fg = pl_compose(f, g);
  for (long n = -4; n <= 32; ++n) {
    const Rational x = q(n, 4);
    CHECK(fg(x) == f(g(x)));
    CHECK(f.inverse()(f(x)) == x);
    CHECK(f.preimage(x) == f.inverse()(x));
  }
  CHECK(pl_compose(f, f.inverse()).is_identity());
}

TEST_CASE("Thompson generators") {
  auto [x0, x1] = thompson_generators();
  CHECK(x0 == PLHomeo::from_breakpoints({{q(0), q(0)}, {q(1, 2), q(1, 4)}, {q(3, 4), q(1, 2)}, {q(1), q(1)}}));
  CHECK(x0(q(1, 2)) == q(1, 4));
  for (long n = 0; n <= 64; ++n) {
    CHECK(x0(q(n, 64)) == oracle::x0(q(n, 64)));
    CHECK(x1(q(n, 64)) == oracle::x1(q(n, 64)));
  }
  for (const auto& s : x0.slopes()) CHECK(is_power_of_two(s));
  CHECK(in_standard_f_copy(x0));
  CHECK(in_standard_f_copy(x1));
  CHECK_FALSE(in_standard_f_copy(bump(0, 1, 4, 3)));
}

TEST_CASE("unique fixed point element") {
  const auto h = unique_fixed_point_element();
  CHECK(h(q(1, 2)) == q(1, 2));
  CHECK(pl_support(h) == IntervalSet({{q(0), q(1, 2)}, {q(1, 2), q(1)}}));
  for (long n = 1; n < 32; ++n) {
    const Rational x = q(n, 32);
    if (x < q(1, 2)) CHECK(h(x) > x);
    if (x > q(1, 2)) CHECK(h(x) < x);
  }
}

TEST_CASE("support, images and restriction") {
  const auto f = bump(0, 1, 4, 3);
  CHECK(f.support() == IntervalSet::single(q(0), q(4)));
  CHECK(f.image(OpenInterval{q(0), q(1)}) == OpenInterval{q(0), q(3)});
  auto [x0, x1] = thompson_generators();
  const auto far = affine_copy(x0, {q(0), q(1)}, {q(2), q(3)});
  CHECK(far.support() == IntervalSet::single(q(2), q(3)));
  CHECK(affine_copy(far, {q(2), q(3)}, {q(0), q(1)}) == x0);
  CHECK(affine_copy(x0, {q(0), q(1)}, {q(0), q(1)}) == x0);
  CHECK_THROWS_AS(affine_copy(f, {q(0), q(1)}, {q(2), q(3)}), InvalidArgument);
  const auto both = pl_compose(x0, far);
  CHECK(restrict_to(both, IntervalSet::single(q(2), q(3))) == far);
  CHECK(intersect(IntervalSet::single(q(0), q(2)), IntervalSet::single(q(1), q(3))) == IntervalSet::single(q(1), q(2)));
}

TEST_CASE("displaces") {
  const auto tower = tower_gamma(2);
  const IntervalSet unit = IntervalSet::single(q(0), q(1));
  CHECK(displaces(tower.dissipator(2), unit, 50).passed());
  CHECK(displaces(PLHomeo::identity(), unit, 1).failed());
  CHECK(displaces(thompson_generators().first, unit, 1).failed());
}

TEST_CASE("tower construction follows the dissipator formula") {
  CHECK(tower_gamma(1).dissipators.empty());
  CHECK(tower_gamma(1).intervals == std::vector<OpenInterval>{{q(0), q(1)}});
  CHECK_THROWS_AS(tower_gamma(0), InvalidArgument);
  CHECK_THROWS_AS(tower_gamma(kMaxPLTowerDepth + 1), InvalidArgument);
  const auto tower = tower_gamma(3);
  // I = (l, r), s = r - l + 1, R = r + 50 s: breakpoints (l-1, l-1), (l, l+s), (R, R+s), (R+s+1, R+s+1).
  Rational l = 0;
  Rational r = 1;
  for (std::size_t i = 2; i <= 3; ++i) {
    const Rational s = r - l + 1;
    const Rational big = r + 50 * s;
    const auto expected = PLHomeo::from_breakpoints({{l - 1, l - 1}, {l, l + s}, {big, big + s}, {big + s + 1, big + s + 1}});
    CHECK(tower.dissipator(i) == expected);
    l = l - 1;
    r = big + s + 1;
    CHECK(tower.interval(i) == OpenInterval{l, r});
  }
  CHECK(tower.dissipator(2) ==
        PLHomeo::from_breakpoints({{q(-1), q(-1)}, {q(0), q(2)}, {q(101), q(103)}, {q(104), q(104)}}));
  CHECK(tower.dissipator(3) ==
        PLHomeo::from_breakpoints({{q(-2), q(-2)}, {q(-1), q(105)}, {q(5404), q(5510)}, {q(5511), q(5511)}}));
  CHECK(tower.generators(3).size() == 4);
}

TEST_CASE("orbit density sample matches an independent orbit computation") {
  const auto expected = oracle::f_orbit(q(1, 3), 12);
  const auto sample = sample_orbit_density(q(1, 3), 12, q(1, 16));
  CHECK(sample.points == expected.points);
  CHECK(sample.max_gap == expected.max_gap);
  CHECK(sample.points == 1360);
  CHECK(sample.max_gap == q(43, 8192));
  CHECK(sample.dense);
  CHECK_FALSE(sample_orbit_density(q(1, 3), 1, q(1, 16)).dense);
}

TEST_CASE("F-copy membership oracle") {
  const auto oracle = f_copy_membership();
  auto pl = PLGroup::instance();
  auto [x0, x1] = thompson_generators();
  CHECK(oracle.contains(pl->element(pl_compose(x0, x1.inverse()))));
  CHECK_FALSE(oracle.contains(pl->element(tower_gamma(2).dissipator(2))));
}
