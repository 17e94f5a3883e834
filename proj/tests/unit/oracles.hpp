#pragma once

// Independent reference computations. They avoid the library's group laws,
// checkers and linear algebra so agreement is meaningful.

#include <cstdint>
#include <set>
#include <vector>

#include "displace/core/element.hpp"
#include "displace/core/rational.hpp"

namespace oracle {

/// 0-based image array; (a * b)(x) = a(b(x)).
using Perm = std::vector<int>;

Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& a);
Perm identity(std::size_t n);
std::uint64_t order(const Perm& a);

/// All products of the generators (breadth-first closure).
std::set<Perm> closure(const std::vector<Perm>& gens, std::size_t degree);

/// Every element of A commutes with every element of B.
bool all_commute(const std::set<Perm>& a, const std::set<Perm>& b);

/// Imprimitive action of (f, k) in B ≀ Z/n, B ≤ Sym(k), on n blocks of k
/// points: (b, x) ↦ (b + k, f(b + k)(x)), nested for towers.
Perm wreath_to_perm(const displace::Element& x);
std::size_t wreath_degree(const displace::Group& g);

/// Z/p-conjugate conditions for H checked on full closures.
bool is_zp_witness(const std::set<Perm>& h, const Perm& t, int p);

/// x0 and x1 of the F-copy by their defining formulas.
displace::Rational x0(const displace::Rational& x);
displace::Rational x0_inverse(const displace::Rational& x);
displace::Rational x1(const displace::Rational& x);
displace::Rational x1_inverse(const displace::Rational& x);

struct Orbit {
  std::size_t points;
  displace::Rational max_gap;
};
Orbit f_orbit(const displace::Rational& start, std::size_t max_length);

/// dim of {X : X A = A X for all A} by elimination on the Kronecker system.
std::size_t centralizer_dimension(const std::vector<std::vector<std::vector<long>>>& mats);

/// Vertices of a ball in the regular tree of the given degree.
std::uint64_t regular_ball(std::uint64_t degree, std::uint64_t radius);

}  // namespace oracle
