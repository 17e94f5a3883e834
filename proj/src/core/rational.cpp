#include "displace/core/rational.hpp"

#include "displace/core/errors.hpp"

namespace displace {

namespace {

bool integer_is_power_of_two(const mpz_class& z) {
  return z > 0 && mpz_popcount(z.get_mpz_t()) == 1;
}

}  // namespace

Rational make_rational(long numerator, long denominator) {
  if (denominator == 0) {
    throw InvalidArgument("rational with zero denominator");
  }
  Rational q(numerator, denominator);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) {
    throw ParseError("empty rational literal");
  }
  Rational q;
  if (q.set_str(s, 10) != 0) {
    throw ParseError("malformed rational literal '" + s + "'");
  }
  if (q.get_den() == 0) {
    throw ParseError("rational literal '" + s + "' has zero denominator");
  }
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_dyadic(const Rational& q) { return integer_is_power_of_two(q.get_den()); }

bool is_power_of_two(const Rational& q) {
  return q > 0 && integer_is_power_of_two(q.get_num()) && integer_is_power_of_two(q.get_den());
}

}  // namespace displace
