#include "shg/numeric.hpp"

#include <stdexcept>

namespace shg {

Integer falling_factorial(long long x, long long len) {
  if (len < 0) throw std::invalid_argument("falling_factorial: negative length");
  if (len == 0) return 1;
  if (x < 0) return 0;
  if (len > x) return 0;  // chain crosses zero
  Integer result = 1;
  for (long long i = 0; i < len; ++i) result *= Integer(x - i);
  return result;
}

Integer factorial(long long m) {
  if (m < 0) throw std::invalid_argument("factorial: negative argument");
  return falling_factorial(m, m);
}

std::optional<Rational> exact_sqrt(const Rational& value) {
  if (value < 0) return std::nullopt;
  if (value == 0) return Rational(0);
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  const Integer rn = boost::multiprecision::sqrt(num);
  const Integer rd = boost::multiprecision::sqrt(den);
  if (rn * rn != num || rd * rd != den) return std::nullopt;
  return Rational(rn) / Rational(rd);
}

Real to_real(const Rational& q) {
  return Real(boost::multiprecision::numerator(q)) /
         Real(boost::multiprecision::denominator(q));
}

}  // namespace shg
