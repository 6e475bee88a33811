#include "legortho/rational.hpp"

#include <cstdlib>

namespace legortho {

Integer factorial(unsigned n) {
  Integer result = 1;
  for (unsigned i = 2; i <= n; ++i) {
    result *= i;
  }
  return result;
}

Integer binomial(unsigned n, unsigned k) {
  if (k > n) {
    return 0;
  }
  k = std::min(k, n - k);
  Integer result = 1;
  for (unsigned i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

Rational power_of_two(int e) {
  Integer p = 1;
  p <<= static_cast<unsigned>(std::abs(e));
  return e >= 0 ? Rational(p) : Rational(Integer(1), p);
}

std::string to_string(const Rational &r) { return r.str(); }

} // namespace legortho
