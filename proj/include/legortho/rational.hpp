#pragma once

#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace legortho {

// Expression templates are disabled so both types behave as plain values
// inside std::vector and generic code.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/// Exact fraction in lowest terms with a positive denominator; zero is 0/1.
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

/// 2^e for any integer e.
Rational power_of_two(int e);

std::string to_string(const Rational &r);

inline double to_double(const Rational &r) { return static_cast<double>(r); }

} // namespace legortho
