#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace bmv {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/// Arbitrary-precision fraction; GMP keeps every value in lowest terms with a
/// positive denominator.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

Rational make_rational(const Integer& num, const Integer& den);

/// Accepts "p", "p/q", and decimal strings such as "0.001", "-1.25" or "1e-3".
/// Decimals are converted exactly by powers of ten.
Rational parse_rational(std::string_view text);

/// Canonical "num/den" form; the denominator is always printed.
std::string to_string(const Rational& r);

/// Human form: "num" when the value is an integer, else "num/den".
std::string to_display(const Rational& r);

/// Binomial coefficient, zero when k is outside [0, n].
Integer binomial(int n, int k);

Integer pow2(int k);

int sign(const Rational& r);

}  // namespace bmv
