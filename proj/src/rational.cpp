#include "bmv/rational.hpp"

#include "bmv/errors.hpp"

#include <cctype>
#include <string>

namespace bmv {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw RangeError("zero denominator");
  return Rational(num) / Rational(den);
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// Leading zeros would otherwise select octal parsing.
Integer decimal_integer(std::string_view digits) {
  const auto first = digits.find_first_not_of('0');
  if (first == std::string_view::npos) return 0;
  return Integer(std::string(digits.substr(first)));
}

Integer pow10(int k) {
  Integer r = 1;
  for (int i = 0; i < k; ++i) r *= 10;
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view original = text;
  auto fail = [&](const std::string& why, std::size_t pos) -> ParseError {
    return ParseError("invalid rational '" + std::string(original) + "': " + why, pos);
  };
  if (text.empty()) throw fail("empty string", 0);

  std::size_t offset = 0;
  bool negative = false;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    text.remove_prefix(1);
    offset = 1;
  }

  Rational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!all_digits(num)) throw fail("numerator is not an integer", offset);
    if (!all_digits(den)) throw fail("denominator is not an integer", offset + slash + 1);
    const Integer d = decimal_integer(den);
    if (d == 0) throw fail("zero denominator", offset + slash + 1);
    value = make_rational(decimal_integer(num), d);
  } else {
    int exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
      auto exp_text = text.substr(e + 1);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
        exp_negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      if (!all_digits(exp_text) || exp_text.size() > 6)
        throw fail("bad exponent", offset + e + 1);
      exponent = std::stoi(std::string(exp_text)) * (exp_negative ? -1 : 1);
      text = text.substr(0, e);
    }
    auto dot = text.find('.');
    std::string digits;
    int fraction_digits = 0;
    if (dot == std::string_view::npos) {
      digits = std::string(text);
    } else {
      auto whole = text.substr(0, dot);
      auto frac = text.substr(dot + 1);
      if (whole.empty() && frac.empty()) throw fail("no digits", offset);
      if (!whole.empty() && !all_digits(whole)) throw fail("bad integer part", offset);
      if (!frac.empty() && !all_digits(frac)) throw fail("bad fractional part", offset + dot + 1);
      digits = std::string(whole) + std::string(frac);
      fraction_digits = static_cast<int>(frac.size());
    }
    if (!all_digits(digits)) throw fail("not a number", offset);
    int shift = exponent - fraction_digits;
    const Integer mantissa = decimal_integer(digits);
    value = shift >= 0 ? Rational(mantissa * pow10(shift)) : make_rational(mantissa, pow10(-shift));
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

std::string to_display(const Rational& r) {
  if (boost::multiprecision::denominator(r) == 1) return boost::multiprecision::numerator(r).str();
  return to_string(r);
}

Integer binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Integer r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Integer pow2(int k) {
  Integer r = 1;
  r <<= k;
  return r;
}

int sign(const Rational& r) { return r.sign(); }

}  // namespace bmv
