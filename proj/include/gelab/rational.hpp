#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cctype>
#include <span>
#include <string>
#include <string_view>

#include "gelab/errors.hpp"

namespace gelab {

// Expression templates off: `auto` on an arithmetic expression must yield a value.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }
inline double to_double(double x) { return x; }

// "a/b" in lowest terms, or "a" when the denominator is 1.
inline std::string to_string(const Rational& r) { return r.str(); }

inline BigInt lcm_of_denominators(std::span<const Rational> values) {
  BigInt r = 1;
  for (const auto& v : values) {
    r = boost::multiprecision::lcm(r, boost::multiprecision::denominator(v));
  }
  return r;
}

// Accepts "a/b", an integer, or a terminating decimal such as "0.25" or
// "1.5e-2". Decimals are expanded exactly: 0.1 becomes 1/10, never the
// binary approximation.
namespace detail {

// GMP treats a leading 0 as an octal prefix.
inline BigInt decimal_bigint(std::string_view digits) {
  auto first = digits.find_first_not_of('0');
  return first == std::string_view::npos ? BigInt(0) : BigInt(std::string(digits.substr(first)));
}

}  // namespace detail

inline Rational parse_rational(std::string_view text) {
  auto fail = [&] { return ParseError("not a rational number: '" + std::string(text) + "'"); };
  if (text.empty()) throw fail();

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    auto digits_only = [](std::string_view s, bool allow_sign) {
      if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
      if (s.empty()) return false;
      for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
      }
      return true;
    };
    if (!digits_only(num, true) || !digits_only(den, false)) throw fail();
    bool minus = num[0] == '-';
    if (num[0] == '+' || num[0] == '-') num.remove_prefix(1);
    BigInt n = detail::decimal_bigint(num);
    if (minus) n = -n;
    BigInt d = detail::decimal_bigint(den);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(n, d);
  }

  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') negative = text[pos++] == '-';
  std::string mantissa;
  long exponent = 0;
  bool seen_digit = false;
  bool seen_point = false;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mantissa.push_back(c);
      seen_digit = true;
      if (seen_point) --exponent;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) throw fail();
  if (pos < text.size()) {
    if (text[pos] != 'e' && text[pos] != 'E') throw fail();
    ++pos;
    bool exp_negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) exp_negative = text[pos++] == '-';
    if (pos == text.size()) throw fail();
    long e = 0;
    for (; pos < text.size(); ++pos) {
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) throw fail();
      e = e * 10 + (text[pos] - '0');
      if (e > 4000) throw fail();
    }
    exponent += exp_negative ? -e : e;
  }
  BigInt n = detail::decimal_bigint(mantissa);
  BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(exponent < 0 ? -exponent : exponent));
  Rational value = exponent < 0 ? Rational(n, scale) : Rational(n * scale);
  return negative ? Rational(-value) : value;
}

}  // namespace gelab
