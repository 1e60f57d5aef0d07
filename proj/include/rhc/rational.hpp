#pragma once

// Exact rational parameters. Every threshold comparison in the container
// engine (|A| <= (1-eps)M, d_L(v) < z, ...) is done in exact arithmetic so a
// run is reproducible bit for bit regardless of how the numbers were typed.

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rhc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  return Rational(BigInt(num), BigInt(den));
}

// Accepts "3", "-2", "1/10", "0.125", "2.5e-3", "1E4". Decimal input is
// converted exactly (0.1 becomes 1/10, never the nearest double).
inline Rational parse_rational(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
  };
  if (text.empty()) return fail();

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Rational num = parse_rational(text.substr(0, slash));
    Rational den = parse_rational(text.substr(slash + 1));
    if (den == 0) return fail();
    return num / den;
  }

  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') {
    negative = text[pos] == '-';
    ++pos;
  }
  BigInt mantissa = 0;
  std::int64_t scale = 0;
  bool any_digit = false;
  bool seen_point = false;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mantissa = mantissa * 10 + (c - '0');
      if (seen_point) --scale;
      any_digit = true;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!any_digit) return fail();
  if (pos < text.size()) {
    if (text[pos] != 'e' && text[pos] != 'E') return fail();
    ++pos;
    bool exp_negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      exp_negative = text[pos] == '-';
      ++pos;
    }
    if (pos >= text.size()) return fail();
    std::int64_t exponent = 0;
    for (; pos < text.size(); ++pos) {
      char c = text[pos];
      if (!std::isdigit(static_cast<unsigned char>(c)) || exponent > 100000) return fail();
      exponent = exponent * 10 + (c - '0');
    }
    scale += exp_negative ? -exponent : exponent;
  }
  Rational value(mantissa);
  BigInt power = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(scale < 0 ? -scale : scale));
  if (scale < 0) value /= Rational(power);
  else value *= Rational(power);
  return negative ? Rational(-value) : value;
}

// Canonical text form: "p" for integers, "p/q" otherwise (lowest terms).
inline std::string to_string(const Rational& value) {
  const BigInt& num = boost::multiprecision::numerator(value);
  const BigInt& den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline double to_double(const Rational& value) { return value.convert_to<double>(); }

inline BigInt floor_int(const Rational& value) {
  const BigInt& num = boost::multiprecision::numerator(value);
  const BigInt& den = boost::multiprecision::denominator(value);
  BigInt q = num / den;
  if (num < 0 && q * den != num) --q;
  return q;
}

inline BigInt ceil_int(const Rational& value) { return -floor_int(Rational(-value)); }

// floor(value) clamped into [0, limit]; the usual way a real degree bound
// becomes an integer capacity.
inline std::size_t floor_clamped(const Rational& value, std::size_t limit) {
  BigInt f = floor_int(value);
  if (f <= 0) return 0;
  if (f >= limit) return limit;
  return f.convert_to<std::size_t>();
}

inline double log2_big(const BigInt& value) {
  if (value <= 0) throw std::domain_error("log2 of a non-positive integer");
  std::size_t bits = boost::multiprecision::msb(value) + 1;
  if (bits <= 60) return std::log2(value.convert_to<double>());
  BigInt top = value >> (bits - 60);
  return std::log2(top.convert_to<double>()) + static_cast<double>(bits - 60);
}

}  // namespace rhc
