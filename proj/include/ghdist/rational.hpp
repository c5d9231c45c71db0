#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

#include "ghdist/errors.hpp"

namespace ghdist {

using BigInt = boost::multiprecision::cpp_int;

// Exact signed rational scalar. cpp_rational keeps values in lowest terms
// with a positive denominator, so distances compare with plain ==.
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& value) {
  std::string text = numerator(value).str();
  if (denominator(value) != 1) {
    text += '/';
    text += denominator(value).str();
  }
  return text;
}

inline bool is_integer(const Rational& value) {
  return denominator(value) == 1;
}

inline std::optional<std::int64_t> to_int64(const BigInt& value) {
  if (value < std::numeric_limits<std::int64_t>::min() ||
      value > std::numeric_limits<std::int64_t>::max()) {
    return std::nullopt;
  }
  return value.convert_to<std::int64_t>();
}

// Largest integer not exceeding value.
inline BigInt rational_floor(const Rational& value) {
  BigInt quotient = numerator(value) / denominator(value);
  if (numerator(value) < 0 && quotient * denominator(value) != numerator(value)) {
    --quotient;
  }
  return quotient;
}

// value^exponent for integer exponents. A negative exponent needs value != 0.
inline Rational rational_pow(const Rational& value, long exponent) {
  using boost::multiprecision::pow;
  if (exponent >= 0) {
    return Rational(pow(numerator(value), static_cast<unsigned>(exponent)),
                    pow(denominator(value), static_cast<unsigned>(exponent)));
  }
  if (value == 0) {
    throw GhError(Errc::InvalidParameter,
                  "zero cannot be raised to a negative power");
  }
  return Rational(pow(denominator(value), static_cast<unsigned>(-exponent)),
                  pow(numerator(value), static_cast<unsigned>(-exponent)));
}

// Accepts an optionally signed integer "p" or a fraction "p/q" with q > 0.
// The result is normalized, so the input need not be in lowest terms.
inline Rational parse_rational(std::string_view text) {
  const auto fail = [&]() -> Rational {
    throw GhError(Errc::ParseError,
                  "expected an integer or p/q with q > 0, got '" +
                      std::string(text) + "'");
  };
  const auto digits_only = [](std::string_view part) {
    if (part.empty()) return false;
    for (char c : part) {
      if (c < '0' || c > '9') return false;
    }
    return true;
  };

  const auto slash = text.find('/');
  std::string_view num_part =
      slash == std::string_view::npos ? text : text.substr(0, slash);
  std::string_view den_part =
      slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);

  bool negative = false;
  if (!num_part.empty() && (num_part.front() == '-' || num_part.front() == '+')) {
    negative = num_part.front() == '-';
    num_part.remove_prefix(1);
  }
  if (!digits_only(num_part)) return fail();

  BigInt num{std::string(num_part)};
  if (negative) num = -num;

  BigInt den = 1;
  if (slash != std::string_view::npos) {
    if (!digits_only(den_part)) return fail();
    den = BigInt{std::string(den_part)};
    if (den == 0) return fail();
  }
  return Rational(num, den);
}

}  // namespace ghdist
