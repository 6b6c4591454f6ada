#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace symgrowth {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q" or "p" (optionally signed). Decimals are rejected: every
/// threshold in the library is an exact fraction.
Rational parse_rational(std::string_view text);

/// Lowest-terms rendering: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
    return Rational(Integer(num), Integer(den));
}

inline Rational rational_pow(const Rational& base, std::uint64_t exponent) {
    Rational result(1);
    Rational acc = base;
    while (exponent != 0) {
        if (exponent & 1U) result *= acc;
        exponent >>= 1U;
        if (exponent != 0) acc *= acc;
    }
    return result;
}

/// Smallest m >= 0 with value * ratio^m <= 1, for 0 <= ratio < 1.
/// Equals ceil(log value / -log ratio) when value >= 1 and ratio > 0.
std::uint64_t ceil_log_steps(const Rational& value, const Rational& ratio);

}  // namespace symgrowth
