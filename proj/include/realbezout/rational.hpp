#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace rbz {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Parses `p/q` or a plain integer, with an optional leading sign.
/// Throws std::invalid_argument on anything else (including q = 0).
Rational parse_rational(std::string_view text);

/// n/d reduced to lowest terms (the two-argument mpq_class constructor does
/// not reduce). Throws std::invalid_argument when d == 0.
Rational ratio(long n, long d);

std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

BigInt factorial(std::uint64_t n);
BigInt binomial(std::uint64_t n, std::uint64_t k);
BigInt pow(const BigInt& base, std::uint64_t exponent);
Rational pow(const Rational& base, std::uint64_t exponent);

/// Exact rational square root, or false when `value` is not the square of a rational.
bool rational_sqrt(const Rational& value, Rational& root);

/// The rational with the smallest denominator in the closed interval [lo, hi].
Rational simplest_rational_between(const Rational& lo, const Rational& hi);

}  // namespace rbz
