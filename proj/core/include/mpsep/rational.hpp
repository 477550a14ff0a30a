#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace mpsep {

/// Arbitrary-precision integer and exact rational (always in lowest terms).
using BigInt = mpz_class;
using Rational = mpq_class;

/// Parses "p/q", "p" or a plain decimal such as "-1.25" (optional sign).
/// Throws std::invalid_argument on junk or q == 0.
Rational parse_rational(std::string_view text);

/// Prints "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

}  // namespace mpsep
