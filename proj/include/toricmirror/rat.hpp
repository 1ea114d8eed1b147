// Exact scalars: arbitrary-precision integers and rationals.
#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace toricmirror {

using Integer = boost::multiprecision::mpz_int;

/// Rational number, always kept in lowest terms with a positive denominator.
using Rat = boost::multiprecision::mpq_rational;

/// Parses "p", "-p" or "p/q". Decimal points and exponents are rejected.
Rat parse_rat(std::string_view text);

/// Canonical rendering: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rat& value);
std::string to_string(const Integer& value);

inline Integer numerator_of(const Rat& value) { return boost::multiprecision::numerator(value); }
inline Integer denominator_of(const Rat& value) { return boost::multiprecision::denominator(value); }
inline bool is_integral(const Rat& value) { return denominator_of(value) == 1; }

}  // namespace toricmirror
