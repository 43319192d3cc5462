#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace polybern {

/// Arbitrary-precision integer.
using Int = mpz_class;

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator (gmpxx canonicalizes every arithmetic result; values built
/// from raw numerator/denominator pairs go through make_rat).
using Rat = mpq_class;

Rat make_rat(const Int& num, const Int& den = 1);

/// Parses "p/q", "p", or a finite decimal such as "-0.125" exactly.
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rat parse_rat(std::string_view text);

/// "p/q", or "p" when q = 1; the sign sits on the numerator.
std::string to_string(const Rat& value);

/// base^exponent for any integer exponent. 0^0 = 1; 0^(negative) throws
/// std::domain_error.
Rat pow(const Rat& base, long exponent);
Int pow(const Int& base, unsigned long exponent);

Int factorial(unsigned long n);

inline bool is_integer(const Rat& value) { return value.get_den() == 1; }

}  // namespace polybern
