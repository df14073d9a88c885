#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace horo {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws DomainError when den == 0.
Rational make_rational(const Integer& num, const Integer& den = 1);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

/// Inverse of to_string. Accepts an optional sign, digits, and an optional
/// "/q" with q > 0. Throws ParseError on anything else.
Rational parse_rational(std::string_view text);

}  // namespace horo
