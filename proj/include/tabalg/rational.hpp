#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tabalg {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q" into a canonical rational. Throws Error(ParseError)
/// on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form, or "p" when the denominator is 1.
std::string to_string(const Rational& value);

}  // namespace tabalg
