#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace winertia {

/// Exact rational number; always canonical (lowest terms, positive denominator).
using Rational = mpq_class;

/// Parses `int` or `int/int`. Throws std::invalid_argument on malformed text
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// Reduced form: "3/2", "-4", "0".
std::string to_string(const Rational& r);

}  // namespace winertia
