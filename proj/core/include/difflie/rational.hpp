#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace difflie {

// Exact coefficients. mpq_class keeps values canonical after arithmetic.
using Rational = mpq_class;

// Parses "p", "-p" or "p/q". Throws Error on malformed text or q = 0.
Rational parse_rational(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

Rational pow(const Rational& base, unsigned exponent);

} // namespace difflie
