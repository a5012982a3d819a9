#pragma once

#include <gmpxx.h>

#include <string>

namespace qsym {

using Rational = mpq_class;

// Parses "a/b" or "a" (optional sign, nonzero denominator). Throws ParseError.
Rational parse_rational(const std::string& text);

// Reduced form, positive denominator; "/1" is omitted.
std::string rational_text(const Rational& value);

}  // namespace qsym
