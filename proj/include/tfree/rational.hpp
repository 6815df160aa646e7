#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tfree {

/// Exact rational arithmetic (GMP).
using Rational = mpq_class;

/// Accepts `p/q` or an integer, optionally signed. Throws ParseError.
Rational parse_rational(std::string_view text);

/// Canonical `p/q`, or `p` when the denominator is 1.
std::string to_string(const Rational& value);

}  // namespace tfree
