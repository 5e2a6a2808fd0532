#pragma once

// Exact coefficients. Everything in this library is computed over Q.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace copoisson {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q" (q != 0). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Lowest terms, positive denominator, no "/1".
std::string to_string(const Rational& r);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

}  // namespace copoisson
