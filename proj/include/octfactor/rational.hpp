#pragma once

// Exact scalars of the base field Q, backed by GMP.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace octfactor {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator. The result is canonical.
Rational parse_rational(std::string_view text);

/// Lowest-terms "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// Exact square root of a non-negative rational, if it is a perfect square.
bool rational_sqrt(const Rational& r, Rational& root);

}  // namespace octfactor
