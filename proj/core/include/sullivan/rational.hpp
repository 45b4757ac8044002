#pragma once

#include <gmpxx.h>

#include <string>

namespace sullivan {

// Exact arithmetic everywhere: all coefficients are arbitrary-precision
// rationals. Floating point is deliberately absent from this code base;
// rank computations depend on exact cancellation.
using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

/// Parse "p", "-p", or "p/q". Throws Error on malformed input or q == 0.
Rational parse_rational(const std::string& text);

}  // namespace sullivan
