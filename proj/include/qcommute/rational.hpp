#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "qcommute/errors.hpp"

namespace qcommute {

// All scalar arithmetic in the exact path is done on arbitrary-precision
// rationals.  GMP's canonical form (lowest terms, positive denominator)
// makes equality and ordering bit-exact.
using Rat = mpq_class;

// b^e with exact inversion for negative e.  Throws DivisionByZero for
// 0^e with e < 0.
Rat rat_pow(const Rat& base, long e);

// Exact square root when the value is a square in Q, nullopt otherwise
// (including all negative values).
std::optional<Rat> exact_sqrt(const Rat& x);

// Parses "p", "-p/q" style fraction strings.  Throws ParseError on
// malformed input or zero denominator.
Rat rat_from_string(const std::string& s);

// Canonical fraction string, "p" when the denominator is 1.
std::string rat_to_string(const Rat& x);

inline Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

// Lossy conversion for human-readable summaries only; never used in
// verification logic.
double rat_to_double(const Rat& x);

}  // namespace qcommute
