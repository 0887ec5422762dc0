#pragma once

#include <stdexcept>
#include <string>

namespace qcommute {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A q-Pochhammer denominator (or other exact division) hit zero.  In
// practice this means the parameter point is not generic; callers that
// own a sampler resample instead of aborting.
struct DivisionByZero : Error {
  using Error::Error;
};

// A square root of a rational was requested but the value is not a
// perfect square in Q (e.g. a very-well-poised head parameter whose
// root was not tracked by the sampler).
struct NotASquare : Error {
  using Error::Error;
};

// No upper parameter of a series matched q^-m within the search bound.
struct NotTerminating : Error {
  using Error::Error;
};

// Series operands live on different variable sets or truncations.
struct ShapeMismatch : Error {
  using Error::Error;
};

// Back-substitution needed lambda_j - M_ii != 0 and it was zero.
struct EigenvalueCollision : Error {
  using Error::Error;
};

// The configuration enumerator exceeded its safety budget.
struct BudgetExceeded : Error {
  using Error::Error;
};

// Internal self-check: a nonzero matrix entry violated the
// componentwise exponent order.
struct TriangularityViolation : Error {
  using Error::Error;
};

// The point sampler ran out of attempts without passing the
// genericity screen.
struct ExhaustedRetries : Error {
  using Error::Error;
};

// Malformed textual input (fraction strings, JSON payloads).
struct ParseError : Error {
  using Error::Error;
};

}  // namespace qcommute
