#pragma once

#include <vector>

#include "qcommute/qpochhammer.hpp"
#include "qcommute/rational.hpp"

namespace qcommute {

// Shape of a basic hypergeometric series.  The term ratio is computed
// from the lists as given; callers normally pass len(upper) =
// len(lower) + 1 but nothing enforces it.
struct PhiSpec {
  std::vector<Rat> upper;
  std::vector<Rat> lower;
  Rat q;
  int z_order = 0;  // truncation order in z
};

// Coefficients c_0..c_order of the series
//   sum_n  (upper;q)_n / ((lower;q)_n (q;q)_n) * z_scale^n
// computed by the incremental term ratio.  Once a numerator factor
// vanishes every later coefficient is exactly zero (terminating
// series); a vanishing denominator factor before that point throws
// DivisionByZero.
std::vector<Rat> phi_coeffs(const std::vector<Rat>& upper, const std::vector<Rat>& lower,
                            const Rat& q, const Rat& z_scale, int order);

// Power-series coefficients of z^0..z^{z_order}.
std::vector<Rat> phi_series(const PhiSpec& spec);

// Detects the smallest m >= 0 with some upper parameter equal to q^-m,
// searching m <= terminating_bound; returns -1 if none.
int detect_termination(const std::vector<Rat>& upper, const Rat& q, int terminating_bound);

// Exact finite sum of a terminating series at argument z.  Throws
// NotTerminating when no upper parameter matches q^-m within the bound.
Rat phi_eval_terminating(const std::vector<Rat>& upper, const std::vector<Rat>& lower,
                         const Rat& q, const Rat& z, int terminating_bound);

// Very-well-poised series 8W7(a1; a4..a8; q, z) and its smaller
// relatives: the parameter completion inserts +-q*sqrt(a1) upstairs and
// +-sqrt(a1), q*a1/a_k downstairs.  The head root must be rational, so
// the caller passes sqrt(a1) directly.
Rat w87_eval_root(const Rat& a1_sqrt, const std::vector<Rat>& rest, const Rat& q,
                  const Rat& z, int terminating_bound);

// Convenience overload taking a1 itself; throws NotASquare when a1 has
// no exact rational square root.
Rat w87_eval(const Rat& a1, const std::vector<Rat>& rest, const Rat& q, const Rat& z,
             int terminating_bound);

// Completed parameter lists for the very-well-poised series, exposed
// for structural tests.
void w87_parameter_lists(const Rat& a1_sqrt, const std::vector<Rat>& rest, const Rat& q,
                         std::vector<Rat>& upper, std::vector<Rat>& lower);

}  // namespace qcommute
