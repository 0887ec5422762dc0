#pragma once

#include <nlohmann/json.hpp>

#include "qcommute/xform.hpp"

namespace qcommute {

// Solved eigenpair: the eigenfunction is normalized so the coefficient
// at the leading exponent j is 1, and its support lies in exponents
// dominating j componentwise.
struct EigenResult {
  Exponent j;
  Rat lambda;
  ConeSeries f;

  nlohmann::json to_json(const ParamPoint& pt) const;
};

// Back-substitution in (weight, lex) order over the triangular matrix:
// c_j = normalization, and for every admitted i > j (componentwise
// dominating), c_i = sum_{j <= k < i} M_{ik} c_k / (lambda_j - M_ii).
// Throws EigenvalueCollision when a needed diagonal entry collides.
EigenResult eigenfunction(const OperatorMatrix& M, const ParamPoint& pt, const Exponent& j,
                          const Rat& normalization = Rat(1));

EigenResult eigenfunction(const Exponent& j, const ParamPoint& pt, const Truncation& trunc);

// The q-power shifts on the s parameters that relate f_j to f_0: the
// shift on s_i is q^{j_i - j_{i-1}} (j_0 = j_n = 0).
std::vector<int> shift_powers_for_index(const Exponent& j, int n);

}  // namespace qcommute
