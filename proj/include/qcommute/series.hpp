#pragma once

#include <map>
#include <nlohmann/json.hpp>

#include "qcommute/param_point.hpp"
#include "qcommute/truncation.hpp"

namespace qcommute {

// Truncated formal power series in the cone variables x_i =
// zeta_{i+1}/zeta_i with exact rational coefficients.  Values are
// immutable in spirit: every operation returns a new series.  Zero
// coefficients are never stored.
class ConeSeries {
 public:
  ConeSeries(int nvars, Truncation trunc) : nvars_(nvars), trunc_(std::move(trunc)) {}

  static ConeSeries one(int nvars, const Truncation& trunc);
  static ConeSeries monomial(int nvars, const Truncation& trunc, const Exponent& e,
                             const Rat& c = Rat(1));

  int nvars() const { return nvars_; }
  const Truncation& trunc() const { return trunc_; }

  Rat coeff(const Exponent& e) const;
  // Drops zero values and silently ignores non-admitted exponents:
  // arithmetic closes over the truncation.
  void set_coeff(const Exponent& e, const Rat& c);
  void add_to_coeff(const Exponent& e, const Rat& c);

  const std::map<Exponent, Rat, WeightLexLess>& terms() const { return coeffs_; }

  ConeSeries operator+(const ConeSeries& o) const;
  ConeSeries operator-(const ConeSeries& o) const;
  ConeSeries operator*(const ConeSeries& o) const;  // truncated convolution
  ConeSeries scaled(const Rat& c) const;
  // Multiplication by the monomial x^j (exponent shift), truncated.
  ConeSeries shifted(const Exponent& j) const;
  // Same coefficients restricted to a sub-truncation.
  ConeSeries restricted_to(const Truncation& t) const;

  bool operator==(const ConeSeries& o) const;

  nlohmann::json to_json() const;
  static ConeSeries from_json(const nlohmann::json& j);

 private:
  void check_shape(const ConeSeries& o) const;

  int nvars_;
  Truncation trunc_;
  std::map<Exponent, Rat, WeightLexLess> coeffs_;
};

ConeSeries series_mul(const ConeSeries& a, const ConeSeries& b);

// Taylor coefficient g_k = (t;q)_k / (q;q)_k * (u/v)^k of the kernel
// factor g.
Rat g_coeff(long k, const ParamPoint& pt);

// h(zeta) = (1 - zeta) (q t^{-1} zeta;q)_inf / (t zeta;q)_inf expanded
// in the cone monomial zeta_m/zeta_l (1 <= l < m <= n), truncated.  The
// infinite-product ratio is the q-binomial series with a = q t^{-2},
// z = t zeta.
ConeSeries h_expand(int l, int m, const ParamPoint& pt, const Truncation& trunc);

// prod_{1 <= i < j <= n} h(zeta_j / zeta_i), truncated.
ConeSeries product_h(const ParamPoint& pt, const Truncation& trunc);

// Cone exponent of the monomial zeta_m/zeta_l (l < m): ones in
// coordinates l..m-1.
Exponent pair_exponent(int l, int m, int nvars);

// Lifts one-dimensional coefficients c_k to sum_k c_k * (zeta_m/zeta_l)^k.
ConeSeries pair_series(int l, int m, const std::vector<Rat>& coeffs,
                       const Truncation& trunc, int nvars);

// 1 - zeta_m/zeta_l as a ConeSeries.
ConeSeries one_minus_pair(int l, int m, const Truncation& trunc, int nvars);

}  // namespace qcommute
