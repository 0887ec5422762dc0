#pragma once

#include <cstdint>
#include <nlohmann/json.hpp>
#include <random>
#include <string_view>
#include <vector>

#include "qcommute/qpochhammer.hpp"
#include "qcommute/rational.hpp"
#include "qcommute/truncation.hpp"

namespace qcommute {

// Exact rational specialization of the operator parameters.  Half
// powers never appear directly: q = u^2 and t = v^2, so every monomial
// (q^{1/2} t^{-1/2})^k is the rational (u/v)^k.  The s_i are sampled as
// squares of tracked roots so that ratios s_i/s_j also have exact
// square roots when the n = 2 closed forms need them.
struct ParamPoint {
  int n = 0;
  Rat u, v;                 // q = u^2, t = v^2
  std::vector<Rat> s;       // s_1..s_n
  Rat alpha;
  std::vector<Rat> s_root;  // r_i with s_i = r_i^2; empty when unknown

  Rat q() const { return u * u; }
  Rat t() const { return v * v; }
  Rat half_power() const;  // u/v, i.e. q^{1/2} t^{-1/2}

  bool has_roots() const { return s_root.size() == s.size(); }
  // sqrt(s_i / s_j), 1-based indices.  Throws NotASquare without roots.
  Rat s_ratio_root(int i, int j) const;

  ParamPoint with_alpha(const Rat& a) const;
  // s_i -> q^{p_i} s_i; roots shift by u^{p_i}, so they stay tracked.
  ParamPoint with_s_shift(const std::vector<int>& qpowers) const;

  nlohmann::json to_json() const;
  static ParamPoint from_json(const nlohmann::json& j);
};

// mu(a; k) = (a;q)_k / (a q t^{-1};q)_k * (u/v)^k, the one-parameter
// weight the integral action attaches to each lattice flow.
Rat mu(const Rat& a, long k, const ParamPoint& pt);

// Diagonal eigenvalue of the operator at index vector j:
//   prod_i (alpha/s_i;q)_{j_{i-1}-j_i} / (alpha/s_i * q/t;q)_{j_{i-1}-j_i}
// with j_0 = j_n = 0.  The half-power factors cancel because the index
// differences telescope to zero.
Rat eigenvalue(const Exponent& j, const ParamPoint& pt);

// Genericity screen.  K is derived from the truncation: indices of
// q-Pochhammer symbols reachable by the action are bounded by twice the
// maximal admitted weight W, so we screen all k <= K(W) = 2W + 1.
// Checks, for every k below the bound and every i:
//   (q;q)_k != 0,  (alpha s_i^{-1} q t^{-1};q)_k != 0,
//   (alpha^{-1} s_i q;q)_k != 0,
// and optionally that all diagonal eigenvalues over the truncated basis
// are pairwise distinct.
struct GenericityOptions {
  bool check_spectrum = true;
};
bool is_generic(const ParamPoint& pt, const Truncation& trunc,
                const GenericityOptions& opt = {});

// Screens just the Pochhammer families for one alpha-like value at this
// point's (q, t, s); used for the second operator argument beta and for
// shifted alphas.
bool alpha_families_ok(const ParamPoint& pt, const Rat& a, int K);

int genericity_depth(int nvars, const Truncation& trunc);

// Deterministic seed derivation for auxiliary random streams (FNV-1a
// over the tag, folded into the seed).
std::uint64_t mix_seed(std::uint64_t seed, std::string_view tag);

// Deterministic stream of small-height rationals.  Draws come from a
// fixed-algorithm engine (mt19937_64) through explicit modular
// reduction, so identical seeds give identical values on every
// platform.
class RatDraw {
 public:
  explicit RatDraw(std::uint64_t seed) : rng_(seed) {}
  std::uint64_t raw() { return rng_(); }
  // num/den each uniform in [lo, hi], canonicalized.
  Rat positive(long lo, long hi);
  bool coin(unsigned mod = 2) { return raw() % mod == 0; }

 private:
  std::mt19937_64 rng_;
};

// Deterministic small-height rational point source.  Numerators and
// denominators stay <= 64 and |q| < 1 so the approximate checks can
// reuse the same points.
class PointSampler {
 public:
  PointSampler(int n, Truncation trunc, std::uint64_t seed);

  // Samples until genericity(trunc) passes; ExhaustedRetries after a
  // fixed budget.
  ParamPoint sample_point();

  // Extra spectral values (beta, a second alpha) drawn after the point;
  // screened against the same Pochhammer families.
  Rat sample_alpha_like(const ParamPoint& pt);

  // Point with s_1 = ... = s_n = 1 for the quasi-eigenfunction checks.
  // The spectrum screen is skipped (it cannot hold at equal s_i); the
  // supplied extra values are screened as alphas too.
  ParamPoint sample_quasi_point();

 private:
  Rat draw_rat(long num_lo, long num_hi, long den_lo, long den_hi);
  std::uint64_t next();

  int n_;
  Truncation trunc_;
  RatDraw draw_;
};

}  // namespace qcommute
