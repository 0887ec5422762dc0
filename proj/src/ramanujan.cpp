#include <array>
#include <chrono>

#include "qcommute/verify.hpp"

namespace qcommute {

namespace {

// Coefficients in z of the finite product (x z;q)_K = prod_{i<K} (1 - x q^i z),
// truncated at z^order.
std::vector<Rat> finite_product_poly(const Rat& x, const Rat& q, int K, int order) {
  std::vector<Rat> c(static_cast<size_t>(order) + 1, Rat(0));
  c[0] = 1;
  Rat xq = x;
  int deg = 0;
  for (int i = 0; i < K; ++i) {
    deg = std::min(deg + 1, order);
    for (int d = deg; d >= 1; --d)
      c[static_cast<size_t>(d)] -= xq * c[static_cast<size_t>(d - 1)];
    xq *= q;
  }
  return c;
}

// Reciprocal power series of c (c[0] = 1) to the same order.
std::vector<Rat> series_inverse(const std::vector<Rat>& c) {
  std::vector<Rat> b(c.size(), Rat(0));
  b[0] = 1;
  for (size_t n = 1; n < c.size(); ++n) {
    Rat acc(0);
    for (size_t k = 1; k <= n; ++k) acc += c[k] * b[n - k];
    b[n] = -acc;
  }
  return b;
}

std::vector<Rat> mul_trunc(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  std::vector<Rat> out(a.size(), Rat(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; i + j < out.size() && j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

}  // namespace

ParamPoint sample_ramanujan_point(std::uint64_t seed) {
  RatDraw draw(mix_seed(seed, "ramanujan"));
  static const std::array<std::pair<long, long>, 3> us = {
      std::make_pair(1L, 2L), {1L, 3L}, {2L, 5L}};
  static const std::array<std::pair<long, long>, 4> vs = {
      std::make_pair(3L, 2L), {2L, 1L}, {5L, 2L}, {3L, 1L}};
  static const std::array<std::pair<long, long>, 5> als = {
      std::make_pair(3L, 4L), {4L, 5L}, {5L, 4L}, {4L, 3L}, {3L, 2L}};
  ParamPoint pt;
  pt.n = 2;
  const auto [un, ud] = us[draw.raw() % us.size()];
  const auto [vn, vd] = vs[draw.raw() % vs.size()];
  const auto [an, ad] = als[draw.raw() % als.size()];
  pt.u = Rat(un, ud);
  pt.v = Rat(vn, vd);
  pt.alpha = Rat(an, ad);
  pt.s = {Rat(1), Rat(1)};
  pt.s_root = {Rat(1), Rat(1)};
  // |q| <= 1/3 would also do; these menus keep q at 1/4 scale, t > 1 and
  // alpha near 1 so every geometric rate in the tail analysis stays
  // at or below |q|.
  return pt;
}

VerificationReport check_ramanujan(const ParamPoint& pt, int window, int nfactors,
                                   const Rat& tol, std::uint64_t seed) {
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport r;
  r.check_name = "ramanujan";
  r.point = pt;
  r.trunc = Truncation::total_degree(window);
  r.seed = seed;

  const Rat q = pt.q();
  const Rat t = pt.t();
  const Rat alpha = pt.alpha;
  const Rat hp = pt.half_power();  // u/v = q^{1/2} t^{-1/2}
  const int K = nfactors;
  const int N = K;               // convolution truncation
  const int P = N + window;      // needed order on the w side

  // Left side as a Laurent series in w = zeta/xi.  Writing the theta
  // factors out and cancelling (q;q)_inf and (uv w^-1;q)_inf leaves
  //   (alpha hp w;q)_inf (uv alpha^-1 w^-1;q)_inf
  //     / [ (hp w;q)_inf (hp w^-1;q)_inf ],
  // with hp = q^{1/2} t^{-1/2} = u/v and uv = q^{1/2} t^{1/2}.
  const Rat uv = pt.u * pt.v;
  const std::vector<Rat> splus = mul_trunc(
      finite_product_poly(alpha * hp, q, K, P),
      series_inverse(finite_product_poly(hp, q, K, P)));
  const std::vector<Rat> sminus = mul_trunc(
      finite_product_poly(uv / alpha, q, K, N + window),
      series_inverse(finite_product_poly(hp, q, K, N + window)));

  // Right side: prefactor times the bilateral mu-ratio sum.
  const Rat pref = qpoch(alpha * q / t, q, K) * qpoch(q / alpha, q, K) /
                   (qpoch(q / t, q, K) * qpoch(q, q, K));

  Rat max_res(0);
  Rat mag = std::max(Rat(1), rat_abs(pref));
  int worst_m = 0;
  for (int m = -window; m <= window; ++m) {
    Rat lhs(0);
    for (int n = std::max(0, -m); n <= N; ++n) {
      const size_t ip = static_cast<size_t>(n + m);
      if (ip >= splus.size()) break;
      lhs += splus[ip] * sminus[static_cast<size_t>(n)];
    }
    const Rat rhs = pref * qpoch(alpha, q, m) / qpoch(alpha * q / t, q, m) * rat_pow(hp, m);
    mag = std::max(mag, std::max(rat_abs(lhs), rat_abs(rhs)));
    const Rat res = rat_abs(lhs - rhs);
    if (res > max_res) {
      max_res = res;
      worst_m = m;
    }
  }

  // Tail estimate.  Two truncations were made: (a) each infinite
  // product kept K factors, perturbing every coefficient at relative
  // size |x| |q|^K/(1-|q|) with |x| <= 4 over the sampled menus; (b)
  // the bilateral pairing kept N terms, whose dropped terms decay like
  // (hp^2)^n = (q/t)^n.  Both rates are bounded by rho = max(|q|,|q/t|);
  // the constant 64 covers the eight products, their |x| factors and
  // the pairing constant.
  const Rat rho = std::max(rat_abs(q), rat_abs(q / t));
  const Rat tail = Rat(64) * mag * rat_pow(rho, K) / (Rat(1) - rho);

  r.detail["max_residual"] = rat_to_string(max_res);
  r.detail["max_residual_decimal"] = rat_to_double(max_res);
  r.detail["worst_m"] = worst_m;
  r.detail["tail_bound"] = rat_to_string(tail);
  r.detail["tail_bound_decimal"] = rat_to_double(tail);
  r.detail["tolerance"] = rat_to_string(tol);
  r.detail["K"] = K;
  r.detail["window"] = window;

  if (max_res < tol && tail < tol) {
    r.status = CheckStatus::Pass;
  } else {
    r.status = CheckStatus::Fail;
    r.first_discrepancy =
        Discrepancy{"Laurent coefficient m=" + std::to_string(worst_m) +
                        (max_res < tol ? " (tail bound exceeds tolerance)" : ""),
                    max_res, tol};
  }
  r.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace qcommute
