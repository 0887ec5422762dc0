#include "qcommute/param_point.hpp"

#include <set>

namespace qcommute {

Rat ParamPoint::half_power() const {
  if (v == 0) throw DivisionByZero("half_power: v = 0");
  return u / v;
}

Rat ParamPoint::s_ratio_root(int i, int j) const {
  if (!has_roots())
    throw NotASquare("s_ratio_root: parameter point carries no square roots for s");
  return s_root[static_cast<size_t>(i - 1)] / s_root[static_cast<size_t>(j - 1)];
}

ParamPoint ParamPoint::with_alpha(const Rat& a) const {
  ParamPoint p(*this);
  p.alpha = a;
  return p;
}

ParamPoint ParamPoint::with_s_shift(const std::vector<int>& qpowers) const {
  ParamPoint p(*this);
  for (int i = 0; i < n; ++i) {
    const Rat f = rat_pow(q(), qpowers[static_cast<size_t>(i)]);
    p.s[static_cast<size_t>(i)] *= f;
    if (has_roots())
      p.s_root[static_cast<size_t>(i)] *= rat_pow(u, qpowers[static_cast<size_t>(i)]);
  }
  return p;
}

nlohmann::json ParamPoint::to_json() const {
  nlohmann::json j;
  j["u"] = rat_to_string(u);
  j["v"] = rat_to_string(v);
  nlohmann::json sj = nlohmann::json::array();
  for (const Rat& si : s) sj.push_back(rat_to_string(si));
  j["s"] = sj;
  j["alpha"] = rat_to_string(alpha);
  return j;
}

ParamPoint ParamPoint::from_json(const nlohmann::json& j) {
  ParamPoint p;
  p.u = rat_from_string(j.at("u").get<std::string>());
  p.v = rat_from_string(j.at("v").get<std::string>());
  for (const auto& e : j.at("s")) p.s.push_back(rat_from_string(e.get<std::string>()));
  p.alpha = rat_from_string(j.at("alpha").get<std::string>());
  p.n = static_cast<int>(p.s.size());
  if (p.n < 2) throw ParseError("parameter point needs at least two s values");
  if (p.u == 0 || p.v == 0 || p.alpha == 0) throw ParseError("u, v, alpha must be nonzero");
  // Recover roots when every s_i is a perfect square; otherwise the
  // point simply cannot serve the root-tracked closed forms.
  std::vector<Rat> roots;
  for (const Rat& si : p.s) {
    auto r = exact_sqrt(si);
    if (!r) {
      roots.clear();
      break;
    }
    roots.push_back(*r);
  }
  p.s_root = std::move(roots);
  return p;
}

Rat mu(const Rat& a, long k, const ParamPoint& pt) {
  const Rat q = pt.q();
  const Rat num = qpoch(a, q, k);
  const Rat den = qpoch(a * q / pt.t(), q, k);
  if (den == 0) throw DivisionByZero("mu: vanishing denominator (non-generic point)");
  return num / den * rat_pow(pt.half_power(), k);
}

Rat eigenvalue(const Exponent& j, const ParamPoint& pt) {
  const Rat q = pt.q();
  const Rat t = pt.t();
  Rat lam(1);
  for (int i = 1; i <= pt.n; ++i) {
    const long prev = (i == 1) ? 0 : j[static_cast<size_t>(i - 2)];
    const long cur = (i == pt.n) ? 0 : j[static_cast<size_t>(i - 1)];
    const long d = prev - cur;
    const Rat a = pt.alpha / pt.s[static_cast<size_t>(i - 1)];
    const Rat num = qpoch(a, q, d);
    const Rat den = qpoch(a * q / t, q, d);
    if (den == 0) throw DivisionByZero("eigenvalue: vanishing denominator");
    lam *= num / den;
  }
  return lam;
}

int genericity_depth(int nvars, const Truncation& trunc) {
  return 2 * trunc.max_weight(nvars) + 1;
}

namespace {
// prod_{m=0}^{K-1} (1 - x q^m) != 0, checked factor by factor.
bool family_nonzero(const Rat& x, const Rat& q, int K) {
  Rat xq = x;
  for (int m = 0; m < K; ++m) {
    if (xq == 1) return false;
    xq *= q;
  }
  return true;
}
}  // namespace

bool alpha_families_ok(const ParamPoint& pt, const Rat& a, int K) {
  if (a == 0) return false;
  const Rat q = pt.q();
  const Rat t = pt.t();
  for (const Rat& si : pt.s) {
    if (!family_nonzero(a / si * q / t, q, K)) return false;  // positive mu denominators
    if (!family_nonzero(si / a * q, q, K)) return false;      // negative mu numerator factors
    if (!family_nonzero(si / a * t, q, K)) return false;      // negative mu denominator factors
  }
  return true;
}

bool is_generic(const ParamPoint& pt, const Truncation& trunc, const GenericityOptions& opt) {
  if (pt.n < 2 || pt.u == 0 || pt.v == 0 || pt.alpha == 0) return false;
  const Rat q = pt.q();
  if (q == 0 || q == 1) return false;
  for (const Rat& si : pt.s)
    if (si == 0) return false;
  const int K = genericity_depth(pt.n - 1, trunc);
  if (!family_nonzero(q, q, K)) return false;  // (q;q)_k factors 1 - q^{m+1}
  if (!alpha_families_ok(pt, pt.alpha, K)) return false;
  if (opt.check_spectrum) {
    std::set<Rat> seen;
    try {
      for (const Exponent& e : basis_exponents(pt.n - 1, trunc)) {
        if (!seen.insert(eigenvalue(e, pt)).second) return false;
      }
    } catch (const DivisionByZero&) {
      return false;
    }
  }
  return true;
}

std::uint64_t mix_seed(std::uint64_t seed, std::string_view tag) {
  std::uint64_t h = 14695981039346656037ULL;
  for (char c : tag) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h ^ seed;
}

Rat RatDraw::positive(long lo, long hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
  const long num = lo + static_cast<long>(raw() % span);
  const long den = lo + static_cast<long>(raw() % span);
  Rat r(num, den);
  r.canonicalize();
  return r;
}

PointSampler::PointSampler(int n, Truncation trunc, std::uint64_t seed)
    : n_(n), trunc_(std::move(trunc)), draw_(seed) {}

std::uint64_t PointSampler::next() { return draw_.raw(); }

Rat PointSampler::draw_rat(long num_lo, long num_hi, long den_lo, long den_hi) {
  const long num = num_lo + static_cast<long>(next() % static_cast<std::uint64_t>(num_hi - num_lo + 1));
  const long den = den_lo + static_cast<long>(next() % static_cast<std::uint64_t>(den_hi - den_lo + 1));
  Rat r(num, den);
  r.canonicalize();
  return r;
}

ParamPoint PointSampler::sample_point() {
  for (int attempt = 0; attempt < 256; ++attempt) {
    ParamPoint pt;
    pt.n = n_;
    // 0 < u < 1 keeps |q| < 1; v stays away from 0 and from u so that
    // t != q, which would flatten the whole spectrum.
    const long du = 3 + static_cast<long>(next() % 6);  // 3..8
    const long nu = 1 + static_cast<long>(next() % static_cast<std::uint64_t>(du - 1));
    pt.u = Rat(nu, du);
    pt.u.canonicalize();
    pt.v = draw_rat(2, 8, 2, 8);
    if (pt.v == pt.u || pt.v == 1) continue;
    for (int i = 0; i < n_; ++i) {
      pt.s_root.push_back(draw_rat(2, 8, 2, 8));
      pt.s.push_back(pt.s_root.back() * pt.s_root.back());
    }
    pt.alpha = draw_rat(1, 8, 1, 8);
    if (next() % 4 == 0) pt.alpha = -pt.alpha;
    if (pt.alpha == 0) continue;
    if (is_generic(pt, trunc_)) return pt;
  }
  throw ExhaustedRetries("sample_point: no generic point found within retry budget");
}

Rat PointSampler::sample_alpha_like(const ParamPoint& pt) {
  const int K = genericity_depth(pt.n - 1, trunc_);
  for (int attempt = 0; attempt < 256; ++attempt) {
    Rat a = draw_rat(1, 8, 1, 8);
    if (next() % 4 == 0) a = -a;
    if (a == pt.alpha || a == 0) continue;
    if (alpha_families_ok(pt, a, K)) return a;
  }
  throw ExhaustedRetries("sample_alpha_like: retry budget exceeded");
}

ParamPoint PointSampler::sample_quasi_point() {
  const int K = genericity_depth(n_ - 1, trunc_);
  for (int attempt = 0; attempt < 256; ++attempt) {
    ParamPoint pt;
    pt.n = n_;
    const long du = 3 + static_cast<long>(next() % 6);
    const long nu = 1 + static_cast<long>(next() % static_cast<std::uint64_t>(du - 1));
    pt.u = Rat(nu, du);
    pt.u.canonicalize();
    pt.v = draw_rat(2, 8, 2, 8);
    if (pt.v == pt.u || pt.v == 1) continue;
    pt.s.assign(static_cast<size_t>(n_), Rat(1));
    pt.s_root.assign(static_cast<size_t>(n_), Rat(1));
    pt.alpha = draw_rat(2, 8, 2, 8);

    const Rat q = pt.q();
    const Rat t = pt.t();
    const Rat alpha_shifted = pt.alpha / q * t;
    // Operator families for both spectral values used by condition (I).
    if (!alpha_families_ok(pt, pt.alpha, K)) continue;
    if (!alpha_families_ok(pt, alpha_shifted, K)) continue;
    // The closed quasi-eigenfunction series needs, for each value a it
    // is expanded at: a != q^i (|i| <= K) and a^2 != t q^m (m < K); the
    // deliberate a = +-t^{1/2} specializations are exempt from the
    // second condition (the series collapses there by design).
    bool ok = true;
    for (const Rat& a : {pt.alpha, alpha_shifted, pt.v, t}) {
      Rat qp(1);
      for (int i = 0; i <= K && ok; ++i) {
        if (a == qp || (i > 0 && a * qp == 1)) ok = false;
        qp *= q;
      }
      if (!ok) break;
    }
    if (!ok) continue;
    for (const Rat& a : {pt.alpha, alpha_shifted}) {
      Rat tq = t;
      for (int m = 0; m < K && ok; ++m) {
        if (a * a == tq) ok = false;
        tq *= q;
      }
      if (!ok) break;
    }
    if (!ok) continue;
    return pt;
  }
  throw ExhaustedRetries("sample_quasi_point: retry budget exceeded");
}

}  // namespace qcommute
