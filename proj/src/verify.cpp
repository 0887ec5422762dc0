#include "qcommute/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace qcommute {

namespace {

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

std::string exp_str(const Exponent& e) {
  std::string s = "(";
  for (size_t i = 0; i < e.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e[i]);
  }
  return s + ")";
}

std::optional<Discrepancy> compare_series(const ConeSeries& lhs, const ConeSeries& rhs,
                                          const std::string& tag) {
  // Walk the union of supports in basis order.
  for (const auto& [e, c] : lhs.terms()) {
    const Rat r = rhs.coeff(e);
    if (c != r) return Discrepancy{tag + " at " + exp_str(e), c, r};
  }
  for (const auto& [e, c] : rhs.terms()) {
    const Rat l = lhs.coeff(e);
    if (l != c) return Discrepancy{tag + " at " + exp_str(e), l, c};
  }
  return std::nullopt;
}

std::optional<Discrepancy> compare_matrices(const TriMatrix& a, const TriMatrix& b,
                                            const std::string& tag) {
  for (int i = 0; i < a.size; ++i)
    for (int j = 0; j < a.size; ++j)
      if (a.at(i, j) != b.at(i, j))
        return Discrepancy{tag + " at (" + std::to_string(i) + "," + std::to_string(j) + ")",
                           a.at(i, j), b.at(i, j)};
  return std::nullopt;
}

// 1-d truncated convolution for the z-series checks.
std::vector<Rat> conv(const std::vector<Rat>& a, const std::vector<Rat>& b, int order) {
  std::vector<Rat> out(static_cast<size_t>(order) + 1, Rat(0));
  for (size_t i = 0; i < a.size() && i <= static_cast<size_t>(order); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size() && i + j <= static_cast<size_t>(order); ++j)
      out[i + j] += a[i] * b[j];
  }
  return out;
}

// (1 - z) * series.
std::vector<Rat> one_minus_z(const std::vector<Rat>& a, int order) {
  std::vector<Rat> out(static_cast<size_t>(order) + 1, Rat(0));
  for (size_t i = 0; i < a.size() && i <= static_cast<size_t>(order); ++i) out[i] += a[i];
  for (size_t i = 0; i + 1 <= static_cast<size_t>(order) && i < a.size(); ++i)
    out[i + 1] -= a[i];
  return out;
}

VerificationReport make_report(std::string name, const ParamPoint& pt, Truncation trunc,
                               std::uint64_t seed) {
  VerificationReport r;
  r.check_name = std::move(name);
  r.point = pt;
  r.trunc = std::move(trunc);
  r.seed = seed;
  return r;
}

void finish(VerificationReport& r, std::optional<Discrepancy> disc, bool theorem_grade,
            const Timer& timer) {
  if (disc) {
    r.status = CheckStatus::Fail;
    r.first_discrepancy = std::move(disc);
  } else {
    r.status = theorem_grade ? CheckStatus::Pass : CheckStatus::ConjectureEvidence;
  }
  r.elapsed_seconds = timer.seconds();
}

}  // namespace

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "Pass";
    case CheckStatus::Fail: return "Fail";
    case CheckStatus::ConjectureEvidence: return "ConjectureEvidence";
  }
  return "?";
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j;
  j["check"] = check_name;
  j["point"] = point.to_json();
  j["trunc"] = trunc.to_json();
  j["status"] = to_string(status);
  j["seed"] = seed;
  if (first_discrepancy) {
    nlohmann::json d;
    d["location"] = first_discrepancy->location;
    d["lhs"] = rat_to_string(first_discrepancy->lhs);
    d["rhs"] = rat_to_string(first_discrepancy->rhs);
    j["first_discrepancy"] = d;
  } else {
    j["first_discrepancy"] = nullptr;
  }
  if (!detail.is_null()) j["detail"] = detail;
  return j;
}

// ---------------------------------------------------------------------
// commutator

VerificationReport check_commutator(const ParamPoint& pt, const Rat& beta,
                                    const Truncation& trunc, std::uint64_t seed) {
  Timer timer;
  VerificationReport r = make_report(
      pt.n == 2 ? "commutator_n2" : (pt.n == 3 ? "commutator_n3" : "commutator_n4"), pt,
      trunc, seed);
  r.detail["beta"] = rat_to_string(beta);

  const OperatorMatrix A = operator_matrix(pt, trunc);
  const OperatorMatrix B = operator_matrix(pt.with_alpha(beta), trunc);
  const int sz = A.size();
  std::optional<Discrepancy> disc;
  for (int i = 0; i < sz && !disc; ++i) {
    for (int j = 0; j <= i && !disc; ++j) {
      Rat ab(0), ba(0);
      for (int k = j; k <= i; ++k) {
        ab += A.m[static_cast<size_t>(i)][static_cast<size_t>(k)] *
              B.m[static_cast<size_t>(k)][static_cast<size_t>(j)];
        ba += B.m[static_cast<size_t>(i)][static_cast<size_t>(k)] *
              A.m[static_cast<size_t>(k)][static_cast<size_t>(j)];
      }
      if (ab != ba)
        disc = Discrepancy{"[I(a),I(b)] at row " + exp_str(A.basis[static_cast<size_t>(i)]) +
                               " col " + exp_str(A.basis[static_cast<size_t>(j)]),
                           ab, ba};
    }
  }
  finish(r, std::move(disc), pt.n == 2, timer);
  return r;
}

// ---------------------------------------------------------------------
// the n = 2 matrix chain

VerificationReport check_theorem2(const ParamPoint& pt, int size, std::uint64_t seed) {
  Timer timer;
  VerificationReport r =
      make_report("theorem2_n2", pt, Truncation::total_degree(size - 1), seed);

  const TriMatrix C = c_matrix(pt, size);
  const TriMatrix D = d_matrix(pt, size);
  const TriMatrix Ct = ctilde_matrix(pt, size);
  const TriMatrix Lam = lambda_matrix(pt, size);

  std::optional<Discrepancy> disc;
  disc = compare_matrices(mat_mul(C, D), TriMatrix::identity(size), "C*Cinv");
  if (!disc) {
    TriMatrix ones(size);
    for (int i = 0; i < size; ++i)
      for (int j = 0; j <= i; ++j) ones.at(i, j) = 1;
    disc = compare_matrices(mat_mul(Ct, D), ones, "Ct*Cinv");
  }
  const TriMatrix E_prod = mat_mul(mat_mul(Ct, Lam), D);
  if (!disc) disc = compare_matrices(E_prod, e_matrix_closed(pt, size), "CtLamCinv vs e_ij");
  if (!disc) disc = compare_matrices(E_prod, ctlamc_w87(pt, size), "CtLamCinv vs 8W7 form");
  if (!disc)
    disc = compare_matrices(E_prod, ctlamc_watson(pt, size), "CtLamCinv vs Watson form");
  const TriMatrix M = operator_matrix_n2(pt, size);
  if (!disc) {
    TriMatrix L(size);
    for (int i = 0; i < size; ++i) {
      L.at(i, i) = 1;
      if (i > 0) L.at(i, i - 1) = -1;
    }
    disc = compare_matrices(M, mat_mul(L, E_prod), "M vs L*E");
  }
  if (!disc) disc = compare_matrices(mat_mul(M, C), mat_mul(C, Lam), "M*C vs C*Lam");

  r.detail["subchecks"] = {"C*Cinv=Id", "Ct*Cinv=ones", "CtLamCinv=e_ij=8W7=Watson",
                           "M=L*E", "M*C=C*Lam"};
  finish(r, std::move(disc), true, timer);
  return r;
}

// ---------------------------------------------------------------------
// operator columns against the series expression for the action

VerificationReport check_prop1(const ParamPoint& pt, int degree, std::uint64_t seed) {
  Timer timer;
  VerificationReport r = make_report("prop1_n2", pt, Truncation::total_degree(degree), seed);

  const Rat q = pt.q();
  const Rat t = pt.t();
  const OperatorMatrix M = operator_matrix(pt, Truncation::total_degree(degree));
  const Rat a = q / (t * t);
  const std::vector<Rat> ratio = phi_coeffs({a}, {}, q, t, degree);

  std::optional<Discrepancy> disc;
  for (int k = 0; k <= degree && !disc; ++k) {
    const Rat qk = rat_pow(q, k);
    const std::vector<Rat> up1 = {Rat(pt.s[0] / pt.alpha * qk * t), t};
    const std::vector<Rat> lo1 = {Rat(pt.s[0] / pt.alpha * qk * q)};
    const std::vector<Rat> up2 = {Rat(pt.alpha / pt.s[1] * qk), t};
    const std::vector<Rat> lo2 = {Rat(pt.alpha / pt.s[1] * qk * q / t)};
    const int rem = degree - k;
    std::vector<Rat> col = conv(phi_coeffs(up1, lo1, q, q / t, rem),
                                phi_coeffs(up2, lo2, q, q / t, rem), rem);
    col = conv(col, ratio, rem);
    col = one_minus_z(col, rem);
    const Rat lam = eigenvalue(Exponent{k}, pt);
    for (int i = k; i <= degree && !disc; ++i) {
      const Rat expected = col[static_cast<size_t>(i - k)] * lam;
      const Rat got = M.m[static_cast<size_t>(i)][static_cast<size_t>(k)];
      if (expected != got)
        disc = Discrepancy{"column " + std::to_string(k) + " row " + std::to_string(i), got,
                           expected};
    }
  }
  finish(r, std::move(disc), true, timer);
  return r;
}

// ---------------------------------------------------------------------
// z-series lemmas

VerificationReport check_lemma1(const Rat& a_root, const Rat& b, const Rat& u, int order,
                                std::uint64_t seed) {
  Timer timer;
  const Rat q = u * u;
  const Rat a = a_root * a_root;
  ParamPoint rec;  // records the scalars that were exercised
  rec.n = 2;
  rec.u = u;
  rec.v = 1;
  rec.s = {a, b};
  rec.s_root = {a_root, exact_sqrt(b).value_or(Rat(0))};
  rec.alpha = 1;
  VerificationReport r = make_report("lemma1", rec, Truncation::total_degree(order), seed);
  if (rec.s_root[1] == 0) rec.s_root.clear();

  const Rat zs = q / b;
  const std::vector<Rat> lhs =
      one_minus_z(phi_coeffs({a, b}, std::vector<Rat>{Rat(a * q / b)}, q, zs, order), order);
  const std::vector<Rat> upper = {Rat(a_root * u), Rat(-a_root * u), Rat(a / q), Rat(b / q)};
  const std::vector<Rat> lower = {Rat(a_root / u), Rat(-a_root / u), Rat(a * q / b)};
  const std::vector<Rat> rhs = phi_coeffs(upper, lower, q, zs, order);

  std::optional<Discrepancy> disc;
  for (int n = 0; n <= order && !disc; ++n)
    if (lhs[static_cast<size_t>(n)] != rhs[static_cast<size_t>(n)])
      disc = Discrepancy{"z^" + std::to_string(n), lhs[static_cast<size_t>(n)],
                         rhs[static_cast<size_t>(n)]};
  finish(r, std::move(disc), true, timer);
  return r;
}

VerificationReport check_lemma3(const Rat& a, const Rat& b, const Rat& c, const Rat& q,
                                int order, std::uint64_t seed) {
  Timer timer;
  ParamPoint rec;
  rec.n = 3;
  rec.u = q;  // recorded verbatim; this check does not need half powers
  rec.v = 1;
  rec.s = {a, b, c};
  rec.alpha = 1;
  VerificationReport r = make_report("lemma3", rec, Truncation::total_degree(order), seed);

  const Rat pref_arg = q / (b * b);
  std::vector<Rat> lhs = phi_coeffs({pref_arg}, {}, q, b, order);
  lhs = conv(lhs, phi_coeffs({a, b}, std::vector<Rat>{Rat(a * q / b)}, q, q / b, order), order);
  lhs = conv(lhs, phi_coeffs({c, b}, std::vector<Rat>{Rat(c * q / b)}, q, q / b, order), order);

  const std::vector<Rat> outer =
      phi_coeffs({Rat(c * q / (b * b)), Rat(q / b)}, std::vector<Rat>{Rat(c * q / b)}, q, b, order);
  std::optional<Discrepancy> disc;
  for (int k = 0; k <= order && !disc; ++k) {
    const Rat qmk = rat_pow(q, -static_cast<long>(k));
    const std::vector<Rat> up = {qmk, b, Rat(b * qmk / c), a};
    const std::vector<Rat> lo = {Rat(b * qmk), Rat(b * b * qmk / c), Rat(a * q / b)};
    const Rat rhs_k = outer[static_cast<size_t>(k)] * phi_eval_terminating(up, lo, q, q, k + 1);
    if (lhs[static_cast<size_t>(k)] != rhs_k)
      disc = Discrepancy{"z^" + std::to_string(k), lhs[static_cast<size_t>(k)], rhs_k};
  }
  finish(r, std::move(disc), true, timer);
  return r;
}

// ---------------------------------------------------------------------
// eigen solver against the n = 2 closed coefficient forms

VerificationReport check_eigen_n2_closed(const ParamPoint& pt, int degree, int jmax,
                                         std::uint64_t seed) {
  Timer timer;
  VerificationReport r =
      make_report("eigen_closed_n2", pt, Truncation::total_degree(degree), seed);

  const Rat q = pt.q();
  const Rat t = pt.t();
  const Rat s = pt.s[0] / pt.s[1];
  const OperatorMatrix M = operator_matrix(pt, Truncation::total_degree(degree));
  const TriMatrix C = c_matrix(pt, degree + 1);

  std::optional<Discrepancy> disc;
  for (int j = 0; j <= jmax && !disc; ++j) {
    const EigenResult er = eigenfunction(M, pt, Exponent{j});
    const Rat lam1 = lambda_n2_negative_index_form(pt, j);
    const Rat lam2 = lambda_n2_positive_index_form(pt, j);
    if (er.lambda != lam1) {
      disc = Discrepancy{"lambda_" + std::to_string(j) + " vs negative-index form", er.lambda,
                         lam1};
      break;
    }
    if (lam1 != lam2) {
      disc = Discrepancy{"two lambda forms at j=" + std::to_string(j), lam1, lam2};
      break;
    }
    // second closed form: coefficients of zeta^j (1-zeta) 2phi1(...)
    const Rat s2j = s * rat_pow(q, 2 * static_cast<long>(j) + 1);
    const std::vector<Rat> form2 = one_minus_z(
        phi_coeffs({Rat(q / t), Rat(s2j / t)}, {s2j}, q, t, degree - j),
        degree - j);
    for (int i = j; i <= degree && !disc; ++i) {
      const Rat got = er.f.coeff(Exponent{i});
      const Rat want1 = C.at(i, j);
      const Rat want2 = form2[static_cast<size_t>(i - j)];
      if (got != want1)
        disc = Discrepancy{"c_{" + std::to_string(i) + "," + std::to_string(j) + "} vs 4phi3 form",
                           got, want1};
      else if (got != want2)
        disc = Discrepancy{"c_{" + std::to_string(i) + "," + std::to_string(j) + "} vs 2phi1 form",
                           got, want2};
    }
  }
  finish(r, std::move(disc), true, timer);
  return r;
}

// ---------------------------------------------------------------------
// alpha independence

VerificationReport check_alpha_independence(const ParamPoint& pt, const Rat& alpha2,
                                            const std::vector<Exponent>& indices,
                                            const Truncation& trunc, std::uint64_t seed) {
  Timer timer;
  VerificationReport r = make_report("alpha_indep_n" + std::to_string(pt.n), pt, trunc, seed);
  r.detail["alpha2"] = rat_to_string(alpha2);

  const ParamPoint pt2 = pt.with_alpha(alpha2);
  const OperatorMatrix M1 = operator_matrix(pt, trunc);
  const OperatorMatrix M2 = operator_matrix(pt2, trunc);
  std::optional<Discrepancy> disc;
  for (const Exponent& j : indices) {
    const ConeSeries f1 = eigenfunction(M1, pt, j).f;
    const ConeSeries f2 = eigenfunction(M2, pt2, j).f;
    disc = compare_series(f1, f2, "f_" + exp_str(j) + " at two alphas");
    if (disc) break;
  }
  finish(r, std::move(disc), pt.n == 2, timer);
  return r;
}

// ---------------------------------------------------------------------
// parameter-shift relation between eigenfunctions

VerificationReport check_shift(const ParamPoint& pt, const Exponent& j,
                               const Truncation& trunc, std::uint64_t seed) {
  Timer timer;
  VerificationReport r = make_report("shift_n" + std::to_string(pt.n), pt, trunc, seed);
  r.detail["index"] = j;

  const ConeSeries fj = eigenfunction(j, pt, trunc).f;
  const ParamPoint pt0 = pt.with_s_shift(shift_powers_for_index(j, pt.n));
  const ConeSeries f0 = eigenfunction(Exponent(static_cast<size_t>(pt.n - 1), 0), pt0, trunc).f;
  std::optional<Discrepancy> disc =
      compare_series(fj, f0.shifted(j), "f_" + exp_str(j) + " vs shifted f_0");
  finish(r, std::move(disc), true, timer);
  return r;
}

// ---------------------------------------------------------------------
// n = 3 conjectured eigenfunction formula

ConeSeries gfun_n3_expand(const ParamPoint& pt, const Truncation& trunc) {
  const Rat q = pt.q();
  const Rat t = pt.t();
  const int nvars = 2;
  const Exponent outer_step = pair_exponent(1, 3, nvars);
  const int kmax = trunc.max_multiple(outer_step);

  const Rat s13 = pt.s[0] / pt.s[2];
  const std::vector<Rat> pref = phi_coeffs(
      {Rat(q / t), Rat(q / t), t, t},
      {Rat(q * pt.s[0] / pt.s[1]), Rat(q * pt.s[1] / pt.s[2]), Rat(q * s13)}, q, Rat(q * s13),
      kmax);

  ConeSeries total(nvars, trunc);
  Exponent outer(static_cast<size_t>(nvars), 0);
  for (int k = 0; k <= kmax; ++k) {
    if (pref[static_cast<size_t>(k)] != 0) {
      ConeSeries term =
          ConeSeries::monomial(nvars, trunc, outer, pref[static_cast<size_t>(k)]);
      const Rat qk1 = rat_pow(q, static_cast<long>(k) + 1);
      for (int i = 1; i <= 3; ++i)
        for (int jj = i + 1; jj <= 3; ++jj) {
          const Rat sij = pt.s[static_cast<size_t>(i - 1)] / pt.s[static_cast<size_t>(jj - 1)];
          const int maxp = trunc.max_multiple(pair_exponent(i, jj, nvars));
          const std::vector<Rat> cf = phi_coeffs({Rat(qk1 / t), Rat(q * sij / t)},
                                                 std::vector<Rat>{Rat(qk1 * sij)}, q, t, maxp);
          term = term * (one_minus_pair(i, jj, trunc, nvars) *
                         pair_series(i, jj, cf, trunc, nvars));
        }
      total = total + term;
    }
    outer = exponent_add(outer, outer_step);
  }
  return total;
}

VerificationReport check_n3_eigenfunction(const ParamPoint& pt, const Truncation& trunc,
                                          std::uint64_t seed) {
  Timer timer;
  VerificationReport r = make_report("eigen_n3_formula", pt, trunc, seed);
  const EigenResult er = eigenfunction(Exponent{0, 0}, pt, trunc);
  const ConeSeries rhs = gfun_n3_expand(pt, trunc);
  std::optional<Discrepancy> disc = compare_series(er.f, rhs, "f_(0,0) vs product formula");
  r.detail["eigenfunction"] = er.f.to_json();
  finish(r, std::move(disc), false, timer);
  return r;
}

// ---------------------------------------------------------------------
// n = 4 window: tabulated term sum for the first eigenfunction

namespace {

struct YTerm {
  Exponent lead;
  Rat coef;
  std::array<int, 6> k;  // k12, k23, k34, k13, k24, k14
};

// phi(k12,...,k14): product over ordered pairs of
// (1 - zeta_j/zeta_i) 2phi1(q^{k_ij+1} t^-1, q t^-1 s_i/s_j; q^{k_ij+1} s_i/s_j; q, t zeta_j/zeta_i).
ConeSeries n4_phi(const ParamPoint& pt, const Truncation& trunc, const std::array<int, 6>& k) {
  static const std::array<std::pair<int, int>, 6> kPairs = {
      std::make_pair(1, 2), {2, 3}, {3, 4}, {1, 3}, {2, 4}, {1, 4}};
  const Rat q = pt.q();
  const Rat t = pt.t();
  const int nvars = 3;
  ConeSeries prod = ConeSeries::one(nvars, trunc);
  for (size_t p = 0; p < kPairs.size(); ++p) {
    const auto [i, j] = kPairs[p];
    const Rat sij = pt.s[static_cast<size_t>(i - 1)] / pt.s[static_cast<size_t>(j - 1)];
    const Rat qk1 = rat_pow(q, k[p] + 1);
    const int maxp = trunc.max_multiple(pair_exponent(i, j, nvars));
    const std::vector<Rat> cf = phi_coeffs({Rat(qk1 / t), Rat(q * sij / t)},
                                           std::vector<Rat>{Rat(qk1 * sij)}, q, t, maxp);
    prod = prod * (one_minus_pair(i, j, trunc, nvars) * pair_series(i, j, cf, trunc, nvars));
  }
  return prod;
}

}  // namespace

ConeSeries n4_term_sum(const ParamPoint& pt, const Truncation& trunc, bool p_as_q) {
  const Rat q = pt.q();
  const Rat t = pt.t();
  const Rat A = q / t;  // q t^-1
  const Rat q2 = q * q;
  const Rat q3 = q2 * q;
  auto S = [&](int i, int j) {
    return Rat(pt.s[static_cast<size_t>(i - 1)] / pt.s[static_cast<size_t>(j - 1)]);
  };
  auto P1 = [&](const Rat& x) { return Rat(1 - x); };
  auto P2 = [&](const Rat& x) { return Rat((1 - x) * (1 - x * q)); };
  // The stray head parameter in the last tabulated term; its siblings
  // all carry plain q there, so the q reading is the expected one.
  const Rat P = p_as_q ? q : pt.u;

  const Rat m1212 = S(1, 3) * S(2, 4);          // s1 s2 / (s3 s4)
  const Rat m1134 = S(1, 3) * S(1, 4);          // s1^2 / (s3 s4)
  const Rat m1244 = S(1, 4) * S(2, 4);          // s1 s2 / s4^2
  const Rat m1144 = S(1, 4) * S(1, 4);          // s1^2 / s4^2

  std::vector<YTerm> terms;
  terms.push_back({{0, 0, 0}, Rat(1), {0, 0, 0, 0, 0, 0}});
  // weight-2 leads
  terms.push_back({{1, 1, 0},
                   q * S(1, 3) * P1(A) * P1(A) * P1(t) * P1(t) /
                       (P1(q) * P1(q * S(1, 2)) * P1(q * S(2, 3)) * P1(q * S(1, 3))),
                   {1, 1, 0, 1, 0, 0}});
  terms.push_back({{0, 1, 1},
                   q * S(2, 4) * P1(A) * P1(A) * P1(t) * P1(t) /
                       (P1(q) * P1(q * S(2, 3)) * P1(q * S(3, 4)) * P1(q * S(2, 4))),
                   {0, 1, 1, 0, 1, 0}});
  // weight-3 lead (zeta4/zeta1)
  terms.push_back({{1, 1, 1},
                   q * S(1, 4) * P1(A) * P1(A) * P1(t) * P1(t) /
                       (P1(q) * P1(q * S(1, 2)) * P1(q * S(2, 4)) * P1(q * S(1, 4))),
                   {1, 0, 0, 0, 1, 1}});
  terms.push_back({{1, 1, 1},
                   q * S(1, 4) * P1(A) * P1(A) * P1(t) * P1(t) /
                       (P1(q) * P1(q * S(1, 3)) * P1(q * S(3, 4)) * P1(q * S(1, 4))),
                   {0, 0, 1, 1, 0, 1}});
  terms.push_back({{1, 1, 1},
                   -q * S(1, 4) * P1(A) * P1(A) * P1(A) * P1(t) * P1(t) * P1(t) *
                       P1(q2 * m1212) /
                       (P1(q) * P1(q * S(1, 2)) * P1(q * S(2, 3)) * P1(q * S(3, 4)) *
                        P1(q * S(1, 3)) * P1(q * S(2, 4)) * P1(q * S(1, 4))),
                   {1, 1, 1, 1, 1, 1}});
  // weight-4 leads
  terms.push_back({{2, 2, 0},
                   q2 * S(1, 3) * S(1, 3) * P2(A) * P2(A) * P2(t) * P2(t) /
                       (P2(q) * P2(q * S(1, 2)) * P2(q * S(2, 3)) * P2(q * S(1, 3))),
                   {2, 2, 0, 2, 0, 0}});
  terms.push_back({{0, 2, 2},
                   q2 * S(2, 4) * S(2, 4) * P2(A) * P2(A) * P2(t) * P2(t) /
                       (P2(q) * P2(q * S(2, 3)) * P2(q * S(3, 4)) * P2(q * S(2, 4))),
                   {0, 2, 2, 0, 2, 0}});
  terms.push_back({{1, 2, 1},
                   -q * m1212 * P1(A) * P1(A) * P1(A) * P1(t) * P1(t) * P1(t) *
                       P1(q2 * S(1, 2) * S(3, 4)) /  // q^2 s1 s3 / (s2 s4)
                       (P1(q) * P1(q * S(1, 2)) * P1(q * S(2, 3)) * P1(q * S(3, 4)) *
                        P1(q * S(1, 3)) * P1(q * S(2, 4)) * P1(q * S(1, 4))),
                   {1, 1, 1, 1, 1, 1}});
  terms.push_back({{1, 2, 1},
                   q * m1212 * P2(A) * P1(A) * P1(A) * P2(t) * P1(t) * P1(t) *
                       P1(q2 * S(1, 4)) /
                       (P1(q) * P1(q) * P1(q * S(1, 2)) * P2(q * S(2, 3)) * P1(q * S(3, 4)) *
                        P1(q * S(1, 3)) * P1(q * S(2, 4)) * P1(q * S(1, 4))),
                   {1, 2, 1, 1, 1, 1}});
  // weight-5 leads
  terms.push_back({{2, 2, 1},
                   -q * m1134 * P1(A) * P1(A) * P1(A) * P1(t) * P1(t) * P1(t) *
                       P1(q2 * S(2, 1) * S(3, 4)) /  // q^2 s2 s3 / (s1 s4)
                       (P1(q) * P1(q * S(1, 2)) * P1(q * S(2, 3)) * P1(q * S(3, 4)) *
                        P1(q * S(1, 3)) * P1(q * S(2, 4)) * P1(q * S(1, 4))),
                   {1, 1, 1, 1, 1, 1}});
  terms.push_back({{2, 2, 1},
                   q * m1134 * P2(A) * P1(A) * P1(A) * P2(t) * P1(t) * P1(t) *
                       P1(q2 * S(3, 4)) /
                       (P1(q) * P1(q) * P2(q * S(1, 2)) * P1(q * S(2, 3)) * P1(q * S(3, 4)) *
                        P1(q * S(1, 3)) * P1(q * S(2, 4)) * P1(q * S(1, 4))),
                   {2, 1, 1, 1, 1, 1}});
  terms.push_back({{2, 2, 1},
                   q * m1134 * P2(A) * P1(A) * P1(A) * P2(t) * P1(t) * P1(t) *
                       P1(q2 * S(2, 4)) /
                       (P1(q) * P1(q) * P1(q * S(1, 2)) * P1(q * S(2, 3)) * P1(q * S(3, 4)) *
                        P2(q * S(1, 3)) * P1(q * S(2, 4)) * P1(q * S(1, 4))),
                   {1, 1, 1, 2, 1, 1}});
  terms.push_back({{2, 2, 1},
                   -q * m1134 * P2(A) * P2(A) * P1(A) * P2(t) * P2(t) * P1(t) *
                       P1(q3 * m1212) /
                       (P1(q) * P1(q) * P2(q * S(1, 2)) * P2(q * S(2, 3)) * P1(q * S(3, 4)) *
                        P2(q * S(1, 3)) * P1(q * S(2, 4)) * P1(q * S(1, 4))),
                   {2, 2, 1, 2, 1, 1}});
  terms.push_back({{1, 2, 2},
                   -q * m1244 * P1(A) * P1(A) * P1(A) * P1(t) * P1(t) * P1(t) *
                       P1(q2 * S(1, 2) * S(4, 3)) /  // q^2 s1 s4 / (s2 s3)
                       (P1(q) * P1(q * S(1, 2)) * P1(q * S(2, 3)) * P1(q * S(3, 4)) *
                        P1(q * S(1, 3)) * P1(q * S(2, 4)) * P1(q * S(1, 4))),
                   {1, 1, 1, 1, 1, 1}});
  terms.push_back({{1, 2, 2},
                   q * m1244 * P2(A) * P1(A) * P1(A) * P2(t) * P1(t) * P1(t) *
                       P1(q2 * S(1, 2)) /
                       (P1(q) * P1(q) * P1(q * S(1, 2)) * P1(q * S(2, 3)) * P2(q * S(3, 4)) *
                        P1(q * S(1, 3)) * P1(q * S(2, 4)) * P1(q * S(1, 4))),
                   {1, 1, 2, 1, 1, 1}});
  terms.push_back({{1, 2, 2},
                   q * m1244 * P2(A) * P1(A) * P1(A) * P2(t) * P1(t) * P1(t) *
                       P1(q2 * S(1, 3)) /
                       (P1(q) * P1(q) * P1(q * S(1, 2)) * P1(q * S(2, 3)) * P1(q * S(3, 4)) *
                        P1(q * S(1, 3)) * P2(q * S(2, 4)) * P1(q * S(1, 4))),
                   {1, 1, 1, 1, 2, 1}});
  terms.push_back({{1, 2, 2},
                   -q * m1244 * P2(A) * P2(A) * P1(A) * P2(t) * P2(t) * P1(t) *
                       P1(q3 * m1212) /
                       (P1(q) * P1(q) * P1(q * S(1, 2)) * P2(q * S(2, 3)) * P2(q * S(3, 4)) *
                        P1(q * S(1, 3)) * P2(q * S(2, 4)) * P1(q * S(1, 4))),
                   {1, 2, 2, 1, 2, 1}});
  // weight-6 lead (zeta4/zeta1)^2
  terms.push_back({{2, 2, 2},
                   q2 * m1144 * P2(A) * P2(A) * P2(t) * P2(t) /
                       (P2(q) * P2(q * S(1, 2)) * P2(q * S(2, 4)) * P2(q * S(1, 4))),
                   {2, 0, 0, 0, 2, 2}});
  terms.push_back({{2, 2, 2},
                   q2 * m1144 * P2(A) * P2(A) * P2(t) * P2(t) /
                       (P2(q) * P2(q * S(1, 3)) * P2(q * S(3, 4)) * P2(q * S(1, 4))),
                   {0, 0, 2, 2, 0, 2}});
  terms.push_back({{2, 2, 2},
                   q * m1144 * P2(A) * P2(A) * P2(A) * P2(t) * P2(t) * P2(t) *
                       P2(q3 * m1212) /
                       (P2(q) * P2(q * S(1, 2)) * P2(q * S(2, 3)) * P2(q * S(3, 4)) *
                        P2(q * S(1, 3)) * P2(q * S(2, 4)) * P2(q * S(1, 4))),
                   {2, 2, 2, 2, 2, 2}});
  terms.push_back({{2, 2, 2},
                   -q * m1144 * P1(A) * P1(A) * P1(A) * P1(t) * P1(t) * P1(t) *
                       P1(q2 * S(2, 1) * S(4, 3)) /  // q^2 s2 s4 / (s1 s3)
                       (P1(q) * P1(q * S(1, 2)) * P1(q * S(2, 3)) * P1(q * S(3, 4)) *
                        P1(q * S(1, 3)) * P1(q * S(2, 4)) * P1(q * S(1, 4))),
                   {1, 1, 1, 1, 1, 1}});
  terms.push_back({{2, 2, 2},
                   q * m1144 * P2(A) * P1(A) * P1(A) * P2(t) * P1(t) * P1(t) *
                       P1(q2 * S(2, 3)) /
                       (P1(q) * P1(q) * P1(q * S(1, 2)) * P1(q * S(2, 3)) * P1(q * S(3, 4)) *
                        P1(q * S(1, 3)) * P1(q * S(2, 4)) * P2(q * S(1, 4))),
                   {1, 1, 1, 1, 1, 2}});
  terms.push_back({{2, 2, 2},
                   q * m1144 * P2(A) * P1(A) * P1(A) * P2(t) * P1(t) * P1(t) *
                       P1(q2 * S(2, 1)) /
                       (P1(q) * P1(q) * P1(q * S(1, 2)) * P1(q * S(2, 3)) * P2(q * S(3, 4)) *
                        P1(q * S(1, 3)) * P1(q * S(2, 4)) * P1(q * S(1, 4))),
                   {1, 1, 2, 1, 1, 1}});
  terms.push_back({{2, 2, 2},
                   q * m1144 * P2(A) * P1(A) * P1(A) * P2(t) * P1(t) * P1(t) *
                       P1(q2 * S(4, 3)) /
                       (P1(q) * P1(P) * P2(q * S(1, 2)) * P1(P * S(2, 3)) * P1(q * S(3, 4)) *
                        P1(q * S(1, 3)) * P1(q * S(2, 4)) * P1(q * S(1, 4))),
                   {2, 1, 1, 1, 1, 1}});
  terms.push_back({{2, 2, 2},
                   -q * m1144 * P2(A) * P2(A) * P1(A) * P2(t) * P2(t) * P1(t) *
                       P1(q3 * m1212) /
                       (P1(q) * P1(q) * P1(q * S(1, 2)) * P1(q * S(2, 3)) * P2(q * S(3, 4)) *
                        P2(q * S(1, 3)) * P1(q * S(2, 4)) * P2(q * S(1, 4))),
                   {1, 1, 2, 2, 1, 2}});
  terms.push_back({{2, 2, 2},
                   -q * m1144 * P2(A) * P2(A) * P1(A) * P2(t) * P2(t) * P1(t) *
                       P1(q3 * m1212) /
                       (P1(q) * P1(q) * P2(q * S(1, 2)) * P1(q * S(2, 3)) * P1(q * S(3, 4)) *
                        P1(q * S(1, 3)) * P2(q * S(2, 4)) * P2(q * S(1, 4))),
                   {2, 1, 1, 1, 2, 2}});
  terms.push_back({{2, 2, 2},
                   -q * m1144 * P2(q) * P2(A) * P2(A) * P1(A) * P2(t) * P2(t) * P1(t) /
                       (P1(q) * P1(q) * P1(q) * P1(q) * P2(q * S(1, 2)) * P1(q * S(2, 3)) *
                        P2(q * S(3, 4)) * P1(q * S(1, 3)) * P1(q * S(2, 4)) * P1(q * S(1, 4))),
                   {2, 1, 2, 1, 1, 1}});

  ConeSeries total(3, trunc);
  for (const YTerm& y : terms) {
    if (y.coef == 0) continue;
    const ConeSeries phi = n4_phi(pt, trunc, y.k);
    total = total + phi.shifted(y.lead).scaled(y.coef);
  }
  return total;
}

VerificationReport check_n4_window(const ParamPoint& pt, std::uint64_t seed) {
  Timer timer;
  const Truncation trunc = Truncation::box({2, 2, 2});
  VerificationReport r = make_report("eigen_n4_window", pt, trunc, seed);

  const ConeSeries solved = eigenfunction(Exponent{0, 0, 0}, pt, trunc).f;
  const ConeSeries sum_q = n4_term_sum(pt, trunc, true);
  const ConeSeries sum_u = n4_term_sum(pt, trunc, false);

  // Per-coefficient diff map over the whole window, for both readings
  // of the stray head parameter.
  nlohmann::json diff_q = nlohmann::json::array();
  nlohmann::json diff_u = nlohmann::json::array();
  std::optional<Discrepancy> first;
  bool mismatch_beyond_y222 = false;
  const Exponent y222_cell = {2, 2, 2};
  for (const Exponent& e : basis_exponents(3, trunc)) {
    const Rat a = solved.coeff(e);
    const Rat bq = sum_q.coeff(e);
    const Rat bu = sum_u.coeff(e);
    if (a != bq) {
      nlohmann::json d;
      d["e"] = e;
      d["solver"] = rat_to_string(a);
      d["sum"] = rat_to_string(bq);
      diff_q.push_back(d);
      if (!first) first = Discrepancy{"window cell " + exp_str(e), a, bq};
      if (e != y222_cell) mismatch_beyond_y222 = true;
    }
    if (a != bu) {
      nlohmann::json d;
      d["e"] = e;
      d["solver"] = rat_to_string(a);
      d["sum"] = rat_to_string(bu);
      diff_u.push_back(d);
    }
  }
  r.detail["diff_map_p_as_q"] = diff_q;
  r.detail["diff_map_p_as_sqrt_q"] = diff_u;
  r.detail["matching_reading"] =
      diff_q.empty() ? "q" : (diff_u.empty() ? "sqrt_q" : "none");

  // Acceptance: clean match under the q reading, or every mismatch
  // confined to the one window cell the flagged term feeds.
  if (diff_q.empty() || !mismatch_beyond_y222) {
    r.status = CheckStatus::ConjectureEvidence;
    if (!diff_q.empty()) r.first_discrepancy = first;  // localized, reported not asserted
  } else {
    r.status = CheckStatus::Fail;
    r.first_discrepancy = first;
  }
  r.elapsed_seconds = timer.seconds();
  return r;
}

// ---------------------------------------------------------------------
// quasi-eigenfunction at s_i = 1

ConeSeries quasi_F_expand(int n, const Rat& alpha, const ParamPoint& pt,
                          const Truncation& trunc) {
  const Rat q = pt.q();
  const Rat t = pt.t();
  const int nvars = n - 1;

  auto pair_block = [&](int k, ConeSeries& term) {
    const Rat qk1 = rat_pow(q, static_cast<long>(k) + 1);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        const int maxp = trunc.max_multiple(pair_exponent(i, j, nvars));
        const std::vector<Rat> cf =
            phi_coeffs({Rat(qk1 / t), Rat(alpha * q / t)},
                       std::vector<Rat>{Rat(qk1 / alpha)}, q, Rat(t / alpha), maxp);
        term = term * (one_minus_pair(i, j, trunc, nvars) *
                       pair_series(i, j, cf, trunc, nvars));
      }
  };

  if (n == 2) {
    ConeSeries term = ConeSeries::one(nvars, trunc);
    pair_block(0, term);
    return term;
  }

  // n = 3: k-sum over powers of (q zeta_3/zeta_1).
  const Exponent outer_step = pair_exponent(1, 3, nvars);
  const int kmax = trunc.max_multiple(outer_step);
  const std::vector<Rat> pref =
      phi_coeffs({Rat(t / (alpha * alpha)), Rat(q / t), Rat(q / t)},
                 {Rat(q / alpha), Rat(q / alpha)}, q, q, kmax);
  ConeSeries total(nvars, trunc);
  Exponent outer(static_cast<size_t>(nvars), 0);
  for (int k = 0; k <= kmax; ++k) {
    if (pref[static_cast<size_t>(k)] != 0) {
      const Rat qmk = rat_pow(q, -static_cast<long>(k));
      const std::vector<Rat> up = {Rat(1 / alpha), qmk};
      const std::vector<Rat> lo = {Rat(alpha * q * qmk)};
      const Rat inner = phi_eval_terminating(up, lo, q, Rat(alpha * t), k + 1);
      ConeSeries term = ConeSeries::monomial(nvars, trunc, outer,
                                             pref[static_cast<size_t>(k)] * inner);
      pair_block(k, term);
      total = total + term;
    }
    outer = exponent_add(outer, outer_step);
  }
  return total;
}

ConeSeries quasi_product(int n, const Rat& root_scale, const ParamPoint& pt,
                         const Truncation& trunc) {
  const Rat q = pt.q();
  const Rat t = pt.t();
  const int nvars = n - 1;
  const Rat a = q / t;
  ConeSeries prod = ConeSeries::one(nvars, trunc);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const int maxp = trunc.max_multiple(pair_exponent(i, j, nvars));
      const std::vector<Rat> cf =
          phi_coeffs({a}, {}, q, root_scale, maxp);
      prod = prod *
             (one_minus_pair(i, j, trunc, nvars) * pair_series(i, j, cf, trunc, nvars));
    }
  return prod;
}

ConeSeries quasi_product_step2(const ParamPoint& pt, const Truncation& trunc) {
  const Rat q = pt.q();
  const Rat t = pt.t();
  const int nvars = pt.n - 1;
  const Rat a = q / (t * t);
  ConeSeries prod = ConeSeries::one(nvars, trunc);
  for (int i = 1; i <= pt.n; ++i)
    for (int j = i + 1; j <= pt.n; ++j) {
      if ((j - i) % 2 != 0) continue;  // "step 2" pairs only
      const int maxp = trunc.max_multiple(pair_exponent(i, j, nvars));
      const std::vector<Rat> cf = phi_coeffs({a}, {}, q, t, maxp);
      prod = prod *
             (one_minus_pair(i, j, trunc, nvars) * pair_series(i, j, cf, trunc, nvars));
    }
  return prod;
}

VerificationReport check_quasi_eigen(int n, const ParamPoint& pt, int degree,
                                     int degree_cov, std::uint64_t seed) {
  Timer timer;
  const Truncation trunc = Truncation::total_degree(degree);
  VerificationReport r = make_report("quasi_n" + std::to_string(n), pt, trunc, seed);

  const Rat q = pt.q();
  const Rat t = pt.t();
  std::optional<Discrepancy> disc;

  // (II): F(t^{1/2}) equals the product with ratio argument t^{1/2} zeta.
  disc = compare_series(quasi_F_expand(n, pt.v, pt, trunc), quasi_product(n, pt.v, pt, trunc),
                        "condition (II) at alpha=t^{1/2}");
  // degeneration at alpha = -t^{1/2}
  if (!disc)
    disc = compare_series(quasi_F_expand(n, Rat(-pt.v), pt, trunc),
                          quasi_product(n, Rat(-pt.v), pt, trunc),
                          "degeneration at alpha=-t^{1/2}");
  // degeneration at alpha = t: step-2 product
  if (!disc)
    disc = compare_series(quasi_F_expand(n, t, pt, trunc), quasi_product_step2(pt, trunc),
                          "degeneration at alpha=t");
  // (I) covariance at a generic alpha (n = 3 path).
  if (!disc && n == 3) {
    const Truncation tcov = Truncation::total_degree(degree_cov);
    const Rat alpha_shift = pt.alpha / q * t;
    const OperatorMatrix M = operator_matrix(pt.with_alpha(alpha_shift), tcov);
    const ConeSeries lhs = M.apply(quasi_F_expand(n, pt.alpha, pt, tcov));
    const ConeSeries rhs = quasi_F_expand(n, alpha_shift, pt, tcov);
    disc = compare_series(lhs, rhs, "condition (I) covariance");
  }
  finish(r, std::move(disc), false, timer);
  return r;
}

// ---------------------------------------------------------------------
// catalog and suite

const std::vector<CheckInfo>& check_catalog() {
  static const std::vector<CheckInfo> catalog = {
      {"commutator_n2", 2, true, false, 99},
      {"theorem2_n2", 2, true, false, 99},
      {"prop1_n2", 2, true, false, 99},
      {"lemma1", 0, true, false, 99},
      {"lemma3", 0, true, false, 99},
      {"eigen_closed_n2", 2, true, false, 99},
      {"alpha_indep_n2", 2, true, false, 99},
      {"shift_n2", 2, true, false, 99},
      {"quasi_n2", 2, false, false, 99},
      {"commutator_n3", 3, false, false, 99},
      {"eigen_n3_formula", 3, false, false, 99},
      {"alpha_indep_n3", 3, false, false, 99},
      {"shift_n3", 3, false, false, 99},
      {"quasi_n3", 3, false, false, 99},
      {"commutator_n4", 4, false, false, 2},
      {"eigen_n4_window", 4, false, false, 2},
      {"alpha_indep_n4", 4, false, false, 2},
      {"ramanujan", 0, true, true, 99},
  };
  return catalog;
}

const CheckInfo* find_check(const std::string& name) {
  for (const CheckInfo& c : check_catalog())
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

int degree_for(const SuiteConfig& cfg, int n, int fallback) {
  auto it = cfg.deg_override.find(n);
  return it == cfg.deg_override.end() ? fallback : it->second;
}

// Shared resample wrapper: non-generic surprises inside a check
// (vanishing closed-form denominators, eigenvalue collisions) trigger a
// deterministic retry with the next sampled point.
template <typename SampleFn, typename CheckFn>
std::vector<VerificationReport> with_resampling(SampleFn sample, CheckFn run) {
  for (int attempt = 0; attempt < 8; ++attempt) {
    auto pt = sample();
    try {
      return run(pt);
    } catch (const DivisionByZero&) {
      continue;
    } catch (const EigenvalueCollision&) {
      continue;
    } catch (const NotTerminating&) {
      continue;
    }
  }
  throw ExhaustedRetries("check sampling: too many non-generic retries");
}

}  // namespace

std::vector<VerificationReport> run_named_check(const std::string& name, std::uint64_t seed,
                                                const SuiteConfig& cfg) {
  if (name == "commutator_n2" || name == "commutator_n3" || name == "commutator_n4") {
    const int n = name == "commutator_n2" ? 2 : (name == "commutator_n3" ? 3 : 4);
    const Truncation trunc =
        n == 4 ? Truncation::box({1, 1, 1})
               : Truncation::total_degree(degree_for(cfg, n, n == 2 ? 8 : 5));
    const int pairs = n == 2 ? 3 : 1;
    PointSampler sampler(n, trunc, seed);
    const ParamPoint pt = sampler.sample_point();
    std::vector<VerificationReport> out;
    for (int p = 0; p < pairs; ++p) {
      const Rat alpha = p == 0 ? pt.alpha : sampler.sample_alpha_like(pt);
      const Rat beta = sampler.sample_alpha_like(pt);
      out.push_back(check_commutator(pt.with_alpha(alpha), beta, trunc, seed));
    }
    return out;
  }
  if (name == "theorem2_n2") {
    const int size = degree_for(cfg, 2, 11) + 1;
    return with_resampling(
        [&] { return PointSampler(2, Truncation::total_degree(size - 1), seed).sample_point(); },
        [&](const ParamPoint& pt) {
          return std::vector<VerificationReport>{check_theorem2(pt, size, seed)};
        });
  }
  if (name == "prop1_n2") {
    const int deg = degree_for(cfg, 2, 6);
    return with_resampling(
        [&] { return PointSampler(2, Truncation::total_degree(deg), seed).sample_point(); },
        [&](const ParamPoint& pt) {
          return std::vector<VerificationReport>{check_prop1(pt, deg, seed)};
        });
  }
  if (name == "lemma1" || name == "lemma3") {
    const int order = 12;
    RatDraw draw(mix_seed(seed, name));
    for (int attempt = 0; attempt < 64; ++attempt) {
      try {
        if (name == "lemma1") {
          // q as a square (the transformed side needs q^{1/2}), a as a
          // square with tracked root.
          const long du = 3 + static_cast<long>(draw.raw() % 6);
          const long nu = 1 + static_cast<long>(draw.raw() % static_cast<std::uint64_t>(du - 1));
          Rat u(nu, du);
          u.canonicalize();
          const Rat a_root = draw.positive(2, 8);
          const Rat b = draw.positive(2, 8);
          return {check_lemma1(a_root, b, u, order, seed)};
        }
        const Rat q = draw.positive(2, 9) / 10;  // small |q|
        const Rat a = draw.positive(2, 8);
        const Rat b = draw.positive(2, 8);
        const Rat c = draw.positive(2, 8);
        return {check_lemma3(a, b, c, q, order, seed)};
      } catch (const DivisionByZero&) {
        continue;
      } catch (const NotTerminating&) {
        continue;
      }
    }
    throw ExhaustedRetries(name + ": scalar sampling retry budget exceeded");
  }
  if (name == "eigen_closed_n2") {
    const int deg = degree_for(cfg, 2, 8);
    return with_resampling(
        [&] { return PointSampler(2, Truncation::total_degree(deg), seed).sample_point(); },
        [&](const ParamPoint& pt) {
          return std::vector<VerificationReport>{
              check_eigen_n2_closed(pt, deg, std::min(deg, 6), seed)};
        });
  }
  if (name == "alpha_indep_n2" || name == "alpha_indep_n3" || name == "alpha_indep_n4") {
    const int n = name == "alpha_indep_n2" ? 2 : (name == "alpha_indep_n3" ? 3 : 4);
    const Truncation trunc = n == 4
                                 ? Truncation::box({1, 1, 1})
                                 : Truncation::total_degree(degree_for(cfg, n, n == 2 ? 6 : 5));
    std::vector<Exponent> indices;
    if (n == 2)
      indices = {{0}, {1}, {2}, {3}};
    else if (n == 3)
      indices = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    else
      indices = {{0, 0, 0}, {1, 0, 0}, {0, 1, 1}};
    PointSampler sampler(n, trunc, seed);
    return with_resampling([&] { return sampler.sample_point(); },
                           [&](const ParamPoint& pt) {
                             const Rat alpha2 = sampler.sample_alpha_like(pt);
                             return std::vector<VerificationReport>{check_alpha_independence(
                                 pt, alpha2, indices, trunc, seed)};
                           });
  }
  if (name == "shift_n2" || name == "shift_n3") {
    const int n = name == "shift_n2" ? 2 : 3;
    const Truncation trunc = Truncation::total_degree(degree_for(cfg, n, 5));
    std::vector<Exponent> indices =
        n == 2 ? std::vector<Exponent>{{1}, {2}} : std::vector<Exponent>{{1, 0}, {1, 1}};
    PointSampler sampler(n, trunc, seed);
    std::vector<VerificationReport> out;
    for (const Exponent& j : indices) {
      auto reports = with_resampling(
          [&] {
            // both the point and its shifted companion must be generic
            while (true) {
              ParamPoint pt = sampler.sample_point();
              if (is_generic(pt.with_s_shift(shift_powers_for_index(j, n)), trunc)) return pt;
            }
          },
          [&](const ParamPoint& pt) {
            return std::vector<VerificationReport>{check_shift(pt, j, trunc, seed)};
          });
      out.insert(out.end(), reports.begin(), reports.end());
    }
    return out;
  }
  if (name == "eigen_n3_formula") {
    const int deg = degree_for(cfg, 3, 6);
    const Truncation trunc = Truncation::total_degree(deg);
    return with_resampling(
        [&] { return PointSampler(3, trunc, seed).sample_point(); },
        [&](const ParamPoint& pt) {
          return std::vector<VerificationReport>{check_n3_eigenfunction(pt, trunc, seed)};
        });
  }
  if (name == "eigen_n4_window") {
    return with_resampling(
        [&] { return PointSampler(4, Truncation::box({2, 2, 2}), seed).sample_point(); },
        [&](const ParamPoint& pt) {
          return std::vector<VerificationReport>{check_n4_window(pt, seed)};
        });
  }
  if (name == "quasi_n2" || name == "quasi_n3") {
    const int n = name == "quasi_n2" ? 2 : 3;
    const int deg = degree_for(cfg, n, 5);
    const int deg_cov = 4;
    return with_resampling(
        [&] {
          return PointSampler(n, Truncation::total_degree(std::max(deg, deg_cov)), seed)
              .sample_quasi_point();
        },
        [&](const ParamPoint& pt) {
          return std::vector<VerificationReport>{check_quasi_eigen(n, pt, deg, deg_cov, seed)};
        });
  }
  if (name == "ramanujan") {
    const ParamPoint pt = sample_ramanujan_point(seed);
    return {check_ramanujan(pt, 6, 50, Rat(1, 10) / rat_pow(Rat(10), 24), seed)};
  }
  throw ParseError("unknown check: " + name);
}

std::vector<VerificationReport> run_suite(const SuiteConfig& cfg) {
  std::vector<VerificationReport> out;
  for (const std::string& name : cfg.checks) {
    const CheckInfo* info = find_check(name);
    if (!info) throw ParseError("unknown check: " + name);
    if (info->approx && !cfg.approx_enabled) continue;
    const size_t nseeds =
        std::min(cfg.seeds.size(), static_cast<size_t>(info->max_seeds));
    for (size_t i = 0; i < nseeds; ++i) {
      auto reports = run_named_check(name, cfg.seeds[i], cfg);
      out.insert(out.end(), reports.begin(), reports.end());
    }
  }
  return out;
}

SuiteConfig suite_config_from_json(const nlohmann::json& j) {
  SuiteConfig cfg;
  if (j.contains("checks")) {
    cfg.checks = j.at("checks").get<std::vector<std::string>>();
    for (const std::string& c : cfg.checks)
      if (!find_check(c)) throw ParseError("unknown check in config: " + c);
  } else {
    for (const CheckInfo& c : check_catalog()) cfg.checks.push_back(c.name);
  }
  if (j.contains("n_values")) {
    const auto keep = j.at("n_values").get<std::vector<int>>();
    std::vector<std::string> filtered;
    for (const std::string& name : cfg.checks) {
      const CheckInfo* info = find_check(name);
      if (info->n == 0 || std::find(keep.begin(), keep.end(), info->n) != keep.end())
        filtered.push_back(name);
    }
    cfg.checks = std::move(filtered);
  }
  if (j.contains("seeds")) cfg.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
  if (cfg.seeds.empty()) throw ParseError("config needs at least one seed");
  if (j.contains("approx")) cfg.approx_enabled = j.at("approx").get<bool>();
  if (j.contains("out")) cfg.out_path = j.at("out").get<std::string>();
  if (j.contains("deg"))
    for (const auto& [k, v] : j.at("deg").items())
      cfg.deg_override[std::stoi(k)] = v.get<int>();
  return cfg;
}

std::string reports_to_jsonl(const std::vector<VerificationReport>& reports) {
  std::string out;
  for (const VerificationReport& r : reports) {
    out += r.to_json().dump();
    out += "\n";
  }
  return out;
}

void write_reports_jsonl(const std::string& path,
                         const std::vector<VerificationReport>& reports) {
  const std::string payload = reports_to_jsonl(reports);
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw Error("cannot open " + tmp.string() + " for writing");
    os << payload;
  }
  std::filesystem::rename(tmp, target);
}

void print_summary(std::ostream& os, const std::vector<VerificationReport>& reports) {
  int pass = 0, fail = 0, evidence = 0;
  for (const VerificationReport& r : reports) {
    os << std::left << std::setw(20) << r.check_name << " seed=" << std::setw(3) << r.seed
       << " " << std::setw(18) << to_string(r.status) << " " << std::fixed
       << std::setprecision(3) << r.elapsed_seconds << "s";
    if (r.first_discrepancy)
      os << "  first discrepancy: " << r.first_discrepancy->location << " lhs="
         << rat_to_string(r.first_discrepancy->lhs)
         << " rhs=" << rat_to_string(r.first_discrepancy->rhs);
    os << "\n";
    switch (r.status) {
      case CheckStatus::Pass: ++pass; break;
      case CheckStatus::Fail: ++fail; break;
      case CheckStatus::ConjectureEvidence: ++evidence; break;
    }
  }
  os << pass << " pass, " << evidence << " conjecture-evidence, " << fail << " fail\n";
}

int suite_exit_code(const std::vector<VerificationReport>& reports) {
  for (const VerificationReport& r : reports) {
    if (r.status != CheckStatus::Fail) continue;
    const CheckInfo* info = find_check(r.check_name);
    if (info && info->theorem_grade && !info->approx) return 1;
  }
  return 0;
}

}  // namespace qcommute
