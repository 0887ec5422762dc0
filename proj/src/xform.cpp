#include "qcommute/xform.hpp"

#include <algorithm>

namespace qcommute {

namespace {

struct FlowPair {
  int l, m;       // ordered pair, l != m, 1-based
  Exponent step;  // cone exponent of zeta_max/zeta_min
  int target;     // mu index affected (= m)
  int sign;       // +1 when l < m, -1 when l > m
};

// Precomputed tables for one (point, truncation): mu values for every
// reachable index, g coefficients, theh-product series and the flow
// pair list.  Indices of mu are bounded by 2W (flows and the basis
// exponent differences each contribute at most W).
struct ActionContext {
  const ParamPoint& pt;
  Truncation trunc;
  int W;
  std::vector<std::vector<Rat>> mu_table;  // [r][k + 2W], r = 0..n-1
  std::vector<Rat> g_table;                // [k], k = 0..W
  std::vector<FlowPair> pairs;
  ConeSeries hprod;

  ActionContext(const ParamPoint& p, const Truncation& tr)
      : pt(p), trunc(tr), W(tr.max_weight(p.n - 1)), hprod(p.n - 1, tr) {
    const Rat q = pt.q();
    const Rat t = pt.t();
    const Rat hp = pt.half_power();
    mu_table.resize(static_cast<size_t>(pt.n));
    for (int r = 0; r < pt.n; ++r) {
      const Rat a = pt.alpha / pt.s[static_cast<size_t>(r)];
      std::vector<Rat> row(static_cast<size_t>(4 * W) + 1, Rat(0));
      row[static_cast<size_t>(2 * W)] = 1;
      // upward: mu(a;k+1) = mu(a;k) (1-a q^k)/(1-a q^{k+1} t^{-1}) (u/v)
      Rat qk(1);
      for (int k = 0; k < 2 * W; ++k) {
        const Rat den = Rat(1) - a * q * qk / t;
        if (den == 0) throw DivisionByZero("mu table: non-generic point");
        row[static_cast<size_t>(2 * W + k + 1)] =
            row[static_cast<size_t>(2 * W + k)] * (Rat(1) - a * qk) / den * hp;
        qk *= q;
      }
      // downward: mu(a;k-1) = mu(a;k) (1-a q^{k-1} t^{-1} q)/(1-a q^{k-1}) (v/u)
      Rat qk1 = Rat(1) / q;  // q^{k-1} at k = 0
      for (int k = 0; k > -2 * W; --k) {
        const Rat den = Rat(1) - a * qk1;
        if (den == 0) throw DivisionByZero("mu table: non-generic point");
        row[static_cast<size_t>(2 * W + k - 1)] =
            row[static_cast<size_t>(2 * W + k)] * (Rat(1) - a * q * qk1 / t) / den / hp;
        qk1 /= q;
      }
      mu_table[static_cast<size_t>(r)] = std::move(row);
    }
    g_table.resize(static_cast<size_t>(W) + 1);
    g_table[0] = 1;
    Rat qk(1);
    for (int k = 0; k < W; ++k) {
      const Rat den = Rat(1) - q * qk;
      if (den == 0) throw DivisionByZero("g table: (q;q)_k = 0");
      g_table[static_cast<size_t>(k + 1)] =
          g_table[static_cast<size_t>(k)] * (Rat(1) - t * qk) / den * hp;
      qk *= q;
    }
    for (int l = 1; l <= pt.n; ++l)
      for (int m = 1; m <= pt.n; ++m) {
        if (l == m) continue;
        pairs.push_back(FlowPair{l, m, pair_exponent(std::min(l, m), std::max(l, m), pt.n - 1),
                                 m, l < m ? +1 : -1});
      }
    hprod = product_h(pt, trunc);
  }

  const Rat& mu_at(int r, int k) const { return mu_table[static_cast<size_t>(r)][static_cast<size_t>(k + 2 * W)]; }
};

constexpr long kEnumerationBudget = 100'000'000;

void enumerate_flows(const ActionContext& ctx, size_t pair_idx, Exponent& exp_acc,
                     std::vector<int>& flow, Rat& gprod, const std::vector<int>& dj,
                     long& visited, ConeSeries& out) {
  if (++visited > kEnumerationBudget)
    throw BudgetExceeded("monomial_image: flow enumeration budget exceeded");
  if (pair_idx == ctx.pairs.size()) {
    Rat c = gprod;
    for (int r = 0; r < ctx.pt.n; ++r)
      c *= ctx.mu_at(r, flow[static_cast<size_t>(r)] + dj[static_cast<size_t>(r)]);
    out.add_to_coeff(exp_acc, c);
    return;
  }
  const FlowPair& fp = ctx.pairs[pair_idx];
  // k = 0 branch first (no state change)
  enumerate_flows(ctx, pair_idx + 1, exp_acc, flow, gprod, dj, visited, out);
  Exponent saved = exp_acc;
  Rat saved_g = gprod;
  const int saved_flow = flow[static_cast<size_t>(fp.target - 1)];
  for (int k = 1;; ++k) {
    exp_acc = exponent_add(exp_acc, fp.step);
    if (!ctx.trunc.admits(exp_acc)) break;
    flow[static_cast<size_t>(fp.target - 1)] = saved_flow + fp.sign * k;
    gprod = saved_g * ctx.g_table[static_cast<size_t>(k)];
    enumerate_flows(ctx, pair_idx + 1, exp_acc, flow, gprod, dj, visited, out);
  }
  exp_acc = saved;
  gprod = saved_g;
  flow[static_cast<size_t>(fp.target - 1)] = saved_flow;
}

ConeSeries monomial_image_ctx(const ActionContext& ctx, const Exponent& j) {
  const int n = ctx.pt.n;
  std::vector<int> dj(static_cast<size_t>(n), 0);  // j_{r-1} - j_r with j_0 = j_n = 0
  for (int r = 1; r <= n; ++r) {
    const int prev = (r == 1) ? 0 : j[static_cast<size_t>(r - 2)];
    const int cur = (r == n) ? 0 : j[static_cast<size_t>(r - 1)];
    dj[static_cast<size_t>(r - 1)] = prev - cur;
  }
  ConeSeries sum(n - 1, ctx.trunc);
  Exponent exp_acc = j;
  std::vector<int> flow(static_cast<size_t>(n), 0);
  Rat gprod(1);
  long visited = 0;
  enumerate_flows(ctx, 0, exp_acc, flow, gprod, dj, visited, sum);
  return sum * ctx.hprod;
}

}  // namespace

ConeSeries monomial_image(const Exponent& j, const ParamPoint& pt, const Truncation& trunc) {
  ActionContext ctx(pt, trunc);
  return monomial_image_ctx(ctx, j);
}

int OperatorMatrix::index_of(const Exponent& e) const {
  auto it = std::lower_bound(basis.begin(), basis.end(), e, WeightLexLess{});
  if (it == basis.end() || *it != e) return -1;
  return static_cast<int>(it - basis.begin());
}

ConeSeries OperatorMatrix::apply(const ConeSeries& f) const {
  ConeSeries out(n - 1, trunc);
  for (int c = 0; c < size(); ++c) {
    const Rat fc = f.coeff(basis[static_cast<size_t>(c)]);
    if (fc == 0) continue;
    for (int r = c; r < size(); ++r) {
      const Rat& mrc = m[static_cast<size_t>(r)][static_cast<size_t>(c)];
      if (mrc == 0) continue;
      out.add_to_coeff(basis[static_cast<size_t>(r)], mrc * fc);
    }
  }
  return out;
}

nlohmann::json OperatorMatrix::to_json(const ParamPoint& pt) const {
  nlohmann::json j;
  j["point"] = pt.to_json();
  j["n"] = n;
  j["trunc"] = trunc.to_json();
  j["basis"] = basis;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : m) {
    nlohmann::json r = nlohmann::json::array();
    for (const Rat& x : row) r.push_back(rat_to_string(x));
    rows.push_back(r);
  }
  j["entries"] = rows;
  return j;
}

OperatorMatrix operator_matrix(const ParamPoint& pt, const Truncation& trunc) {
  OperatorMatrix M;
  M.n = pt.n;
  M.trunc = trunc;
  M.alpha = pt.alpha;
  M.basis = basis_exponents(pt.n - 1, trunc);
  const int sz = M.size();
  M.m.assign(static_cast<size_t>(sz), std::vector<Rat>(static_cast<size_t>(sz), Rat(0)));
  ActionContext ctx(pt, trunc);
  for (int c = 0; c < sz; ++c) {
    const Exponent& jc = M.basis[static_cast<size_t>(c)];
    const ConeSeries img = monomial_image_ctx(ctx, jc);
    for (const auto& [e, val] : img.terms()) {
      if (!dominated_by(jc, e))
        throw TriangularityViolation("operator_matrix: entry below the cone order");
      const int r = M.index_of(e);
      if (r < 0) throw TriangularityViolation("operator_matrix: image exponent outside basis");
      M.m[static_cast<size_t>(r)][static_cast<size_t>(c)] = val;
    }
  }
  return M;
}

TriMatrix TriMatrix::identity(int n) {
  TriMatrix t(n);
  for (int i = 0; i < n; ++i) t.at(i, i) = 1;
  return t;
}

TriMatrix mat_mul(const TriMatrix& a, const TriMatrix& b) {
  TriMatrix r(a.size);
  for (int i = 0; i < a.size; ++i)
    for (int k = 0; k < a.size; ++k) {
      if (a.at(i, k) == 0) continue;
      for (int j = 0; j < a.size; ++j) {
        if (b.at(k, j) == 0) continue;
        r.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    }
  return r;
}

namespace {
void require_n2(const ParamPoint& pt, const char* who) {
  if (pt.n != 2) throw Error(std::string(who) + ": closed forms are defined for n = 2 only");
}
}  // namespace

Rat lambda_diag(const ParamPoint& pt, const Exponent& j) { return eigenvalue(j, pt); }

Rat lambda_n2_negative_index_form(const ParamPoint& pt, long j) {
  const Rat q = pt.q();
  const Rat t = pt.t();
  const Rat a1 = pt.alpha / pt.s[0];
  const Rat a2 = pt.alpha / pt.s[1];
  return qpoch(a1, q, -j) / qpoch(a1 * q / t, q, -j) * qpoch(a2, q, j) /
         qpoch(a2 * q / t, q, j);
}

Rat lambda_n2_positive_index_form(const ParamPoint& pt, long j) {
  const Rat q = pt.q();
  const Rat t = pt.t();
  const Rat b1 = pt.s[0] / pt.alpha;
  const Rat a2 = pt.alpha / pt.s[1];
  return qpoch(b1 * t, q, j) / qpoch(b1 * q, q, j) * qpoch(a2, q, j) /
         qpoch(a2 * q / t, q, j) * rat_pow(q / t, j);
}

TriMatrix lambda_matrix(const ParamPoint& pt, int size) {
  require_n2(pt, "lambda_matrix");
  TriMatrix L(size);
  for (int j = 0; j < size; ++j) L.at(j, j) = eigenvalue(Exponent{j}, pt);
  return L;
}

TriMatrix e_matrix_closed(const ParamPoint& pt, int size) {
  require_n2(pt, "e_matrix_closed");
  const Rat q = pt.q();
  const Rat t = pt.t();
  const Rat a1 = pt.alpha / pt.s[0];
  const Rat a2 = pt.alpha / pt.s[1];
  const Rat b1 = pt.s[0] / pt.alpha;
  TriMatrix E(size);
  for (int j = 0; j < size; ++j) {
    const Rat lam = eigenvalue(Exponent{j}, pt);
    const Rat qj = rat_pow(q, j);
    for (int i = j; i < size; ++i) {
      const long d = i - j;
      const Rat qi_inv = rat_pow(q, -static_cast<long>(i));
      const Rat pre = qpoch(q / t, q, d) * qpoch(b1 * qj * q / t, q, d) /
                      (qpoch(q, q, d) * qpoch(b1 * qj * q, q, d)) * rat_pow(t, d) * lam;
      const std::vector<Rat> upper = {rat_pow(q, j - i), t, a1 * qi_inv, a2 * qj};
      const std::vector<Rat> lower = {rat_pow(q, j - i) * t, a1 * qi_inv * t,
                                      a2 * qj * q / t};
      E.at(i, j) = pre * phi_eval_terminating(upper, lower, q, q, static_cast<int>(d) + 2);
    }
  }
  return E;
}

TriMatrix c_matrix(const ParamPoint& pt, int size) {
  require_n2(pt, "c_matrix");
  const Rat q = pt.q();
  const Rat t = pt.t();
  const Rat s = pt.s[0] / pt.s[1];
  const Rat rv = pt.s_ratio_root(1, 2) / pt.v;  // s^{1/2} t^{-1/2}
  TriMatrix C(size);
  for (int j = 0; j < size; ++j) {
    const Rat q2j = rat_pow(q, 2 * static_cast<long>(j));
    const Rat qj = rat_pow(q, j);
    for (int i = j; i < size; ++i) {
      const long d = i - j;
      const Rat num = qpoch_multi({Rat(s * q2j / t), Rat(rv * qj * q), Rat(-rv * qj * q), Rat(1 / t)}, q, d);
      const Rat den = qpoch_multi({Rat(s * q2j * q), Rat(rv * qj), Rat(-rv * qj), q}, q, d);
      if (den == 0) throw DivisionByZero("c_matrix: vanishing denominator");
      C.at(i, j) = num / den * rat_pow(t, d);
    }
  }
  return C;
}

TriMatrix d_matrix(const ParamPoint& pt, int size) {
  require_n2(pt, "d_matrix");
  const Rat q = pt.q();
  const Rat t = pt.t();
  const Rat s = pt.s[0] / pt.s[1];
  TriMatrix D(size);
  for (int j = 0; j < size; ++j)
    for (int i = j; i < size; ++i) {
      const long d = i - j;
      const Rat qij = rat_pow(q, static_cast<long>(i) + j);
      const Rat num = qpoch_multi({Rat(s * qij * q / t), t}, q, d);
      const Rat den = qpoch_multi({Rat(s * qij), q}, q, d);
      if (den == 0) throw DivisionByZero("d_matrix: vanishing denominator");
      D.at(i, j) = num / den;
    }
  return D;
}

TriMatrix ctilde_matrix(const ParamPoint& pt, int size) {
  require_n2(pt, "ctilde_matrix");
  const Rat q = pt.q();
  const Rat t = pt.t();
  const Rat s = pt.s[0] / pt.s[1];
  TriMatrix Ct(size);
  for (int j = 0; j < size; ++j) {
    const Rat sq = s * rat_pow(q, 2 * static_cast<long>(j) + 1);
    for (int i = j; i < size; ++i) {
      const long d = i - j;
      const Rat num = qpoch_multi({Rat(sq / t), Rat(q / t)}, q, d);
      const Rat den = qpoch_multi({sq, q}, q, d);
      if (den == 0) throw DivisionByZero("ctilde_matrix: vanishing denominator");
      Ct.at(i, j) = num / den * rat_pow(t, d);
    }
  }
  return Ct;
}

TriMatrix ctlamc_w87(const ParamPoint& pt, int size) {
  require_n2(pt, "ctlamc_w87");
  const Rat q = pt.q();
  const Rat t = pt.t();
  const Rat sroot = pt.s_ratio_root(1, 2);
  const TriMatrix D = d_matrix(pt, size);
  TriMatrix W(size);
  for (int i = 0; i < size; ++i) {
    const Rat lam = eigenvalue(Exponent{i}, pt);
    const Rat qi_inv = rat_pow(q, -static_cast<long>(i));
    const Rat a1_sqrt = qi_inv / sroot;  // sqrt(s^-1 q^-2i)
    for (int j = 0; j <= i; ++j) {
      const std::vector<Rat> rest = {Rat(q / t), Rat(qi_inv * rat_pow(q, -static_cast<long>(j)) * t / (sroot * sroot)),
                                     Rat(pt.alpha / pt.s[0] * qi_inv),
                                     Rat(pt.s[1] / pt.alpha * qi_inv * t),
                                     rat_pow(q, static_cast<long>(j) - i)};
      W.at(i, j) = lam * D.at(i, j) *
                   w87_eval_root(a1_sqrt, rest, q, Rat(q / t), i - j + 2);
    }
  }
  return W;
}

TriMatrix ctlamc_watson(const ParamPoint& pt, int size) {
  require_n2(pt, "ctlamc_watson");
  const Rat q = pt.q();
  const Rat t = pt.t();
  const Rat s = pt.s[0] / pt.s[1];
  const TriMatrix D = d_matrix(pt, size);
  TriMatrix W(size);
  for (int i = 0; i < size; ++i) {
    const Rat lam = eigenvalue(Exponent{i}, pt);
    const Rat q2i_inv = rat_pow(q, -2 * static_cast<long>(i));
    const Rat qi_inv = rat_pow(q, -static_cast<long>(i));
    for (int j = 0; j <= i; ++j) {
      const long d = i - j;
      const Rat qji = rat_pow(q, static_cast<long>(j) - i);  // q^{-i+j}
      const Rat pre_num = qpoch_multi({Rat(q2i_inv * q / s), Rat(q / t)}, q, d);
      const Rat pre_den = qpoch_multi({Rat(pt.s[1] / pt.alpha * qi_inv * q),
                                       Rat(pt.alpha / pt.s[0] * qi_inv * q / t)},
                                      q, d);
      if (pre_den == 0) throw DivisionByZero("ctlamc_watson: vanishing prefactor");
      const std::vector<Rat> upper = {qji, Rat(pt.alpha / pt.s[0] * qi_inv),
                                      Rat(pt.s[1] / pt.alpha * qi_inv * t), qji};
      const std::vector<Rat> lower = {Rat(qji * t), Rat(qji * q / t), Rat(q2i_inv * t / s)};
      W.at(i, j) = lam * D.at(i, j) * pre_num / pre_den *
                   phi_eval_terminating(upper, lower, q, q, static_cast<int>(d) + 2);
    }
  }
  return W;
}

TriMatrix operator_matrix_n2(const ParamPoint& pt, int size) {
  require_n2(pt, "operator_matrix_n2");
  const OperatorMatrix M = operator_matrix(pt, Truncation::total_degree(size - 1));
  TriMatrix T(size);
  for (int r = 0; r < size; ++r)
    for (int c = 0; c < size; ++c) T.at(r, c) = M.m[static_cast<size_t>(r)][static_cast<size_t>(c)];
  return T;
}

}  // namespace qcommute
