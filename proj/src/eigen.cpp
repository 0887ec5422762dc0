#include "qcommute/eigen.hpp"

namespace qcommute {

nlohmann::json EigenResult::to_json(const ParamPoint& pt) const {
  nlohmann::json out;
  out["point"] = pt.to_json();
  out["index"] = j;
  out["eigenvalue"] = rat_to_string(lambda);
  out["series"] = f.to_json();
  return out;
}

EigenResult eigenfunction(const OperatorMatrix& M, const ParamPoint& pt, const Exponent& j,
                          const Rat& normalization) {
  const int jdx = M.index_of(j);
  if (jdx < 0) throw Error("eigenfunction: index vector outside the truncated basis");
  const Rat lam = eigenvalue(j, pt);

  ConeSeries f(M.n - 1, M.trunc);
  std::vector<Rat> c(static_cast<size_t>(M.size()), Rat(0));
  c[static_cast<size_t>(jdx)] = normalization;
  f.set_coeff(j, normalization);

  for (int i = jdx + 1; i < M.size(); ++i) {
    const Exponent& ei = M.basis[static_cast<size_t>(i)];
    if (!dominated_by(j, ei)) continue;  // support condition: c_i = 0 off the cone above j
    Rat acc(0);
    for (int k = jdx; k < i; ++k) {
      const Rat& mik = M.m[static_cast<size_t>(i)][static_cast<size_t>(k)];
      if (mik == 0 || c[static_cast<size_t>(k)] == 0) continue;
      acc += mik * c[static_cast<size_t>(k)];
    }
    const Rat gap = lam - M.m[static_cast<size_t>(i)][static_cast<size_t>(i)];
    if (gap == 0)
      throw EigenvalueCollision("eigenfunction: lambda_j equals a diagonal entry above j");
    c[static_cast<size_t>(i)] = acc / gap;
    f.set_coeff(ei, c[static_cast<size_t>(i)]);
  }
  return EigenResult{j, lam, std::move(f)};
}

EigenResult eigenfunction(const Exponent& j, const ParamPoint& pt, const Truncation& trunc) {
  const OperatorMatrix M = operator_matrix(pt, trunc);
  return eigenfunction(M, pt, j);
}

std::vector<int> shift_powers_for_index(const Exponent& j, int n) {
  std::vector<int> p(static_cast<size_t>(n), 0);
  for (int i = 1; i <= n; ++i) {
    const int prev = (i == 1) ? 0 : j[static_cast<size_t>(i - 2)];
    const int cur = (i == n) ? 0 : j[static_cast<size_t>(i - 1)];
    p[static_cast<size_t>(i - 1)] = cur - prev;
  }
  return p;
}

}  // namespace qcommute
