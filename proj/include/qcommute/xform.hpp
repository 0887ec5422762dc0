#pragma once

#include <nlohmann/json.hpp>
#include <vector>

#include "qcommute/hyperg.hpp"
#include "qcommute/series.hpp"

namespace qcommute {

// Matrix of the integral action on the monomial basis of the truncated
// cone-series space, basis ordered by (weight, lex).  Entries vanish
// unless the row exponent dominates the column exponent componentwise,
// so the matrix is lower triangular in the basis order; the diagonal
// entry at index vector j is the eigenvalue lambda_j.
struct OperatorMatrix {
  int n = 0;
  Truncation trunc = Truncation::total_degree(0);
  Rat alpha;
  std::vector<Exponent> basis;
  std::vector<std::vector<Rat>> m;  // m[row][col]

  int size() const { return static_cast<int>(basis.size()); }
  int index_of(const Exponent& e) const;  // -1 when absent
  ConeSeries apply(const ConeSeries& f) const;

  nlohmann::json to_json(const ParamPoint& pt) const;
};

// Image of the basis monomial x^j under the integral action, computed
// from the explicit lattice sum: the monomial times prod h times the
// finite sum over flow configurations k_{l,m} weighted by mu factors
// and g coefficients.  Each k_{l,m} adds cone weight |m-l|, so the
// enumeration is finite and the truncated result exact.
ConeSeries monomial_image(const Exponent& j, const ParamPoint& pt, const Truncation& trunc);

OperatorMatrix operator_matrix(const ParamPoint& pt, const Truncation& trunc);

// Dense lower-triangular matrices for the n = 2 closed forms.
struct TriMatrix {
  int size = 0;
  std::vector<Rat> e;  // row-major

  explicit TriMatrix(int n) : size(n), e(static_cast<size_t>(n) * static_cast<size_t>(n), Rat(0)) {}
  Rat& at(int r, int c) { return e[static_cast<size_t>(r) * static_cast<size_t>(size) + static_cast<size_t>(c)]; }
  const Rat& at(int r, int c) const {
    return e[static_cast<size_t>(r) * static_cast<size_t>(size) + static_cast<size_t>(c)];
  }
  static TriMatrix identity(int n);
  bool operator==(const TriMatrix& o) const { return size == o.size && e == o.e; }
};

TriMatrix mat_mul(const TriMatrix& a, const TriMatrix& b);

// Closed-form entry matrices from the two-variable analysis, all
// lower triangular.  Every formula uses s = s_1/s_2; c_matrix needs the
// tracked square root of s.
TriMatrix e_matrix_closed(const ParamPoint& pt, int size);   // entries e_{ij}
TriMatrix c_matrix(const ParamPoint& pt, int size);          // eigenfunction coefficients c_{ij}
TriMatrix d_matrix(const ParamPoint& pt, int size);          // inverse-of-C entries d_{ij}
TriMatrix ctilde_matrix(const ParamPoint& pt, int size);     // c~_{ij}
TriMatrix lambda_matrix(const ParamPoint& pt, int size);     // diag(lambda_j)

// C~ Lambda C^-1 entries straight from the very-well-poised closed form
// and from its Watson-transformed balanced 4phi3 form.
TriMatrix ctlamc_w87(const ParamPoint& pt, int size);
TriMatrix ctlamc_watson(const ParamPoint& pt, int size);

// Diagonal eigenvalue at a basis exponent (delegates to eigenvalue()).
Rat lambda_diag(const ParamPoint& pt, const Exponent& j);

// The two printed one-variable eigenvalue expressions; they must agree.
Rat lambda_n2_negative_index_form(const ParamPoint& pt, long j);
Rat lambda_n2_positive_index_form(const ParamPoint& pt, long j);

// Operator matrix as a plain TriMatrix (n = 2 only, basis = degrees).
TriMatrix operator_matrix_n2(const ParamPoint& pt, int size);

}  // namespace qcommute
