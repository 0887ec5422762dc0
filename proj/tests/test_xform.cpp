#include <doctest.h>

#include "qcommute/xform.hpp"
#include "test_util.hpp"

using namespace qcommute;

namespace {

// Hand enumeration of the configurations feeding a unit-step entry:
// all flows zero with the h coefficient, plus one unit flow on either
// orientation of the adjacent pair.
Rat unit_step_oracle(const ParamPoint& pt, const Exponent& j, int w) {
  const Rat q = pt.q(), t = pt.t();
  const int n = pt.n;
  auto mu_prod = [&](int target, int delta) {
    Rat prod(1);
    for (int r = 1; r <= n; ++r) {
      const long prev = (r == 1) ? 0 : j[static_cast<size_t>(r - 2)];
      const long cur = (r == n) ? 0 : j[static_cast<size_t>(r - 1)];
      long idx = prev - cur;
      if (r == target) idx += delta;
      prod *= mu(pt.alpha / pt.s[static_cast<size_t>(r - 1)], idx, pt);
    }
    return prod;
  };
  const Rat h1 = (1 - q / (t * t)) * t / (1 - q) - 1;
  const Rat g1 = g_coeff(1, pt);
  // all-zero flows with the h term, then k_{w,w+1} = 1 and k_{w+1,w} = 1
  return mu_prod(0, 0) * h1 + g1 * mu_prod(w + 1, +1) + g1 * mu_prod(w, -1);
}

}  // namespace

TEST_CASE("monomial image constant term and diagonal") {
  const ParamPoint pt = testutil::fixed_point_n3();
  const Truncation trunc = Truncation::total_degree(3);
  const ConeSeries img0 = monomial_image(Exponent{0, 0}, pt, trunc);
  CHECK(img0.coeff({0, 0}) == 1);

  for (const Exponent& j : basis_exponents(2, trunc)) {
    const ConeSeries img = monomial_image(j, pt, trunc);
    CHECK(img.coeff(j) == eigenvalue(j, pt));
  }
}

TEST_CASE("operator matrix diagonal law and triangularity") {
  const ParamPoint pt = testutil::fixed_point_n3();
  const Truncation trunc = Truncation::total_degree(4);
  const OperatorMatrix M = operator_matrix(pt, trunc);
  for (int i = 0; i < M.size(); ++i) {
    CHECK(M.m[i][i] == lambda_diag(pt, M.basis[i]));
    for (int c = 0; c < M.size(); ++c) {
      if (!dominated_by(M.basis[c], M.basis[i])) CHECK(M.m[i][c] == 0);
    }
  }
}

TEST_CASE("diagonal is all ones at t = q") {
  ParamPoint pt = testutil::fixed_point_n2();
  pt.v = pt.u;  // t = q
  const OperatorMatrix M = operator_matrix(pt, Truncation::total_degree(5));
  for (int i = 0; i < M.size(); ++i) CHECK(M.m[i][i] == 1);
}

TEST_CASE("unit-step entries match the hand enumeration") {
  const ParamPoint pt3 = testutil::fixed_point_n3();
  const Truncation trunc = Truncation::total_degree(4);
  const OperatorMatrix M = operator_matrix(pt3, trunc);
  for (const Exponent& j : basis_exponents(2, Truncation::total_degree(2))) {
    for (int w = 1; w <= 2; ++w) {
      Exponent up(j);
      up[static_cast<size_t>(w - 1)] += 1;
      const int r = M.index_of(up), c = M.index_of(j);
      REQUIRE(r >= 0);
      REQUIRE(c >= 0);
      CHECK(M.m[static_cast<size_t>(r)][static_cast<size_t>(c)] ==
            unit_step_oracle(pt3, j, w));
    }
  }
}

TEST_CASE("n=2 operator factorizes through the closed entry matrix") {
  const ParamPoint pt = testutil::fixed_point_n2();
  const int size = 7;
  const TriMatrix M = operator_matrix_n2(pt, size);
  const TriMatrix E = e_matrix_closed(pt, size);
  TriMatrix L(size);
  for (int i = 0; i < size; ++i) {
    L.at(i, i) = 1;
    if (i > 0) L.at(i, i - 1) = -1;
  }
  CHECK(mat_mul(L, E) == M);
}

TEST_CASE("closed matrices have unit diagonals, e matrix carries the eigenvalues") {
  const ParamPoint pt = testutil::fixed_point_n2();
  const int size = 6;
  const TriMatrix C = c_matrix(pt, size);
  const TriMatrix D = d_matrix(pt, size);
  const TriMatrix Ct = ctilde_matrix(pt, size);
  const TriMatrix E = e_matrix_closed(pt, size);
  for (int i = 0; i < size; ++i) {
    CHECK(C.at(i, i) == 1);
    CHECK(D.at(i, i) == 1);
    CHECK(Ct.at(i, i) == 1);
    CHECK(E.at(i, i) == eigenvalue(Exponent{i}, pt));
    for (int j = i + 1; j < size; ++j) {
      CHECK(C.at(i, j) == 0);
      CHECK(E.at(i, j) == 0);
    }
  }
  CHECK(E.at(0, 0) == 1);  // lambda_0 = 1
}

TEST_CASE("C inverse and the all-ones product") {
  const ParamPoint pt = testutil::fixed_point_n2();
  const int size = 6;
  const TriMatrix CD = mat_mul(c_matrix(pt, size), d_matrix(pt, size));
  CHECK(CD == TriMatrix::identity(size));
  // d_10 c_00 + d_11 c_10 = 0 rearranged: the (1,0) entry vanishes
  const TriMatrix DC = mat_mul(d_matrix(pt, size), c_matrix(pt, size));
  CHECK(DC == TriMatrix::identity(size));

  const TriMatrix CtD = mat_mul(ctilde_matrix(pt, size), d_matrix(pt, size));
  for (int i = 0; i < size; ++i)
    for (int j = 0; j <= i; ++j) CHECK(CtD.at(i, j) == 1);
}

TEST_CASE("the three entry formulas agree with the matrix product") {
  const ParamPoint pt = testutil::fixed_point_n2();
  const int size = 6;
  const TriMatrix prod =
      mat_mul(mat_mul(ctilde_matrix(pt, size), lambda_matrix(pt, size)), d_matrix(pt, size));
  CHECK(prod == e_matrix_closed(pt, size));
  CHECK(prod == ctlamc_w87(pt, size));
  CHECK(prod == ctlamc_watson(pt, size));
  // diagonal of the sandwich is the eigenvalue list
  for (int i = 0; i < size; ++i) CHECK(prod.at(i, i) == eigenvalue(Exponent{i}, pt));
}

TEST_CASE("two printed eigenvalue forms agree") {
  const ParamPoint pt = testutil::fixed_point_n2();
  for (long j = 0; j <= 6; ++j) {
    const Rat l1 = lambda_n2_negative_index_form(pt, j);
    const Rat l2 = lambda_n2_positive_index_form(pt, j);
    CHECK(l1 == l2);
    CHECK(l1 == eigenvalue(Exponent{static_cast<int>(j)}, pt));
  }
}

TEST_CASE("operator truncation restriction invariance") {
  const ParamPoint pt = testutil::fixed_point_n3();
  const OperatorMatrix big = operator_matrix(pt, Truncation::total_degree(5));
  const OperatorMatrix small = operator_matrix(pt, Truncation::total_degree(3));
  for (int r = 0; r < small.size(); ++r)
    for (int c = 0; c < small.size(); ++c) {
      const int R = big.index_of(small.basis[static_cast<size_t>(r)]);
      const int C = big.index_of(small.basis[static_cast<size_t>(c)]);
      CHECK(big.m[static_cast<size_t>(R)][static_cast<size_t>(C)] ==
            small.m[static_cast<size_t>(r)][static_cast<size_t>(c)]);
    }
  // box window restriction agrees too
  const OperatorMatrix boxed = operator_matrix(pt, Truncation::box({1, 1}));
  for (int r = 0; r < boxed.size(); ++r)
    for (int c = 0; c < boxed.size(); ++c) {
      const int R = big.index_of(boxed.basis[static_cast<size_t>(r)]);
      const int C = big.index_of(boxed.basis[static_cast<size_t>(c)]);
      CHECK(big.m[static_cast<size_t>(R)][static_cast<size_t>(C)] ==
            boxed.m[static_cast<size_t>(r)][static_cast<size_t>(c)]);
    }
}

TEST_CASE("matrix JSON carries basis and fraction entries") {
  const ParamPoint pt = testutil::fixed_point_n2();
  const OperatorMatrix M = operator_matrix(pt, Truncation::total_degree(3));
  const nlohmann::json j = M.to_json(pt);
  CHECK(j.at("basis").size() == 4);
  CHECK(j.at("entries").size() == 4);
  CHECK(j.at("point").at("u").get<std::string>() == "1/2");
  CHECK(rat_from_string(j.at("entries")[0][0].get<std::string>()) == 1);
}
