#include <doctest.h>

#include "qcommute/eigen.hpp"
#include "test_util.hpp"

using namespace qcommute;

TEST_CASE("eigenfunction residual is exactly zero") {
  const ParamPoint pt = testutil::fixed_point_n3();
  const Truncation trunc = Truncation::total_degree(4);
  const OperatorMatrix M = operator_matrix(pt, trunc);
  for (const Exponent& j : std::vector<Exponent>{{0, 0}, {1, 0}, {0, 1}, {1, 1}}) {
    const EigenResult er = eigenfunction(M, pt, j);
    CHECK(er.f.coeff(j) == 1);
    const ConeSeries mf = M.apply(er.f);
    CHECK(mf == er.f.scaled(er.lambda));
  }
}

TEST_CASE("support stays above the leading index") {
  const ParamPoint pt = testutil::fixed_point_n3();
  const Truncation trunc = Truncation::total_degree(4);
  const EigenResult er = eigenfunction(Exponent{1, 0}, pt, trunc);
  for (const auto& [e, c] : er.f.terms()) {
    CHECK(dominated_by(Exponent{1, 0}, e));
    CHECK(c != 0);
  }
  CHECK(er.f.coeff({0, 1}) == 0);
  CHECK(er.f.coeff({0, 2}) == 0);
}

TEST_CASE("normalization scales linearly") {
  const ParamPoint pt = testutil::fixed_point_n2();
  const Truncation trunc = Truncation::total_degree(5);
  const OperatorMatrix M = operator_matrix(pt, trunc);
  const EigenResult one = eigenfunction(M, pt, Exponent{1});
  const EigenResult two = eigenfunction(M, pt, Exponent{1}, Rat(2));
  CHECK(two.f == one.f.scaled(Rat(2)));
}

TEST_CASE("n=2 solver reproduces the closed coefficient matrix") {
  const ParamPoint pt = testutil::fixed_point_n2();
  const int degree = 7;
  const OperatorMatrix M = operator_matrix(pt, Truncation::total_degree(degree));
  const TriMatrix C = c_matrix(pt, degree + 1);
  for (int j = 0; j <= 5; ++j) {
    const EigenResult er = eigenfunction(M, pt, Exponent{j});
    CHECK(er.lambda == eigenvalue(Exponent{j}, pt));
    for (int i = 0; i <= degree; ++i)
      CHECK(er.f.coeff(Exponent{i}) == (i >= j ? C.at(i, j) : Rat(0)));
  }
}

TEST_CASE("eigenfunctions do not depend on the spectral parameter (n=2 proved)") {
  const ParamPoint pt = testutil::fixed_point_n2();
  const Truncation trunc = Truncation::total_degree(5);
  const ParamPoint pt2 = pt.with_alpha(Rat(7, 4));
  const OperatorMatrix M1 = operator_matrix(pt, trunc);
  const OperatorMatrix M2 = operator_matrix(pt2, trunc);
  for (int j = 0; j <= 3; ++j) {
    CHECK(eigenfunction(M1, pt, Exponent{j}).f == eigenfunction(M2, pt2, Exponent{j}).f);
  }
}

TEST_CASE("shift powers orientation validated by the n=2 closed form") {
  // The relation multiplies f_0 at shifted s by the leading monomial;
  // the shift on s_i is q^{j_i - j_{i-1}}.  For n=2, j=1 this means
  // (s_1, s_2) -> (q s_1, s_2/q), i.e. s -> q^2 s.
  const ParamPoint pt = testutil::fixed_point_n2();
  const std::vector<int> p = shift_powers_for_index(Exponent{1}, 2);
  CHECK(p == std::vector<int>{1, -1});

  const Truncation trunc = Truncation::total_degree(6);
  const ConeSeries f1 = eigenfunction(Exponent{1}, pt, trunc).f;
  const ParamPoint shifted = pt.with_s_shift(p);
  const ConeSeries f0 = eigenfunction(Exponent{0}, shifted, trunc).f;
  CHECK(f1 == f0.shifted(Exponent{1}));

  // the closed form confirms independently: c_{i+1,1}(s) = c_{i,0}(q^2 s)
  const TriMatrix Cs = c_matrix(pt, 7);
  const TriMatrix Cq2s = c_matrix(shifted, 7);
  for (int i = 0; i < 6; ++i) CHECK(Cs.at(i + 1, 1) == Cq2s.at(i, 0));
}

TEST_CASE("shift relation holds for an n=3 index") {
  const ParamPoint pt = testutil::fixed_point_n3();
  const Truncation trunc = Truncation::total_degree(4);
  const Exponent j{1, 1};
  const std::vector<int> p = shift_powers_for_index(j, 3);
  CHECK(p == std::vector<int>{1, 0, -1});
  const ConeSeries fj = eigenfunction(j, pt, trunc).f;
  const ConeSeries f0 = eigenfunction(Exponent{0, 0}, pt.with_s_shift(p), trunc).f;
  CHECK(fj == f0.shifted(j));
}

TEST_CASE("eigenvalue collision is detected") {
  ParamPoint pt = testutil::fixed_point_n2();
  pt.v = pt.u;  // t = q: every diagonal entry equals 1
  const Truncation trunc = Truncation::total_degree(3);
  const OperatorMatrix M = operator_matrix(pt, trunc);
  CHECK_THROWS_AS(eigenfunction(M, pt, Exponent{0}), EigenvalueCollision);
}

TEST_CASE("eigen result JSON payload") {
  const ParamPoint pt = testutil::fixed_point_n2();
  const EigenResult er = eigenfunction(Exponent{1}, pt, Truncation::total_degree(4));
  const nlohmann::json j = er.to_json(pt);
  CHECK(j.at("index") == std::vector<int>{1});
  CHECK(rat_from_string(j.at("eigenvalue").get<std::string>()) == er.lambda);
  CHECK(ConeSeries::from_json(j.at("series")) == er.f);
}
