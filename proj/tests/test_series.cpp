#include <doctest.h>

#include "qcommute/series.hpp"
#include "test_util.hpp"

using namespace qcommute;

namespace {

ConeSeries random_poly(RatDraw& draw, int nvars, const Truncation& trunc, int maxdeg) {
  ConeSeries s(nvars, trunc);
  for (const Exponent& e : basis_exponents(nvars, trunc)) {
    if (weight(e) > maxdeg) continue;
    if (draw.coin(3)) continue;
    s.set_coeff(e, draw.positive(1, 9) - Rat(1, 2));
  }
  return s;
}

}  // namespace

TEST_CASE("truncation admits and basis counts") {
  const Truncation td = Truncation::total_degree(4);
  CHECK(td.admits(Exponent{2, 2}));
  CHECK_FALSE(td.admits(Exponent{3, 2}));
  CHECK(basis_exponents(1, Truncation::total_degree(6)).size() == 7);
  CHECK(basis_exponents(2, td).size() == 15);  // stars and bars
  const Truncation box = Truncation::box({2, 2, 2});
  CHECK(basis_exponents(3, box).size() == 27);
  CHECK(box.admits(Exponent{2, 0, 2}));
  CHECK_FALSE(box.admits(Exponent{3, 0, 0}));
  CHECK(td.max_multiple(Exponent{1, 1}) == 2);
  CHECK(box.max_multiple(Exponent{1, 1, 1}) == 2);
}

TEST_CASE("basis order is weight first, x1 powers early") {
  const auto basis = basis_exponents(2, Truncation::total_degree(2));
  const std::vector<Exponent> want = {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
  CHECK(basis == want);
}

TEST_CASE("series multiplication matches the schoolbook oracle") {
  RatDraw draw(31);
  const Truncation trunc = Truncation::total_degree(4);
  for (int trial = 0; trial < 10; ++trial) {
    const ConeSeries a = random_poly(draw, 2, trunc, 2);
    const ConeSeries b = random_poly(draw, 2, trunc, 2);
    CHECK(testutil::same_terms(a * b, testutil::brute_force_mul(a, b)));
  }
}

TEST_CASE("geometric series inverts 1 - x1") {
  const Truncation trunc = Truncation::total_degree(5);
  ConeSeries lhs(1, trunc);
  lhs.set_coeff({0}, 1);
  lhs.set_coeff({1}, -1);
  ConeSeries geo(1, trunc);
  for (int k = 0; k <= 5; ++k) geo.set_coeff({k}, 1);
  CHECK(lhs * geo == ConeSeries::one(1, trunc));
}

TEST_CASE("ring axioms on random triples") {
  RatDraw draw(32);
  const Truncation trunc = Truncation::total_degree(3);
  for (int trial = 0; trial < 6; ++trial) {
    const ConeSeries a = random_poly(draw, 2, trunc, 3);
    const ConeSeries b = random_poly(draw, 2, trunc, 3);
    const ConeSeries c = random_poly(draw, 2, trunc, 3);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("shape mismatch is rejected") {
  ConeSeries a(2, Truncation::total_degree(3));
  ConeSeries b(2, Truncation::total_degree(4));
  CHECK_THROWS_AS(a * b, ShapeMismatch);
  ConeSeries c(1, Truncation::total_degree(3));
  CHECK_THROWS_AS(a + c, ShapeMismatch);
}

TEST_CASE("g coefficients") {
  const ParamPoint pt = testutil::fixed_point_n2();
  const Rat q = pt.q(), t = pt.t();
  CHECK(g_coeff(0, pt) == 1);
  CHECK(g_coeff(1, pt) == (1 - t) / (1 - q) * pt.u / pt.v);
  ParamPoint flat = pt;
  flat.v = flat.u;  // t = q and u = v
  CHECK(g_coeff(3, flat) == 1);
}

TEST_CASE("h expansion low coefficients") {
  const ParamPoint pt = testutil::fixed_point_n2();
  const Rat q = pt.q(), t = pt.t();
  const Truncation trunc = Truncation::total_degree(4);
  const ConeSeries h = h_expand(1, 2, pt, trunc);
  CHECK(h.coeff({0}) == 1);
  CHECK(h.coeff({1}) == (1 - q / (t * t)) * t / (1 - q) - 1);
  // direct q-binomial evaluation of the ratio, then the (1 - zeta) factor
  for (int k = 1; k <= 4; ++k) {
    const Rat rk = qpoch(q / (t * t), q, k) / qpoch(q, q, k) * rat_pow(t, k);
    const Rat rk1 = qpoch(q / (t * t), q, k - 1) / qpoch(q, q, k - 1) * rat_pow(t, k - 1);
    CHECK(h.coeff({k}) == rk - rk1);
  }
}

TEST_CASE("h at t^2 = q degenerates to 1 - zeta") {
  ParamPoint pt = testutil::fixed_point_n2();
  pt.u = Rat(4, 9);  // q = 16/81
  pt.v = Rat(2, 3);  // t = 4/9, so t^2 = q
  const Truncation trunc = Truncation::total_degree(5);
  const ConeSeries h = h_expand(1, 2, pt, trunc);
  // with a = q t^{-2} = 1 the ratio is exactly 1
  ConeSeries want(1, trunc);
  want.set_coeff({0}, 1);
  want.set_coeff({1}, -1);
  CHECK(h == want);
}

TEST_CASE("product_h structure") {
  const ParamPoint pt2 = testutil::fixed_point_n2();
  const Truncation t2 = Truncation::total_degree(4);
  CHECK(product_h(pt2, t2) == h_expand(1, 2, pt2, t2));

  const ParamPoint pt3 = testutil::fixed_point_n3();
  const Truncation t3 = Truncation::total_degree(4);
  const ConeSeries prod = product_h(pt3, t3);
  CHECK(prod.coeff({0, 0}) == 1);
  // only h(zeta_2/zeta_1) reaches the pure x1 direction
  CHECK(prod.coeff({1, 0}) == h_expand(1, 2, pt3, t3).coeff({1, 0}));
  // brute-force three-factor oracle
  const ConeSeries byhand = h_expand(1, 2, pt3, t3) *
                            (h_expand(1, 3, pt3, t3) * h_expand(2, 3, pt3, t3));
  CHECK(prod == byhand);
}

TEST_CASE("truncation monotonicity of h product") {
  const ParamPoint pt = testutil::fixed_point_n3();
  const ConeSeries big = product_h(pt, Truncation::total_degree(6));
  const ConeSeries small = product_h(pt, Truncation::total_degree(3));
  CHECK(big.restricted_to(Truncation::total_degree(3)) == small);
}

TEST_CASE("cone series JSON round trip") {
  RatDraw draw(33);
  const Truncation trunc = Truncation::total_degree(4);
  const ConeSeries s = random_poly(draw, 2, trunc, 4);
  const ConeSeries back = ConeSeries::from_json(s.to_json());
  CHECK(back == s);
  CHECK(back.to_json() == s.to_json());
}

TEST_CASE("box truncation agrees with total degree on shared exponents") {
  ParamPoint pt = testutil::fixed_point_n3();
  const Truncation box = Truncation::box({1, 2});
  const ConeSeries hp = product_h(pt, box);
  const ConeSeries hd = product_h(pt, Truncation::total_degree(3));
  for (const auto& [e, c] : hp.terms()) {
    if (weight(e) <= 3) CHECK(hd.coeff(e) == c);
  }
}
