#include <doctest.h>

#include "qcommute/param_point.hpp"
#include "test_util.hpp"

using namespace qcommute;

TEST_CASE("qpoch basic values") {
  const Rat a(3), q(2);
  CHECK(qpoch(a, q, 0) == 1);
  CHECK(qpoch(Rat(2), Rat(1, 2), 2) == 0);  // (1-2)(1-1)
  // negative index: 1/(1 - a/q) at a=3, q=2
  CHECK(qpoch(a, q, -1) == -2);
  CHECK(qpoch_multi({Rat(1, 2), Rat(1, 3)}, Rat(1, 2), 1) == Rat(1, 3));
  CHECK(qpoch_multi({a, q}, q, 0) == 1);
  CHECK(qpoch_multi({Rat(1, 2)}, Rat(1, 2), 3) == qpoch(Rat(1, 2), Rat(1, 2), 3));
}

TEST_CASE("qpoch bridge recurrence over all integer indices") {
  RatDraw draw(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Rat a = draw.positive(2, 9);
    const Rat q = draw.positive(2, 9) / 10;
    for (long k = -6; k <= 6; ++k) {
      CHECK(qpoch(a, q, k + 1) == qpoch(a, q, k) * (1 - a * rat_pow(q, k)));
    }
  }
}

TEST_CASE("qpoch reciprocal pairing") {
  RatDraw draw(12);
  for (int trial = 0; trial < 20; ++trial) {
    const Rat a = draw.positive(2, 9);
    const Rat q = draw.positive(2, 9) / 11;
    for (long k = 1; k <= 6; ++k) {
      CHECK(qpoch(a, q, -k) * qpoch(a * rat_pow(q, -k), q, k) == 1);
    }
  }
}

TEST_CASE("qpoch division by zero at negative index") {
  // a = q makes (1 - a q^{-1}) vanish
  CHECK_THROWS_AS(qpoch(Rat(1, 2), Rat(1, 2), -1), DivisionByZero);
  CHECK_THROWS_AS(qpoch(Rat(1), Rat(0), -2), DivisionByZero);
}

TEST_CASE("mu identity values and multiplicativity") {
  const ParamPoint pt = testutil::fixed_point_n2();
  CHECK(mu(pt.alpha / pt.s[0], 0, pt) == 1);

  // t = q collapse: v = u makes mu constant 1
  ParamPoint flat = pt;
  flat.v = flat.u;
  CHECK(mu(Rat(5, 7), 3, flat) == 1);
  CHECK(mu(Rat(5, 7), -2, flat) == 1);

  RatDraw draw(13);
  for (int trial = 0; trial < 25; ++trial) {
    const Rat a = draw.positive(2, 9);
    const long k = static_cast<long>(draw.raw() % 7) - 3;
    const long l = static_cast<long>(draw.raw() % 7) - 3;
    const Rat lhs = mu(a, k + l, pt);
    const Rat rhs = mu(a, k, pt) * mu(a * rat_pow(pt.q(), k), l, pt);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("eigenvalue unrolls the index differences") {
  const ParamPoint pt = testutil::fixed_point_n3();
  const Rat q = pt.q();
  const Rat t = pt.t();
  // n=3, j=(1,0): indices j0-j1 = -1, j1-j2 = 1, j2-j3 = 0
  const Rat a1 = pt.alpha / pt.s[0];
  const Rat a2 = pt.alpha / pt.s[1];
  const Rat want = qpoch(a1, q, -1) / qpoch(a1 * q / t, q, -1) * qpoch(a2, q, 1) /
                   qpoch(a2 * q / t, q, 1);
  CHECK(eigenvalue(Exponent{1, 0}, pt) == want);
  CHECK(eigenvalue(Exponent{0, 0}, pt) == 1);
}

TEST_CASE("genericity screen rejects degenerate points") {
  const Truncation trunc = Truncation::total_degree(4);
  ParamPoint pt = testutil::fixed_point_n2();
  CHECK(is_generic(pt, trunc));

  ParamPoint q1 = pt;
  q1.u = 1;  // q = 1
  CHECK_FALSE(is_generic(q1, trunc));

  ParamPoint collide = pt;
  collide.v = collide.u;  // t = q flattens the whole spectrum
  CHECK_FALSE(is_generic(collide, trunc));

  ParamPoint zero = pt;
  zero.alpha = 0;
  CHECK_FALSE(is_generic(zero, trunc));
}

TEST_CASE("sampler produces generic points deterministically") {
  const Truncation trunc = Truncation::total_degree(5);
  PointSampler s1(3, trunc, 42), s2(3, trunc, 42);
  const ParamPoint a = s1.sample_point();
  const ParamPoint b = s2.sample_point();
  CHECK(a.to_json() == b.to_json());
  CHECK(is_generic(a, trunc));
  CHECK(a.has_roots());
  for (int i = 0; i < a.n; ++i) CHECK(a.s_root[i] * a.s_root[i] == a.s[i]);

  PointSampler s3(3, trunc, 43);
  CHECK_FALSE(s3.sample_point().to_json() == a.to_json());
}

TEST_CASE("param point JSON round trip recovers roots") {
  const ParamPoint pt = testutil::fixed_point_n3();
  const ParamPoint back = ParamPoint::from_json(pt.to_json());
  CHECK(back.n == 3);
  CHECK(back.u == pt.u);
  CHECK(back.s == pt.s);
  CHECK(back.has_roots());
  CHECK(back.s_root == pt.s_root);
  CHECK(back.to_json() == pt.to_json());
}

TEST_CASE("s shift moves roots along") {
  const ParamPoint pt = testutil::fixed_point_n2();
  const ParamPoint sh = pt.with_s_shift({1, -1});
  CHECK(sh.s[0] == pt.s[0] * pt.q());
  CHECK(sh.s[1] == pt.s[1] / pt.q());
  CHECK(sh.s_root[0] * sh.s_root[0] == sh.s[0]);
  CHECK(sh.s_root[1] * sh.s_root[1] == sh.s[1]);
}

TEST_CASE("rational helpers") {
  CHECK(rat_from_string("-7/2") == Rat(-7, 2));
  CHECK(rat_from_string("42") == 42);
  CHECK(rat_to_string(Rat(6, 4)) == "3/2");
  CHECK_THROWS_AS(rat_from_string("1/0"), ParseError);
  CHECK_THROWS_AS(rat_from_string("x"), ParseError);
  CHECK(exact_sqrt(Rat(9, 4)).value() == Rat(3, 2));
  CHECK_FALSE(exact_sqrt(Rat(2)).has_value());
  CHECK_FALSE(exact_sqrt(Rat(-4)).has_value());
  CHECK(rat_pow(Rat(2, 3), -2) == Rat(9, 4));
  CHECK_THROWS_AS(rat_pow(Rat(0), -1), DivisionByZero);
}
