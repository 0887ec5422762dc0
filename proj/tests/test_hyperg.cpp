#include <doctest.h>

#include "qcommute/hyperg.hpp"
#include "qcommute/param_point.hpp"

using namespace qcommute;

TEST_CASE("phi_series basics") {
  const Rat q(1, 3), b(2, 5), c(3, 7), z(1);
  PhiSpec spec{{Rat(1, 2), b}, {c}, q, 4};
  const std::vector<Rat> cf = phi_series(spec);
  CHECK(cf[0] == 1);
  // direct term check against the pochhammer quotient
  for (int n = 1; n <= 4; ++n) {
    const Rat want = qpoch_multi({Rat(1, 2), b}, q, n) / (qpoch(c, q, n) * qpoch(q, q, n));
    CHECK(cf[static_cast<size_t>(n)] == want);
  }
}

TEST_CASE("upper parameter 1 kills everything past the constant term") {
  PhiSpec spec{{Rat(1), Rat(2, 3)}, {Rat(1, 5)}, Rat(1, 4), 5};
  const std::vector<Rat> cf = phi_series(spec);
  CHECK(cf[0] == 1);
  for (int n = 1; n <= 5; ++n) CHECK(cf[static_cast<size_t>(n)] == 0);
}

TEST_CASE("terminating 2phi1 with upper q^-1") {
  const Rat q(1, 4), b(2, 3), c(5, 7);
  PhiSpec spec{{Rat(1) / q, b}, {c}, q, 3};
  const std::vector<Rat> cf = phi_series(spec);
  const Rat want1 = (1 - Rat(1) / q) * (1 - b) / ((1 - c) * (1 - q));
  CHECK(cf[1] == want1);
  CHECK(cf[2] == 0);
  CHECK(cf[3] == 0);
}

TEST_CASE("termination detection is exact") {
  const Rat q(2, 7);
  RatDraw draw(21);
  for (int m = 0; m <= 5; ++m) {
    const std::vector<Rat> upper = {rat_pow(q, -m), Rat(3, 5)};
    CHECK(detect_termination(upper, q, 10) == m);
    // flagged terminating at m: coefficient m+1 vanishes at random z
    for (int trial = 0; trial < 5; ++trial) {
      const Rat z = draw.positive(1, 9);
      const std::vector<Rat> cf = phi_coeffs(upper, {Rat(5, 9)}, q, z, m + 2);
      CHECK(cf[static_cast<size_t>(m) + 1] == 0);
    }
  }
  CHECK(detect_termination({Rat(3, 5)}, q, 12) == -1);
  CHECK_THROWS_AS(phi_eval_terminating({Rat(3, 5)}, {Rat(1, 2)}, q, Rat(1), 12),
                  NotTerminating);
}

TEST_CASE("phi_eval_terminating sums the finite series") {
  const Rat q(1, 3), z(4, 5);
  // m = 0: single term
  CHECK(phi_eval_terminating({Rat(1), Rat(1, 2)}, {Rat(1, 7)}, q, z, 4) == 1);
  // m = 2 against a hand-rolled sum
  const std::vector<Rat> upper = {rat_pow(q, -2), Rat(1, 2)};
  const std::vector<Rat> lower = {Rat(1, 7)};
  Rat hand(0);
  for (int n = 0; n <= 2; ++n)
    hand += qpoch_multi({upper[0], upper[1]}, q, n) /
            (qpoch(lower[0], q, n) * qpoch(q, q, n)) * rat_pow(z, n);
  CHECK(phi_eval_terminating(upper, lower, q, z, 4) == hand);
}

TEST_CASE("very-well-poised completion pairs parameters against the head") {
  const Rat q(1, 5);
  const Rat a1_sqrt(2, 3);
  const Rat a1 = a1_sqrt * a1_sqrt;
  const std::vector<Rat> rest = {Rat(1, 2), Rat(3, 4), rat_pow(q, -3)};
  std::vector<Rat> upper, lower;
  w87_parameter_lists(a1_sqrt, rest, q, upper, lower);
  REQUIRE(upper.size() == 6);
  REQUIRE(lower.size() == 5);
  CHECK(upper[0] == a1);
  CHECK(upper[1] == q * a1_sqrt);
  CHECK(upper[2] == -q * a1_sqrt);
  CHECK(lower[0] == a1_sqrt);
  CHECK(lower[1] == -a1_sqrt);
  // each extra a_k sits opposite q a1 / a_k
  for (size_t k = 0; k < rest.size(); ++k) CHECK(lower[k + 2] == q * a1 / upper[k + 3]);

  CHECK_THROWS_AS(w87_eval(Rat(2), rest, q, Rat(1), 5), NotASquare);
  CHECK(w87_eval(a1, rest, q, Rat(1, 2), 5) ==
        w87_eval_root(a1_sqrt, rest, q, Rat(1, 2), 5));
}
