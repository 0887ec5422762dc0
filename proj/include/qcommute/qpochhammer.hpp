#pragma once

#include <span>
#include <vector>

#include "qcommute/rational.hpp"

namespace qcommute {

// q-shifted factorial (a;q)_k for any integer k.
//
//   k = 0 : 1
//   k > 0 : (1-a)(1-aq)...(1-aq^{k-1})
//   k < 0 : 1 / [(1-aq^{-1})(1-aq^{-2})...(1-aq^{k})]
//
// The negative branch throws DivisionByZero when a reciprocal factor
// vanishes (or q = 0); that signals a non-generic parameter point.
Rat qpoch(const Rat& a, const Rat& q, long k);

// Product of (a;q)_k over a parameter list.
Rat qpoch_multi(std::span<const Rat> as, const Rat& q, long k);

Rat qpoch_multi(std::initializer_list<Rat> as, const Rat& q, long k);

}  // namespace qcommute
