#include "qcommute/qpochhammer.hpp"

namespace qcommute {

Rat qpoch(const Rat& a, const Rat& q, long k) {
  if (k == 0) return Rat(1);
  if (k > 0) {
    Rat prod(1);
    Rat aq = a;
    for (long m = 0; m < k; ++m) {
      prod *= Rat(1) - aq;
      if (prod == 0) return prod;  // stays zero; skip the remaining factors
      aq *= q;
    }
    return prod;
  }
  // negative index: reciprocal of factors at q^{-1}..q^{k}
  if (q == 0) throw DivisionByZero("qpoch: negative index with q = 0");
  Rat prod(1);
  const Rat qinv = Rat(1) / q;
  Rat aq = a * qinv;
  for (long m = 0; m < -k; ++m) {
    Rat factor = Rat(1) - aq;
    if (factor == 0)
      throw DivisionByZero("qpoch: vanishing factor at negative index (non-generic point)");
    prod *= factor;
    aq *= qinv;
  }
  return Rat(1) / prod;
}

Rat qpoch_multi(std::span<const Rat> as, const Rat& q, long k) {
  Rat prod(1);
  for (const Rat& a : as) prod *= qpoch(a, q, k);
  return prod;
}

Rat qpoch_multi(std::initializer_list<Rat> as, const Rat& q, long k) {
  Rat prod(1);
  for (const Rat& a : as) prod *= qpoch(a, q, k);
  return prod;
}

}  // namespace qcommute
