#pragma once

#include <map>
#include <vector>

#include "qcommute/param_point.hpp"
#include "qcommute/series.hpp"

namespace qcommute::testutil {

// Schoolbook convolution over explicit exponent maps, independent of
// the ConeSeries multiplication path it checks.
inline std::map<Exponent, Rat> brute_force_mul(const ConeSeries& a, const ConeSeries& b) {
  std::map<Exponent, Rat> out;
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) {
      Exponent e(ea);
      for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      if (!a.trunc().admits(e)) continue;
      out[e] += ca * cb;
    }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

inline bool same_terms(const ConeSeries& s, const std::map<Exponent, Rat>& want) {
  std::map<Exponent, Rat> got(s.terms().begin(), s.terms().end());
  return got == want;
}

inline ParamPoint fixed_point_n2() {
  // Hand-picked small generic point: u = 1/2, v = 3/2, s = (4, 9/4),
  // alpha = 5/3.
  ParamPoint pt;
  pt.n = 2;
  pt.u = Rat(1, 2);
  pt.v = Rat(3, 2);
  pt.s = {Rat(4), Rat(9, 4)};
  pt.s_root = {Rat(2), Rat(3, 2)};
  pt.alpha = Rat(5, 3);
  return pt;
}

inline ParamPoint fixed_point_n3() {
  ParamPoint pt;
  pt.n = 3;
  pt.u = Rat(1, 2);
  pt.v = Rat(5, 2);
  pt.s = {Rat(4), Rat(9, 4), Rat(25, 9)};
  pt.s_root = {Rat(2), Rat(3, 2), Rat(5, 3)};
  pt.alpha = Rat(7, 3);
  return pt;
}

}  // namespace qcommute::testutil
