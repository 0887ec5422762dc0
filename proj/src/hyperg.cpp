#include "qcommute/hyperg.hpp"

namespace qcommute {

std::vector<Rat> phi_coeffs(const std::vector<Rat>& upper, const std::vector<Rat>& lower,
                            const Rat& q, const Rat& z_scale, int order) {
  std::vector<Rat> out(static_cast<size_t>(order) + 1, Rat(0));
  out[0] = 1;
  Rat term(1);
  Rat qn(1);  // q^n
  bool terminated = false;
  for (int n = 0; n < order; ++n) {
    if (!terminated) {
      Rat num(1);
      for (const Rat& a : upper) num *= Rat(1) - a * qn;
      if (num == 0) {
        terminated = true;
      } else {
        Rat den(1);
        for (const Rat& b : lower) den *= Rat(1) - b * qn;
        den *= Rat(1) - q * qn;  // the built-in (q;q)_n factor
        if (den == 0)
          throw DivisionByZero("phi_coeffs: vanishing lower parameter factor");
        term *= num / den * z_scale;
        out[static_cast<size_t>(n) + 1] = term;
      }
    }
    qn *= q;
  }
  return out;
}

std::vector<Rat> phi_series(const PhiSpec& spec) {
  return phi_coeffs(spec.upper, spec.lower, spec.q, Rat(1), spec.z_order);
}

int detect_termination(const std::vector<Rat>& upper, const Rat& q, int terminating_bound) {
  if (q == 0) return -1;
  Rat qm(1);  // q^-m
  for (int m = 0; m <= terminating_bound; ++m) {
    for (const Rat& a : upper)
      if (a == qm) return m;
    qm /= q;
  }
  return -1;
}

Rat phi_eval_terminating(const std::vector<Rat>& upper, const std::vector<Rat>& lower,
                         const Rat& q, const Rat& z, int terminating_bound) {
  const int m = detect_termination(upper, q, terminating_bound);
  if (m < 0)
    throw NotTerminating("phi_eval_terminating: no upper parameter of the form q^-m");
  const std::vector<Rat> c = phi_coeffs(upper, lower, q, z, m);
  Rat sum(0);
  for (const Rat& t : c) sum += t;
  return sum;
}

void w87_parameter_lists(const Rat& a1_sqrt, const std::vector<Rat>& rest, const Rat& q,
                         std::vector<Rat>& upper, std::vector<Rat>& lower) {
  const Rat a1 = a1_sqrt * a1_sqrt;
  upper.clear();
  lower.clear();
  upper.push_back(a1);
  upper.push_back(q * a1_sqrt);
  upper.push_back(-q * a1_sqrt);
  lower.push_back(a1_sqrt);
  lower.push_back(-a1_sqrt);
  for (const Rat& a : rest) {
    upper.push_back(a);
    if (a == 0) throw DivisionByZero("w87: zero parameter");
    lower.push_back(q * a1 / a);
  }
}

Rat w87_eval_root(const Rat& a1_sqrt, const std::vector<Rat>& rest, const Rat& q,
                  const Rat& z, int terminating_bound) {
  std::vector<Rat> upper, lower;
  w87_parameter_lists(a1_sqrt, rest, q, upper, lower);
  return phi_eval_terminating(upper, lower, q, z, terminating_bound);
}

Rat w87_eval(const Rat& a1, const std::vector<Rat>& rest, const Rat& q, const Rat& z,
             int terminating_bound) {
  auto root = exact_sqrt(a1);
  if (!root) throw NotASquare("w87_eval: head parameter is not a square in Q");
  return w87_eval_root(*root, rest, q, z, terminating_bound);
}

}  // namespace qcommute
