#pragma once

#include <nlohmann/json.hpp>
#include <vector>

#include "qcommute/errors.hpp"

namespace qcommute {

// Exponent vector in the cone coordinates x_i = zeta_{i+1}/zeta_i,
// i = 1..n-1.  All entries are non-negative.
using Exponent = std::vector<int>;

int weight(const Exponent& e);

// a <= b in every coordinate.
bool dominated_by(const Exponent& a, const Exponent& b);

Exponent exponent_add(const Exponent& a, const Exponent& b);

// Basis order: weight ascending, ties broken so that powers of x_1 come
// first within a weight class (descending lexicographic tie-break).
// Any linear extension of the componentwise order works; this one keeps
// the triangular structure easy to eyeball.
struct WeightLexLess {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

class Truncation {
 public:
  enum class Mode { TotalDegree, Box };

  static Truncation total_degree(int bound);
  static Truncation box(std::vector<int> bounds);

  Mode mode() const { return mode_; }
  int degree_bound() const { return bound_; }
  const std::vector<int>& box_bounds() const { return box_; }

  bool admits(const Exponent& e) const;

  // Largest total weight any admitted exponent can have.
  int max_weight(int nvars) const;

  // Largest k such that k*step is admitted (step non-zero).
  int max_multiple(const Exponent& step) const;

  bool operator==(const Truncation& o) const;

  nlohmann::json to_json() const;
  static Truncation from_json(const nlohmann::json& j);

 private:
  Mode mode_ = Mode::TotalDegree;
  int bound_ = 0;
  std::vector<int> box_;
};

// All admitted exponents on nvars coordinates, sorted by WeightLexLess.
std::vector<Exponent> basis_exponents(int nvars, const Truncation& trunc);

}  // namespace qcommute
