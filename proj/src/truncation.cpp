#include "qcommute/truncation.hpp"

#include <algorithm>
#include <numeric>

namespace qcommute {

int weight(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool dominated_by(const Exponent& a, const Exponent& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponent exponent_add(const Exponent& a, const Exponent& b) {
  Exponent r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

bool WeightLexLess::operator()(const Exponent& a, const Exponent& b) const {
  const int wa = weight(a), wb = weight(b);
  if (wa != wb) return wa < wb;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Truncation Truncation::total_degree(int bound) {
  Truncation t;
  t.mode_ = Mode::TotalDegree;
  t.bound_ = bound;
  return t;
}

Truncation Truncation::box(std::vector<int> bounds) {
  Truncation t;
  t.mode_ = Mode::Box;
  t.box_ = std::move(bounds);
  return t;
}

bool Truncation::admits(const Exponent& e) const {
  for (int c : e)
    if (c < 0) return false;
  if (mode_ == Mode::TotalDegree) return weight(e) <= bound_;
  if (e.size() != box_.size()) return false;
  for (size_t i = 0; i < e.size(); ++i)
    if (e[i] > box_[i]) return false;
  return true;
}

int Truncation::max_weight(int nvars) const {
  if (mode_ == Mode::TotalDegree) return bound_;
  (void)nvars;
  return std::accumulate(box_.begin(), box_.end(), 0);
}

int Truncation::max_multiple(const Exponent& step) const {
  Exponent e(step.size(), 0);
  int k = 0;
  while (true) {
    e = exponent_add(e, step);
    if (!admits(e)) return k;
    ++k;
  }
}

bool Truncation::operator==(const Truncation& o) const {
  return mode_ == o.mode_ && bound_ == o.bound_ && box_ == o.box_;
}

nlohmann::json Truncation::to_json() const {
  nlohmann::json j;
  if (mode_ == Mode::TotalDegree) {
    j["mode"] = "total_degree";
    j["bound"] = bound_;
  } else {
    j["mode"] = "box";
    j["bound"] = box_;
  }
  return j;
}

Truncation Truncation::from_json(const nlohmann::json& j) {
  const std::string mode = j.at("mode").get<std::string>();
  if (mode == "total_degree") return total_degree(j.at("bound").get<int>());
  if (mode == "box") return box(j.at("bound").get<std::vector<int>>());
  throw ParseError("unknown truncation mode: " + mode);
}

namespace {
void enumerate_rec(int nvars, const Truncation& trunc, Exponent& cur, int pos,
                   int weight_used, std::vector<Exponent>& out) {
  if (pos == nvars) {
    out.push_back(cur);
    return;
  }
  const int maxk = trunc.mode() == Truncation::Mode::Box
                       ? trunc.box_bounds()[pos]
                       : trunc.degree_bound() - weight_used;
  for (int k = 0; k <= maxk; ++k) {
    cur[pos] = k;
    enumerate_rec(nvars, trunc, cur, pos + 1, weight_used + k, out);
  }
  cur[pos] = 0;
}
}  // namespace

std::vector<Exponent> basis_exponents(int nvars, const Truncation& trunc) {
  std::vector<Exponent> out;
  Exponent cur(nvars, 0);
  enumerate_rec(nvars, trunc, cur, 0, 0, out);
  std::sort(out.begin(), out.end(), WeightLexLess{});
  return out;
}

}  // namespace qcommute
