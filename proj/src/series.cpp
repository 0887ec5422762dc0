#include "qcommute/series.hpp"

#include "qcommute/hyperg.hpp"

namespace qcommute {

ConeSeries ConeSeries::one(int nvars, const Truncation& trunc) {
  ConeSeries s(nvars, trunc);
  s.set_coeff(Exponent(static_cast<size_t>(nvars), 0), Rat(1));
  return s;
}

ConeSeries ConeSeries::monomial(int nvars, const Truncation& trunc, const Exponent& e,
                                const Rat& c) {
  ConeSeries s(nvars, trunc);
  s.set_coeff(e, c);
  return s;
}

Rat ConeSeries::coeff(const Exponent& e) const {
  auto it = coeffs_.find(e);
  return it == coeffs_.end() ? Rat(0) : it->second;
}

void ConeSeries::set_coeff(const Exponent& e, const Rat& c) {
  if (!trunc_.admits(e)) return;
  if (c == 0)
    coeffs_.erase(e);
  else
    coeffs_[e] = c;
}

void ConeSeries::add_to_coeff(const Exponent& e, const Rat& c) {
  if (!trunc_.admits(e) || c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

void ConeSeries::check_shape(const ConeSeries& o) const {
  if (nvars_ != o.nvars_ || !(trunc_ == o.trunc_))
    throw ShapeMismatch("ConeSeries: operands have different shape or truncation");
}

ConeSeries ConeSeries::operator+(const ConeSeries& o) const {
  check_shape(o);
  ConeSeries r(*this);
  for (const auto& [e, c] : o.coeffs_) r.add_to_coeff(e, c);
  return r;
}

ConeSeries ConeSeries::operator-(const ConeSeries& o) const {
  check_shape(o);
  ConeSeries r(*this);
  for (const auto& [e, c] : o.coeffs_) r.add_to_coeff(e, -c);
  return r;
}

ConeSeries ConeSeries::operator*(const ConeSeries& o) const { return series_mul(*this, o); }

ConeSeries series_mul(const ConeSeries& a, const ConeSeries& b) {
  if (a.nvars() != b.nvars() || !(a.trunc() == b.trunc()))
    throw ShapeMismatch("series_mul: operands have different shape or truncation");
  ConeSeries r(a.nvars(), a.trunc());
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      const Exponent e = exponent_add(ea, eb);
      if (!a.trunc().admits(e)) continue;
      r.add_to_coeff(e, ca * cb);
    }
  }
  return r;
}

ConeSeries ConeSeries::scaled(const Rat& c) const {
  ConeSeries r(nvars_, trunc_);
  if (c == 0) return r;
  for (const auto& [e, v] : coeffs_) r.coeffs_.emplace(e, v * c);
  return r;
}

ConeSeries ConeSeries::shifted(const Exponent& j) const {
  ConeSeries r(nvars_, trunc_);
  for (const auto& [e, v] : coeffs_) r.set_coeff(exponent_add(e, j), v);
  return r;
}

ConeSeries ConeSeries::restricted_to(const Truncation& t) const {
  ConeSeries r(nvars_, t);
  for (const auto& [e, v] : coeffs_) r.set_coeff(e, v);
  return r;
}

bool ConeSeries::operator==(const ConeSeries& o) const {
  return nvars_ == o.nvars_ && trunc_ == o.trunc_ && coeffs_ == o.coeffs_;
}

nlohmann::json ConeSeries::to_json() const {
  nlohmann::json j;
  j["n"] = nvars_ + 1;
  j["trunc"] = trunc_.to_json();
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [e, c] : coeffs_) {  // map iterates in (weight, lex) order
    nlohmann::json term;
    term["e"] = e;
    term["c"] = rat_to_string(c);
    arr.push_back(term);
  }
  j["coeffs"] = arr;
  return j;
}

ConeSeries ConeSeries::from_json(const nlohmann::json& j) {
  const int n = j.at("n").get<int>();
  ConeSeries s(n - 1, Truncation::from_json(j.at("trunc")));
  for (const auto& term : j.at("coeffs"))
    s.set_coeff(term.at("e").get<Exponent>(), rat_from_string(term.at("c").get<std::string>()));
  return s;
}

Rat g_coeff(long k, const ParamPoint& pt) {
  const Rat q = pt.q();
  const Rat num = qpoch(pt.t(), q, k);
  const Rat den = qpoch(q, q, k);
  if (den == 0) throw DivisionByZero("g_coeff: (q;q)_k = 0");
  return num / den * rat_pow(pt.half_power(), k);
}

Exponent pair_exponent(int l, int m, int nvars) {
  Exponent e(static_cast<size_t>(nvars), 0);
  for (int i = l; i < m; ++i) e[static_cast<size_t>(i - 1)] = 1;
  return e;
}

ConeSeries pair_series(int l, int m, const std::vector<Rat>& coeffs, const Truncation& trunc,
                       int nvars) {
  ConeSeries s(nvars, trunc);
  const Exponent step = pair_exponent(l, m, nvars);
  Exponent e(static_cast<size_t>(nvars), 0);
  for (size_t k = 0; k < coeffs.size(); ++k) {
    if (!trunc.admits(e)) break;
    s.set_coeff(e, coeffs[k]);
    e = exponent_add(e, step);
  }
  return s;
}

ConeSeries one_minus_pair(int l, int m, const Truncation& trunc, int nvars) {
  ConeSeries s = ConeSeries::one(nvars, trunc);
  s.add_to_coeff(pair_exponent(l, m, nvars), Rat(-1));
  return s;
}

ConeSeries h_expand(int l, int m, const ParamPoint& pt, const Truncation& trunc) {
  const int nvars = pt.n - 1;
  const Exponent step = pair_exponent(l, m, nvars);
  const int kmax = trunc.max_multiple(step);
  const Rat q = pt.q();
  const Rat t = pt.t();
  const Rat a = q / (t * t);
  // ratio part: sum_k (qt^-2;q)_k/(q;q)_k (t zeta)^k
  const std::vector<Rat> ratio = phi_coeffs({a}, {}, q, t, kmax);
  // multiply by (1 - zeta): coefficient k becomes r_k - r_{k-1}
  std::vector<Rat> h(ratio.size() + 1, Rat(0));
  for (size_t k = 0; k < ratio.size(); ++k) {
    h[k] += ratio[k];
    h[k + 1] -= ratio[k];
  }
  h.resize(static_cast<size_t>(kmax) + 1);
  return pair_series(l, m, h, trunc, nvars);
}

ConeSeries product_h(const ParamPoint& pt, const Truncation& trunc) {
  ConeSeries prod = ConeSeries::one(pt.n - 1, trunc);
  for (int i = 1; i <= pt.n; ++i)
    for (int j = i + 1; j <= pt.n; ++j) prod = prod * h_expand(i, j, pt, trunc);
  return prod;
}

}  // namespace qcommute
