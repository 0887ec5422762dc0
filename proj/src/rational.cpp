#include "qcommute/rational.hpp"

#include <cctype>

namespace qcommute {

Rat rat_pow(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  if (base == 0) {
    if (e < 0) throw DivisionByZero("rat_pow: 0 raised to negative power");
    return Rat(0);
  }
  const unsigned long ae = static_cast<unsigned long>(e < 0 ? -e : e);
  Rat r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), ae);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), ae);
  if (e < 0) {
    mpz_swap(r.get_num_mpz_t(), r.get_den_mpz_t());
    r.canonicalize();
  }
  return r;
}

std::optional<Rat> exact_sqrt(const Rat& x) {
  if (x < 0) return std::nullopt;
  if (x == 0) return Rat(0);
  if (!mpz_perfect_square_p(x.get_num().get_mpz_t()) ||
      !mpz_perfect_square_p(x.get_den().get_mpz_t()))
    return std::nullopt;
  Rat r;
  mpz_sqrt(r.get_num_mpz_t(), x.get_num().get_mpz_t());
  mpz_sqrt(r.get_den_mpz_t(), x.get_den().get_mpz_t());
  return r;
}

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw ParseError("empty fraction string");
  for (char c : s) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
      throw ParseError("bad character in fraction string: '" + s + "'");
  }
  Rat r;
  if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
    throw ParseError("unparseable fraction string: '" + s + "'");
  if (r.get_den() == 0) throw ParseError("zero denominator in: '" + s + "'");
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rat& x) {
  Rat c(x);
  c.canonicalize();
  return c.get_str();
}

double rat_to_double(const Rat& x) { return mpq_get_d(x.get_mpq_t()); }

}  // namespace qcommute
