#include "hurwitz/rational.hpp"

#include <cctype>
#include <cmath>

namespace hurwitz {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

bool parse_rational(std::string_view text, Rational& out) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view{"1"}
                                                   : text.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) return false;
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) return false;
  out = Rational(negative ? Integer(-n) : n, d);
  out.canonicalize();
  return true;
}

Rational round_dyadic(const Rational& x, unsigned bits) {
  Integer scale = 1;
  mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), bits);
  Integer scaled = x.get_num() * scale;
  Integer floor_num;
  mpz_fdiv_q(floor_num.get_mpz_t(), scaled.get_mpz_t(),
             x.get_den().get_mpz_t());
  Rational r(floor_num, scale);
  r.canonicalize();
  return r;
}

Rational from_double(double x) {
  Rational r(x);
  r.canonicalize();
  return r;
}

}  // namespace hurwitz
