#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "hurwitz/rational.hpp"

namespace hurwitz {

/// Dense univariate polynomial over Q, ascending coefficients, no trailing
/// zeros (the zero polynomial has no coefficients).
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs);
  QPoly(std::initializer_list<long> coeffs);
  static QPoly constant(const Rational& c);
  static QPoly monomial(const Rational& c, std::size_t degree);

  [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  [[nodiscard]] int degree() const noexcept {
    return static_cast<int>(coeffs_.size()) - 1;
  }
  [[nodiscard]] const std::vector<Rational>& coeffs() const noexcept {
    return coeffs_;
  }
  /// Coefficient of x^k, zero beyond the degree.
  [[nodiscard]] Rational coeff(std::size_t k) const;
  [[nodiscard]] const Rational& leading() const { return coeffs_.back(); }

  [[nodiscard]] Rational eval(const Rational& x) const;
  [[nodiscard]] QPoly derivative() const;
  [[nodiscard]] QPoly monic() const;
  [[nodiscard]] bool is_monic_integral() const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const Rational& c);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator-(const QPoly& a);
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(QPoly a, const Rational& c) { return a *= c; }
  friend bool operator==(const QPoly& a, const QPoly& b) = default;

  /// Euclidean division; throws DivisionByZero for a zero divisor.
  [[nodiscard]] std::pair<QPoly, QPoly> divmod(const QPoly& divisor) const;

  [[nodiscard]] std::string to_string(std::string_view var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Monic gcd (zero if both are zero).
QPoly gcd(QPoly a, QPoly b);

/// Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic.
struct XgcdResult {
  QPoly g, s, t;
};
XgcdResult xgcd(const QPoly& a, const QPoly& b);

/// p / gcd(p, p'), monic.
QPoly squarefree_part(const QPoly& p);

/// Sturm chain of p (p, p', -rem, ...).
std::vector<QPoly> sturm_chain(const QPoly& p);

/// Number of distinct real roots of p in the half-open interval (lo, hi].
int count_real_roots(const std::vector<QPoly>& chain, const Rational& lo,
                     const Rational& hi);

/// Number of distinct real roots of p on the whole line.
int count_real_roots(const std::vector<QPoly>& chain);

/// Cyclotomic polynomial Phi_m (m >= 1).
QPoly cyclotomic(unsigned m);

/// Euler's totient.
unsigned euler_phi(unsigned m);

}  // namespace hurwitz
