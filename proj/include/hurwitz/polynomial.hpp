#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hurwitz/numberfield.hpp"

namespace hurwitz {

/// Univariate polynomial over a number field, ascending coefficients with
/// trailing zeros trimmed.
class Polynomial {
 public:
  explicit Polynomial(NumberField field) : field_(std::move(field)) {}
  Polynomial(NumberField field, std::vector<FieldElement> coeffs);

  static Polynomial constant(const FieldElement& c);
  /// The indeterminate.
  static Polynomial variable(const NumberField& field);

  [[nodiscard]] const NumberField& field() const noexcept { return field_; }
  [[nodiscard]] bool is_zero() const noexcept { return c_.empty(); }
  [[nodiscard]] int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  [[nodiscard]] const std::vector<FieldElement>& coeffs() const noexcept { return c_; }
  [[nodiscard]] FieldElement coeff(std::size_t k) const;
  [[nodiscard]] const FieldElement& leading() const { return c_.back(); }
  [[nodiscard]] bool is_monic() const { return !is_zero() && leading().is_one(); }
  [[nodiscard]] Polynomial monic() const;
  [[nodiscard]] Polynomial derivative() const;

  [[nodiscard]] FieldElement eval(const FieldElement& x) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const FieldElement& c);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Euclidean division; throws DivisionByZero for a zero divisor.
  [[nodiscard]] std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;

  /// Rendering in `var`, e.g. "x^2 + x + 1"; coefficients outside Q are
  /// parenthesized.
  [[nodiscard]] std::string to_string(std::string_view var) const;

 private:
  void trim();
  NumberField field_;
  std::vector<FieldElement> c_;
};

/// Monic gcd; zero when both inputs are zero.
Polynomial gcd(Polynomial a, Polynomial b);

}  // namespace hurwitz
