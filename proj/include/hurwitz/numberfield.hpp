#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "hurwitz/interval.hpp"
#include "hurwitz/qpoly.hpp"
#include "hurwitz/rational.hpp"
#include "hurwitz/roots.hpp"

namespace hurwitz {

/// One complex embedding of K = Q[x]/(f): the generator goes to the unique
/// root of f inside `region`. Index 0 is always the distinguished real root.
struct Embedding {
  std::size_t index = 0;
  Box region;
  bool is_real = false;
};

namespace detail {
struct FieldData;
}

/// A real algebraic number field Q[x]/(f) with a distinguished real root.
/// Cheap to copy (shared immutable data).
class NumberField {
 public:
  /// Validates f (monic, integral, irreducible) and that `root` holds exactly
  /// one real root of f with a sign change. For degree 1 the interval is not
  /// consulted. `symbol` is the generator name used when printing.
  static NumberField create(const QPoly& minpoly, const Interval& root,
                            std::string symbol = "x");
  /// Q, as the degree-1 field x - 0.
  static NumberField rationals();

  [[nodiscard]] std::size_t degree() const noexcept;
  [[nodiscard]] const QPoly& minpoly() const noexcept;
  [[nodiscard]] const Interval& root_interval() const noexcept;
  [[nodiscard]] const std::string& symbol() const noexcept;
  [[nodiscard]] bool is_rational() const noexcept { return degree() == 1; }

  /// All d embeddings, conjugate-closed, pairwise disjoint regions.
  [[nodiscard]] const std::vector<Embedding>& embeddings() const noexcept;
  /// Same embedding with region width at most `width`.
  [[nodiscard]] Embedding refine(const Embedding& e, const Rational& width) const;

  /// x^k reduced mod f, for d <= k <= 2d - 2 (row k - d).
  [[nodiscard]] const std::vector<std::vector<Rational>>& reduction_table() const noexcept;

  [[nodiscard]] bool same_as(const NumberField& o) const noexcept;
  friend bool operator==(const NumberField& a, const NumberField& b) noexcept {
    return a.same_as(b);
  }

 private:
  explicit NumberField(std::shared_ptr<const detail::FieldData> d) : d_(std::move(d)) {}
  std::shared_ptr<const detail::FieldData> d_;
};

/// Exact element of a number field in the power basis 1, t, ..., t^(d-1).
class FieldElement {
 public:
  FieldElement(NumberField field, std::vector<Rational> coeffs);
  FieldElement(NumberField field, const Rational& q);
  static FieldElement zero(const NumberField& f) { return {f, Rational(0)}; }
  static FieldElement one(const NumberField& f) { return {f, Rational(1)}; }
  static FieldElement generator(const NumberField& f);

  [[nodiscard]] const NumberField& field() const noexcept { return field_; }
  [[nodiscard]] const std::vector<Rational>& coeffs() const noexcept { return c_; }
  [[nodiscard]] bool is_zero() const noexcept;
  [[nodiscard]] bool is_one() const noexcept;
  /// True when the element lies in Q (only the constant coordinate is set).
  [[nodiscard]] bool is_rational() const noexcept;
  [[nodiscard]] const Rational& constant() const noexcept { return c_.front(); }

  /// Throws DivisionByZero for zero.
  [[nodiscard]] FieldElement inverse() const;
  [[nodiscard]] FieldElement pow(unsigned long e) const;

  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o) { return *this *= o.inverse(); }
  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  friend FieldElement operator-(FieldElement a);

  /// Exact equality of canonical coordinates (fields must match).
  friend bool operator==(const FieldElement& a, const FieldElement& b);

  /// Canonical serialization: reduced coordinates joined by ','.
  [[nodiscard]] std::string key() const;
  /// Human-readable expression in the field's generator symbol.
  [[nodiscard]] std::string to_string() const;
  [[nodiscard]] std::size_t hash() const noexcept;

  /// Trace of the element over Q.
  [[nodiscard]] Rational trace() const;

 private:
  NumberField field_;
  std::vector<Rational> c_;
};

/// Throws FieldMismatch unless both live in the same field.
void require_same_field(const NumberField& a, const NumberField& b);

/// Sign under the distinguished real embedding.
int sign(const FieldElement& a);
/// Sign under a real embedding; throws FieldMismatch for a complex one.
int sign_at(const FieldElement& a, const Embedding& e);

/// Rectangle of width <= precision containing the image of `a` under `e`.
Box evaluate(const FieldElement& a, const Embedding& e, const Rational& precision);

/// Image enclosure of `a` over the region of `e` without refinement.
Box evaluate_on(const FieldElement& a, const Box& region);

std::size_t hash_rational(const Rational& q) noexcept;

}  // namespace hurwitz
