#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "hurwitz/numberfield.hpp"
#include "hurwitz/polynomial.hpp"

namespace hurwitz {

/// Dense row-major matrix over a number field.
class Matrix {
 public:
  Matrix(NumberField field, std::size_t rows, std::size_t cols);
  Matrix(NumberField field, std::size_t rows, std::size_t cols,
         std::vector<FieldElement> entries);

  static Matrix identity(const NumberField& field, std::size_t n);
  static Matrix from_rationals(const NumberField& field,
                               std::initializer_list<std::initializer_list<Rational>> rows);

  [[nodiscard]] const NumberField& field() const noexcept { return field_; }
  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }

  [[nodiscard]] const FieldElement& operator()(std::size_t i, std::size_t j) const {
    return e_[i * cols_ + j];
  }
  FieldElement& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  [[nodiscard]] const std::vector<FieldElement>& entries() const noexcept { return e_; }

  [[nodiscard]] Matrix transpose() const;
  [[nodiscard]] Matrix column(std::size_t j) const;
  /// Upper-left k x k block.
  [[nodiscard]] Matrix leading_block(std::size_t k) const;
  /// Principal submatrix on the given indices.
  [[nodiscard]] Matrix principal(const std::vector<std::size_t>& idx) const;
  [[nodiscard]] bool is_symmetric() const;
  [[nodiscard]] bool is_identity() const;
  [[nodiscard]] bool is_zero() const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const FieldElement& c);
  friend bool operator==(const Matrix& a, const Matrix& b);

  /// Canonical serialization "RxC:" followed by entry keys joined by ';'.
  [[nodiscard]] std::string key() const;
  [[nodiscard]] std::size_t hash() const noexcept;

 private:
  std::size_t rows_, cols_;
  NumberField field_;
  std::vector<FieldElement> e_;
};

struct MatrixHash {
  std::size_t operator()(const Matrix& m) const noexcept { return m.hash(); }
};

/// Throws DimensionMismatch on non-conforming shapes.
Matrix mat_mul(const Matrix& a, const Matrix& b);
/// Throws NotSquare or Singular.
Matrix mat_inv(const Matrix& a);
/// Throws NotSquare.
FieldElement det(const Matrix& a);
/// det(xI - a), monic of degree n (trace recursion; exact in characteristic 0).
Polynomial charpoly(const Matrix& a);
/// Basis of the right null space as column vectors; empty iff injective.
std::vector<Matrix> kernel(const Matrix& a);
std::size_t rank(const Matrix& a);
/// det of the upper-left k x k blocks, k = 1..n.
std::vector<FieldElement> leading_principal_minors(const Matrix& a);
/// Sylvester's criterion; throws NotSymmetric.
bool is_positive_definite(const Matrix& a);
/// p(a) by Horner's rule.
Matrix evaluate(const Polynomial& p, const Matrix& a);
Matrix power(const Matrix& a, unsigned long e);

/// Square matrix with polynomial entries.
using PolyMatrix = std::vector<std::vector<Polynomial>>;
/// Exact determinant over K[x] by fraction-free elimination.
Polynomial det(PolyMatrix m);

}  // namespace hurwitz
