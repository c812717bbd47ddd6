// Shared fixtures for the test binaries.
#pragma once

#include <random>
#include <vector>

#include "hurwitz/reflection.hpp"

namespace fixtures {

using namespace hurwitz;

inline NumberField sqrt2_field() {
  return NumberField::create(QPoly{-2, 0, 1}, {1, Rational(3, 2)}, "x");
}

inline NumberField quartic_field() {
  return NumberField::create(QPoly{-2, 0, 1, 2, 1}, {Rational(79, 100), Rational(4, 5)},
                             "x");
}

inline CartanMatrix a2() {
  return CartanMatrix(Matrix::from_rationals(NumberField::rationals(), {{2, -1}, {-1, 2}}));
}

inline CartanMatrix a3() {
  return CartanMatrix(Matrix::from_rationals(NumberField::rationals(),
                                             {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}));
}

// a = b = -sqrt 2, so ab = 2.
inline CartanMatrix b2() {
  auto k = sqrt2_field();
  auto s = FieldElement::generator(k);
  return CartanMatrix(Matrix(k, 2, 2, {FieldElement(k, 2), -s, -s, FieldElement(k, 2)}));
}

inline CartanMatrix affine_a1() {
  return CartanMatrix(Matrix::from_rationals(NumberField::rationals(), {{2, -2}, {-2, 2}}));
}

inline CartanMatrix counterexample() {
  auto k = quartic_field();
  auto l = FieldElement::generator(k);
  auto two = FieldElement(k, 2), m1 = FieldElement(k, -1);
  return CartanMatrix(Matrix(k, 3, 3, {two, m1, m1, m1, two, -l, m1, -l, two}));
}

/// Symmetric, diagonal 2, off-diagonal drawn from {0, +-1, +-2, +-1/2}.
inline CartanMatrix random_cartan(std::mt19937& rng, std::size_t n) {
  static const Rational choices[] = {0, 1, -1, 2, -2, Rational(1, 2), Rational(-1, 2)};
  std::uniform_int_distribution<int> pick(0, 6);
  auto q = NumberField::rationals();
  Matrix m = Matrix::identity(q, n) * FieldElement(q, 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      FieldElement e(q, choices[pick(rng)]);
      m(i, j) = e;
      m(j, i) = e;
    }
  return CartanMatrix(std::move(m));
}

/// Singular Cartan matrices: the affine A1 and A2 forms, a direct sum with
/// an affine block, then random singular ones.
inline std::vector<CartanMatrix> singular_cartans(std::size_t count, unsigned seed = 5) {
  auto q = NumberField::rationals();
  std::vector<CartanMatrix> out;
  out.push_back(affine_a1());
  out.push_back(CartanMatrix(
      Matrix::from_rationals(q, {{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}})));
  out.push_back(CartanMatrix(Matrix::from_rationals(
      q, {{2, 0, 0}, {0, 2, -2}, {0, -2, 2}})));
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> size(2, 5);
  while (out.size() < count) {
    CartanMatrix c = random_cartan(rng, size(rng));
    if (det(c.matrix()).is_zero()) out.push_back(c);
  }
  return out;
}

}  // namespace fixtures
