#pragma once

#include <cstddef>
#include <vector>

#include "hurwitz/interval.hpp"
#include "hurwitz/qpoly.hpp"

namespace hurwitz {

/// Exact complex rational number, used for root approximations.
struct ComplexQ {
  Rational re, im;
};

/// Certified isolation of every complex root of a squarefree rational
/// polynomial. Each root owns a region containing exactly that root; regions
/// are pairwise disjoint. Real roots carry a real interval (imaginary part
/// [0, 0]) with a sign change of the polynomial across it; non-real roots
/// carry a square enclosing a disk that avoids the real axis.
///
/// Roots are ordered: real roots ascending, then conjugate pairs (positive
/// imaginary part first), pairs ordered by real part.
class RootIsolation {
 public:
  struct Root {
    bool is_real = false;
    Box region;
    /// Index of the complex conjugate (equal to own index for real roots).
    std::size_t conjugate = 0;
  };

  /// Throws DivisionByZero for the zero polynomial and NotIrreducible if the
  /// input has repeated roots.
  static RootIsolation isolate(const QPoly& squarefree);

  [[nodiscard]] const QPoly& poly() const noexcept { return poly_; }
  [[nodiscard]] std::size_t size() const noexcept { return roots_.size(); }
  [[nodiscard]] const Root& root(std::size_t i) const { return roots_.at(i); }
  [[nodiscard]] const std::vector<Root>& roots() const noexcept { return roots_; }
  [[nodiscard]] std::size_t real_count() const;

  /// Copy in which root i has region width at most `width`; every other
  /// region is unchanged.
  [[nodiscard]] RootIsolation refined(std::size_t i, const Rational& width) const;

  /// Copy in which every region has width at most `width`.
  [[nodiscard]] RootIsolation refined_all(const Rational& width) const;

  /// Copy in which real root i's interval is intersected with `bound`. The
  /// caller guarantees the root lies inside `bound` with a sign change.
  [[nodiscard]] RootIsolation restricted(std::size_t i, const Interval& bound) const;

 private:
  RootIsolation() = default;
  void refine_real(std::size_t i, const Rational& width);
  void refine_complex(std::size_t i, const Rational& width);
  [[nodiscard]] std::vector<ComplexQ> centers() const;

  QPoly poly_;
  QPoly derivative_;
  std::vector<Root> roots_;
};

/// Rational upper bound R >= sqrt(q) for q >= 0, within a
/// relative error of about 2^-40.
Rational sqrt_upper(const Rational& q);

}  // namespace hurwitz
