#pragma once

#include <algorithm>
#include <string>

#include "hurwitz/rational.hpp"

namespace hurwitz {

/// Closed rational interval [lo, hi].
struct Interval {
  Rational lo, hi;

  static Interval point(const Rational& q) { return {q, q}; }

  [[nodiscard]] Rational width() const { return hi - lo; }
  [[nodiscard]] Rational mid() const { return (lo + hi) / 2; }
  [[nodiscard]] bool contains(const Rational& q) const { return lo <= q && q <= hi; }
  [[nodiscard]] bool contains_zero() const { return lo <= 0 && 0 <= hi; }
  [[nodiscard]] bool intersects(const Interval& o) const {
    return lo <= o.hi && o.lo <= hi;
  }
  /// Subset test.
  [[nodiscard]] bool within(const Interval& o) const {
    return o.lo <= lo && hi <= o.hi;
  }
  /// Certifiably positive / negative.
  [[nodiscard]] bool positive() const { return lo > 0; }
  [[nodiscard]] bool negative() const { return hi < 0; }

  friend Interval operator+(const Interval& a, const Interval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
  }
  friend Interval operator-(const Interval& a, const Interval& b) {
    return {a.lo - b.hi, a.hi - b.lo};
  }
  friend Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Rational& c) {
    return c >= 0 ? Interval{a.lo * c, a.hi * c} : Interval{a.hi * c, a.lo * c};
  }
  friend Interval operator+(const Interval& a, const Rational& c) {
    return {a.lo + c, a.hi + c};
  }
  friend bool operator==(const Interval& a, const Interval& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
  /// Tight enclosure of {x^2 : x in a}.
  [[nodiscard]] Interval square() const;
};

/// Axis-aligned rectangle in C: re x im.
struct Box {
  Interval re, im;

  static Box point(const Rational& re, const Rational& im = 0) {
    return {Interval::point(re), Interval::point(im)};
  }

  [[nodiscard]] Rational width() const {
    return std::max(re.width(), im.width());
  }
  [[nodiscard]] bool contains_zero() const {
    return re.contains_zero() && im.contains_zero();
  }
  [[nodiscard]] bool intersects(const Box& o) const {
    return re.intersects(o.re) && im.intersects(o.im);
  }
  [[nodiscard]] bool within(const Box& o) const {
    return re.within(o.re) && im.within(o.im);
  }
  /// Enclosure of |z|^2 over the box.
  [[nodiscard]] Interval abs2() const { return re.square() + im.square(); }

  /// True when no point of the box lies on the real segment [-h, h].
  [[nodiscard]] bool excludes_segment(const Rational& half_length) const;

  friend Box operator+(const Box& a, const Box& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend Box operator-(const Box& a, const Box& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend Box operator*(const Box& a, const Box& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Box operator*(const Box& a, const Rational& c) {
    return {a.re * c, a.im * c};
  }
  friend Box operator+(const Box& a, const Rational& c) {
    return {a.re + c, a.im};
  }
};

std::string to_string(const Interval& i);
std::string to_string(const Box& b);

}  // namespace hurwitz
