#include "hurwitz/interval.hpp"

namespace hurwitz {

Interval operator*(const Interval& a, const Interval& b) {
  Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  Interval r{p1, p1};
  for (const Rational* p : {&p2, &p3, &p4}) {
    if (*p < r.lo) r.lo = *p;
    if (*p > r.hi) r.hi = *p;
  }
  return r;
}

Interval Interval::square() const {
  Rational a = lo * lo, b = hi * hi;
  if (contains_zero()) return {0, std::max(a, b)};
  return a < b ? Interval{a, b} : Interval{b, a};
}

bool Box::excludes_segment(const Rational& half_length) const {
  if (!im.contains_zero()) return true;
  return re.lo > half_length || re.hi < -half_length;
}

std::string to_string(const Interval& i) {
  return "[" + i.lo.get_str() + ", " + i.hi.get_str() + "]";
}

std::string to_string(const Box& b) {
  return to_string(b.re) + " x " + to_string(b.im) + "i";
}

}  // namespace hurwitz
