#include "hurwitz/roots.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>

#include "hurwitz/error.hpp"

namespace hurwitz {

namespace {

using Cld = std::complex<long double>;

ComplexQ operator-(const ComplexQ& a, const ComplexQ& b) {
  return {a.re - b.re, a.im - b.im};
}
ComplexQ operator*(const ComplexQ& a, const ComplexQ& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Rational norm2(const ComplexQ& a) { return a.re * a.re + a.im * a.im; }
ComplexQ operator/(const ComplexQ& a, const ComplexQ& b) {
  Rational n = norm2(b);
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

ComplexQ eval(const QPoly& p, const ComplexQ& z) {
  ComplexQ acc{0, 0};
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * z;
    acc.re += *it;
  }
  return acc;
}

ComplexQ round(const ComplexQ& z, unsigned bits) {
  return {round_dyadic(z.re, bits), round_dyadic(z.im, bits)};
}

// Weierstrass (Durand-Kerner) iteration in long double; only a starting point
// for the exact certification below.
std::vector<Cld> approximate_roots(const QPoly& p) {
  const auto n = static_cast<std::size_t>(p.degree());
  std::vector<long double> a(n + 1);
  const Rational lc = p.leading();
  for (std::size_t k = 0; k <= n; ++k) a[k] = Rational(p.coeff(k) / lc).get_d();
  long double bound = 1;
  for (std::size_t k = 0; k < n; ++k) bound = std::max(bound, 1 + std::fabs(a[k]));

  auto value = [&](Cld z) {
    Cld acc = 0;
    for (std::size_t k = n + 1; k-- > 0;) acc = acc * z + a[k];
    return acc;
  };

  std::vector<Cld> z(n);
  const Cld seed(0.4L, 0.9L);
  Cld w = 1;
  for (std::size_t k = 0; k < n; ++k) {
    w *= seed;
    z[k] = w * bound;
  }
  for (int iter = 0; iter < 2000; ++iter) {
    long double change = 0;
    for (std::size_t i = 0; i < n; ++i) {
      Cld denom = 1;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) denom *= z[i] - z[j];
      if (denom == Cld(0)) denom = Cld(1e-30L, 1e-30L);
      Cld step = value(z[i]) / denom;
      z[i] -= step;
      change = std::max(change, std::abs(step) / (1 + std::abs(z[i])));
    }
    if (change < 1e-19L) break;
  }
  return z;
}

struct Certificate {
  bool ok = false;
  std::vector<Rational> radii;
};

// Inclusion disks |z - z_i| <= n |p(z_i)| / |lc * prod_{j != i}(z_i - z_j)|:
// their union holds every root and a component of k disks holds k roots.
std::vector<Rational> inclusion_radii(const QPoly& p,
                                      const std::vector<ComplexQ>& z) {
  const std::size_t n = z.size();
  const Rational lc2 = p.leading() * p.leading();
  std::vector<Rational> radii(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational den = lc2;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) den *= norm2(z[i] - z[j]);
    Rational w2 = norm2(eval(p, z[i])) / den;
    radii[i] = sqrt_upper(w2 * Rational(n * n));
  }
  return radii;
}

bool disjoint(const ComplexQ& a, const Rational& ra, const ComplexQ& b,
              const Rational& rb) {
  Rational s = ra + rb;
  return s * s < norm2(a - b);
}

Certificate certify(const QPoly& p, const std::vector<ComplexQ>& z) {
  Certificate cert;
  cert.radii = inclusion_radii(p, z);
  const std::size_t n = z.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (z[i].im != 0 && abs(z[i].im) <= cert.radii[i]) return cert;
    for (std::size_t j = i + 1; j < n; ++j)
      if (!disjoint(z[i], cert.radii[i], z[j], cert.radii[j])) return cert;
  }
  cert.ok = true;
  return cert;
}

ComplexQ newton_step(const QPoly& p, const QPoly& dp, const ComplexQ& z,
                     unsigned bits) {
  ComplexQ d = eval(dp, z);
  if (d.re == 0 && d.im == 0) return z;
  return round(z - eval(p, z) / d, bits);
}

Box disk_box(const ComplexQ& c, const Rational& r) {
  return {{c.re - r, c.re + r}, {c.im - r, c.im + r}};
}

}  // namespace

Rational sqrt_upper(const Rational& q) {
  if (q <= 0) return 0;
  const long num_bits = static_cast<long>(mpz_sizeinbase(q.get_num_mpz_t(), 2));
  const long den_bits = static_cast<long>(mpz_sizeinbase(q.get_den_mpz_t(), 2));
  const unsigned long k =
      static_cast<unsigned long>(40 + std::max(0L, (den_bits - num_bits) / 2 + 1));
  Integer scaled = q.get_num();
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 2 * k);
  Integer n;
  mpz_cdiv_q(n.get_mpz_t(), scaled.get_mpz_t(), q.get_den_mpz_t());
  Integer s;
  mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
  s += 1;
  Integer den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), k);
  Rational r(s, den);
  r.canonicalize();
  return r;
}

RootIsolation RootIsolation::isolate(const QPoly& squarefree) {
  if (squarefree.is_zero())
    throw Error(ErrorCode::DivisionByZero, "root isolation of the zero polynomial");
  RootIsolation iso;
  iso.poly_ = squarefree;
  iso.derivative_ = squarefree.derivative();
  const int n = squarefree.degree();
  if (n == 0) return iso;
  if (gcd(squarefree, iso.derivative_).degree() > 0)
    throw Error(ErrorCode::NotIrreducible, "polynomial has repeated roots");

  if (n == 1) {
    Rational r = -squarefree.coeff(0) / squarefree.coeff(1);
    iso.roots_.push_back({true, Box::point(r), 0});
    return iso;
  }

  const auto real_count = count_real_roots(sturm_chain(squarefree));
  auto approx = approximate_roots(squarefree);
  std::sort(approx.begin(), approx.end(), [](const Cld& a, const Cld& b) {
    return std::fabs(a.imag()) < std::fabs(b.imag());
  });

  // Real roots first, then one representative of each conjugate pair.
  std::vector<ComplexQ> z;
  std::vector<long double> reals;
  for (int k = 0; k < real_count; ++k) reals.push_back(approx[k].real());
  std::sort(reals.begin(), reals.end());
  for (long double x : reals) z.push_back({from_double(static_cast<double>(x)), 0});
  std::vector<Cld> upper;
  for (std::size_t k = static_cast<std::size_t>(real_count); k < approx.size(); ++k)
    if (approx[k].imag() > 0) upper.push_back(approx[k]);
  if (upper.size() * 2 + static_cast<std::size_t>(real_count) != approx.size()) {
    // Unbalanced numeric output; rebuild pairs from the largest imaginary parts.
    upper.clear();
    for (std::size_t k = static_cast<std::size_t>(real_count); k < approx.size(); k += 2)
      upper.push_back({approx[k].real(), std::fabs(approx[k].imag())});
  }
  std::sort(upper.begin(), upper.end(), [](const Cld& a, const Cld& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  for (const auto& u : upper) {
    ComplexQ c{from_double(static_cast<double>(u.real())),
               from_double(static_cast<double>(u.imag()))};
    if (c.im == 0) c.im = Rational(1, 1 << 30);
    z.push_back(c);
    z.push_back({c.re, -c.im});
  }

  unsigned bits = 64;
  Certificate cert = certify(squarefree, z);
  for (int attempt = 0; !cert.ok && attempt < 60; ++attempt) {
    for (std::size_t i = 0; i < z.size(); ++i) {
      if (z[i].im == 0) {
        z[i] = newton_step(squarefree, iso.derivative_, z[i], bits);
        z[i].im = 0;
      } else if (z[i].im > 0) {
        z[i] = newton_step(squarefree, iso.derivative_, z[i], bits);
        if (z[i].im <= 0) z[i].im = Rational(1, 1 << 30);
        z[i + 1] = {z[i].re, -z[i].im};
      }
    }
    bits = std::min(bits * 2, 4096U);
    cert = certify(squarefree, z);
  }
  if (!cert.ok)
    throw Error(ErrorCode::InternalMismatch,
                "root isolation failed to certify " + squarefree.to_string());

  for (std::size_t i = 0; i < z.size(); ++i) {
    Root root;
    root.conjugate = i;
    if (z[i].im == 0) {
      root.is_real = true;
      Rational lo = z[i].re - cert.radii[i], hi = z[i].re + cert.radii[i];
      if (squarefree.eval(lo) == 0) hi = lo;
      else if (squarefree.eval(hi) == 0) lo = hi;
      root.region = {{lo, hi}, Interval::point(0)};
    } else {
      root.conjugate = z[i].im > 0 ? i + 1 : i - 1;
      root.region = disk_box(z[i], cert.radii[i]);
    }
    iso.roots_.push_back(std::move(root));
  }
  return iso;
}

std::size_t RootIsolation::real_count() const {
  return static_cast<std::size_t>(std::count_if(
      roots_.begin(), roots_.end(), [](const Root& r) { return r.is_real; }));
}

std::vector<ComplexQ> RootIsolation::centers() const {
  std::vector<ComplexQ> z;
  z.reserve(roots_.size());
  for (const auto& r : roots_) z.push_back({r.region.re.mid(), r.region.im.mid()});
  return z;
}

void RootIsolation::refine_real(std::size_t i, const Rational& width) {
  Interval& iv = roots_[i].region.re;
  if (iv.width() <= width) return;
  int lo_sign = sgn(poly_.eval(iv.lo));
  while (iv.width() > width) {
    Rational m = iv.mid();
    int s = sgn(poly_.eval(m));
    if (s == 0) {
      iv = Interval::point(m);
      return;
    }
    if (s == lo_sign) iv.lo = m;
    else iv.hi = m;
  }
}

void RootIsolation::refine_complex(std::size_t i, const Rational& width) {
  if (roots_[i].region.width() <= width) return;
  std::vector<ComplexQ> z = centers();
  const Box old = roots_[i].region;
  // Bits enough to resolve the target width comfortably.
  unsigned bits = 64;
  {
    Rational w = width;
    while (w < 1 && bits < 8192) {
      w *= 2;
      ++bits;
    }
    bits += 32;
  }
  for (int attempt = 0; attempt < 80; ++attempt) {
    z[i] = newton_step(poly_, derivative_, z[i], bits);
    std::vector<Rational> radii = inclusion_radii(poly_, z);
    Box box = disk_box(z[i], radii[i]);
    bool isolated = abs(z[i].im) > radii[i] && box.within(old);
    for (std::size_t j = 0; isolated && j < z.size(); ++j)
      if (j != i && !disjoint(z[i], radii[i], z[j], radii[j])) isolated = false;
    if (isolated && box.width() <= width) {
      roots_[i].region = box;
      return;
    }
    if (attempt % 4 == 3) bits += 32;
  }
  throw Error(ErrorCode::InternalMismatch, "complex root refinement stalled");
}

RootIsolation RootIsolation::refined(std::size_t i, const Rational& width) const {
  RootIsolation copy = *this;
  if (copy.roots_.at(i).is_real) copy.refine_real(i, width);
  else copy.refine_complex(i, width);
  return copy;
}

RootIsolation RootIsolation::refined_all(const Rational& width) const {
  RootIsolation copy = *this;
  for (std::size_t i = 0; i < copy.roots_.size(); ++i) {
    if (copy.roots_[i].is_real) copy.refine_real(i, width);
    else copy.refine_complex(i, width);
  }
  return copy;
}

RootIsolation RootIsolation::restricted(std::size_t i, const Interval& bound) const {
  RootIsolation copy = *this;
  Interval& iv = copy.roots_.at(i).region.re;
  iv.lo = std::max(iv.lo, bound.lo);
  iv.hi = std::min(iv.hi, bound.hi);
  return copy;
}

}  // namespace hurwitz
