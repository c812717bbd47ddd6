#include "hurwitz/numberfield.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "hurwitz/error.hpp"

namespace hurwitz {

namespace detail {

struct FieldData {
  QPoly minpoly;
  Interval root;
  std::string symbol;
  std::size_t degree = 1;
  RootIsolation roots = RootIsolation::isolate(QPoly{0, 1});
  /// embeddings[i] refers to roots.root(root_of[i]).
  std::vector<std::size_t> root_of;
  std::vector<Embedding> embeddings;
  std::vector<std::vector<Rational>> reduction;
};

}  // namespace detail

namespace {

std::vector<std::vector<Rational>> make_reduction_table(const QPoly& f) {
  const auto d = static_cast<std::size_t>(f.degree());
  std::vector<std::vector<Rational>> table;
  if (d < 2) return table;
  std::vector<Rational> row(d);
  for (std::size_t j = 0; j < d; ++j) row[j] = -f.coeff(j);
  table.push_back(row);
  for (std::size_t k = d + 1; k <= 2 * d - 2; ++k) {
    // x * row, then fold the x^d term back in.
    std::vector<Rational> next(d);
    for (std::size_t j = 1; j < d; ++j) next[j] = row[j - 1];
    const Rational top = row[d - 1];
    if (top != 0)
      for (std::size_t j = 0; j < d; ++j) next[j] += top * table[0][j];
    table.push_back(next);
    row = std::move(next);
  }
  return table;
}

// Box enclosures of the coefficients of prod (x - z) over the chosen roots.
std::vector<Box> subset_product(const RootIsolation& iso,
                                const std::vector<std::size_t>& subset) {
  std::vector<Box> c{Box::point(1)};
  for (std::size_t idx : subset) {
    const Box& z = iso.root(idx).region;
    std::vector<Box> next(c.size() + 1, Box::point(0));
    for (std::size_t j = 0; j < c.size(); ++j) {
      next[j + 1] = next[j + 1] + c[j];
      next[j] = next[j] - z * c[j];
    }
    c = std::move(next);
  }
  return c;
}

enum class Candidate { Rejected, NeedsRefinement, Found };

Candidate integral_candidate(const std::vector<Box>& c, QPoly& out) {
  std::vector<Rational> coeffs(c.size());
  Candidate result = Candidate::Found;
  for (std::size_t j = 0; j + 1 < c.size(); ++j) {
    if (!c[j].im.contains_zero()) return Candidate::Rejected;
    Integer lo, hi;
    mpz_cdiv_q(lo.get_mpz_t(), c[j].re.lo.get_num_mpz_t(), c[j].re.lo.get_den_mpz_t());
    mpz_fdiv_q(hi.get_mpz_t(), c[j].re.hi.get_num_mpz_t(), c[j].re.hi.get_den_mpz_t());
    if (lo > hi) return Candidate::Rejected;
    if (lo < hi) result = Candidate::NeedsRefinement;
    coeffs[j] = lo;
  }
  coeffs.back() = 1;
  out = QPoly(std::move(coeffs));
  return result;
}

bool conjugate_closed(const RootIsolation& iso, const std::vector<std::size_t>& subset) {
  for (std::size_t i : subset) {
    const std::size_t c = iso.root(i).conjugate;
    if (std::find(subset.begin(), subset.end(), c) == subset.end()) return false;
  }
  return true;
}

// A monic rational factor of f of degree k is the product of (x - z) over k
// of its roots; with certified root regions each subset either yields a
// single integral candidate (checked by exact division) or is rejected.
bool has_proper_factor(const QPoly& f, RootIsolation iso) {
  const auto d = static_cast<std::size_t>(f.degree());
  std::vector<std::vector<std::size_t>> subsets;
  for (std::size_t k = 1; k <= d / 2; ++k) {
    std::vector<bool> mask(d, false);
    std::fill(mask.end() - static_cast<long>(k), mask.end(), true);
    do {
      std::vector<std::size_t> s;
      for (std::size_t i = 0; i < d; ++i)
        if (mask[i]) s.push_back(i);
      if (conjugate_closed(iso, s)) subsets.push_back(std::move(s));
    } while (std::next_permutation(mask.begin(), mask.end()));
  }
  Rational width = 1;
  for (const auto& r : iso.roots()) width = std::max(width, r.region.width());
  for (const auto& s : subsets) {
    for (int round = 0;; ++round) {
      QPoly candidate;
      const Candidate verdict = integral_candidate(subset_product(iso, s), candidate);
      if (verdict == Candidate::Rejected) break;
      if (verdict == Candidate::Found) {
        if (f.divmod(candidate).second.is_zero()) return true;
        break;
      }
      if (round > 400)
        throw Error(ErrorCode::InternalMismatch, "irreducibility test did not settle");
      width /= 4;
      iso = iso.refined_all(width);
    }
  }
  return false;
}

Interval evaluate_interval(const std::vector<Rational>& c, const Interval& x) {
  Interval acc = Interval::point(0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace

NumberField NumberField::create(const QPoly& minpoly, const Interval& root,
                                std::string symbol) {
  if (minpoly.degree() < 1)
    throw Error(ErrorCode::NonMonic, "minimal polynomial must have degree >= 1");
  if (!minpoly.is_monic_integral())
    throw Error(ErrorCode::NonMonic,
                "minimal polynomial must be monic with integer coefficients: " +
                    minpoly.to_string(symbol));
  auto data = std::make_shared<detail::FieldData>();
  data->minpoly = minpoly;
  data->root = root;
  data->symbol = std::move(symbol);
  data->degree = static_cast<std::size_t>(minpoly.degree());
  data->reduction = make_reduction_table(minpoly);

  if (data->degree == 1) {
    const Rational r = -minpoly.coeff(0);
    data->roots = RootIsolation::isolate(minpoly);
    data->root_of = {0};
    data->embeddings = {Embedding{0, Box::point(r), true}};
    return NumberField(std::move(data));
  }

  if (gcd(minpoly, minpoly.derivative()).degree() > 0)
    throw Error(ErrorCode::NotIrreducible,
                minpoly.to_string(data->symbol) + " has a repeated factor");
  RootIsolation iso = RootIsolation::isolate(minpoly);
  if (has_proper_factor(minpoly, iso))
    throw Error(ErrorCode::NotIrreducible,
                minpoly.to_string(data->symbol) + " is reducible over Q");

  if (!(root.lo < root.hi))
    throw Error(ErrorCode::NoRootInInterval, "empty root interval " + to_string(root));
  const int inside = count_real_roots(sturm_chain(minpoly), root.lo, root.hi);
  if (inside == 0)
    throw Error(ErrorCode::NoRootInInterval, "no real root in " + to_string(root));
  if (inside > 1)
    throw Error(ErrorCode::MultipleRootsInInterval,
                std::to_string(inside) + " real roots in " + to_string(root));

  // Shrink the real regions until exactly one of them meets the interval.
  std::size_t distinguished = iso.size();
  for (int round = 0; distinguished == iso.size(); ++round) {
    std::vector<std::size_t> hits;
    Rational widest = 0;
    for (std::size_t i = 0; i < iso.size(); ++i) {
      if (!iso.root(i).is_real) continue;
      widest = std::max(widest, iso.root(i).region.re.width());
      if (iso.root(i).region.re.intersects(root)) hits.push_back(i);
    }
    if (hits.size() == 1) {
      distinguished = hits.front();
      break;
    }
    if (round > 400)
      throw Error(ErrorCode::InternalMismatch, "could not match the distinguished root");
    for (std::size_t i = 0; i < iso.size(); ++i)
      if (iso.root(i).is_real) iso = iso.refined(i, widest / 4);
  }
  iso = iso.restricted(distinguished, root);

  data->root_of.push_back(distinguished);
  for (std::size_t i = 0; i < iso.size(); ++i)
    if (iso.root(i).is_real && i != distinguished) data->root_of.push_back(i);
  for (std::size_t i = 0; i < iso.size(); ++i)
    if (!iso.root(i).is_real) data->root_of.push_back(i);
  for (std::size_t e = 0; e < data->root_of.size(); ++e) {
    const auto& r = iso.root(data->root_of[e]);
    data->embeddings.push_back(Embedding{e, r.region, r.is_real});
  }
  data->roots = std::move(iso);
  return NumberField(std::move(data));
}

NumberField NumberField::rationals() {
  static const NumberField q = create(QPoly{0, 1}, Interval::point(0), "x");
  return q;
}

std::size_t NumberField::degree() const noexcept { return d_->degree; }
const QPoly& NumberField::minpoly() const noexcept { return d_->minpoly; }
const Interval& NumberField::root_interval() const noexcept { return d_->root; }
const std::string& NumberField::symbol() const noexcept { return d_->symbol; }
const std::vector<Embedding>& NumberField::embeddings() const noexcept {
  return d_->embeddings;
}
const std::vector<std::vector<Rational>>& NumberField::reduction_table() const noexcept {
  return d_->reduction;
}

Embedding NumberField::refine(const Embedding& e, const Rational& width) const {
  if (e.region.width() <= width) return e;
  const std::size_t r = d_->root_of.at(e.index);
  Embedding out = e;
  out.region = d_->roots.refined(r, width).root(r).region;
  return out;
}

bool NumberField::same_as(const NumberField& o) const noexcept {
  if (d_ == o.d_) return true;
  if (!(d_->minpoly == o.d_->minpoly)) return false;
  return d_->degree == 1 || (d_->root.lo == o.d_->root.lo && d_->root.hi == o.d_->root.hi);
}

void require_same_field(const NumberField& a, const NumberField& b) {
  if (!a.same_as(b))
    throw Error(ErrorCode::FieldMismatch, "elements of different number fields");
}

FieldElement::FieldElement(NumberField field, std::vector<Rational> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
  for (auto& c : c_) c.canonicalize();
  const std::size_t d = field_.degree();
  if (c_.size() > d) {
    // Reduce an arbitrary polynomial in the generator.
    QPoly r = QPoly(std::move(c_)).divmod(field_.minpoly()).second;
    c_ = r.coeffs();
  }
  c_.resize(d);
}

FieldElement::FieldElement(NumberField field, const Rational& q)
    : field_(std::move(field)), c_(field_.degree()) {
  c_[0] = q;
  c_[0].canonicalize();
}

FieldElement FieldElement::generator(const NumberField& f) {
  if (f.degree() == 1) return {f, -f.minpoly().coeff(0)};
  std::vector<Rational> c(f.degree());
  c[1] = 1;
  return {f, std::move(c)};
}

bool FieldElement::is_zero() const noexcept {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

bool FieldElement::is_rational() const noexcept {
  for (std::size_t k = 1; k < c_.size(); ++k)
    if (c_[k] != 0) return false;
  return true;
}

bool FieldElement::is_one() const noexcept { return is_rational() && c_[0] == 1; }

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  require_same_field(field_, o.field_);
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (o.c_[k] != 0) c_[k] += o.c_[k];
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  require_same_field(field_, o.field_);
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (o.c_[k] != 0) c_[k] -= o.c_[k];
  return *this;
}

FieldElement operator-(FieldElement a) {
  for (auto& c : a.c_) c = -c;
  return a;
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.field_, b.field_);
  if (b.is_rational()) {
    FieldElement r = a;
    const Rational& s = b.c_[0];
    if (s == 0) {
      for (auto& c : r.c_) c = 0;
    } else if (s != 1) {
      for (auto& c : r.c_)
        if (c != 0) c *= s;
    }
    return r;
  }
  if (a.is_rational()) return b * a;
  const std::size_t d = a.c_.size();
  std::vector<Rational> prod(2 * d - 1);
  for (std::size_t i = 0; i < d; ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j)
      if (b.c_[j] != 0) prod[i + j] += a.c_[i] * b.c_[j];
  }
  const auto& table = a.field_.reduction_table();
  for (std::size_t k = 2 * d - 1; k-- > d;) {
    if (prod[k] == 0) continue;
    const auto& row = table[k - d];
    for (std::size_t j = 0; j < d; ++j)
      if (row[j] != 0) prod[j] += prod[k] * row[j];
  }
  prod.resize(d);
  FieldElement r(a.field_, Rational(0));
  r.c_ = std::move(prod);
  return r;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  *this = *this * o;
  return *this;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (is_rational()) return {field_, 1 / c_[0]};
  auto [g, s, t] = xgcd(QPoly(c_), field_.minpoly());
  if (g.degree() != 0)
    throw Error(ErrorCode::InternalMismatch, "non-invertible residue in a field");
  return {field_, s.coeffs()};
}

FieldElement FieldElement::pow(unsigned long e) const {
  FieldElement result = one(field_);
  FieldElement base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.field_, b.field_);
  return a.c_ == b.c_;
}

std::string FieldElement::key() const {
  std::string out;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (k) out += ',';
    out += c_[k].get_str();
  }
  return out;
}

std::string FieldElement::to_string() const {
  return QPoly(c_).to_string(field_.symbol());
}

std::size_t hash_rational(const Rational& q) noexcept {
  auto limbs = [](mpz_srcptr z) {
    std::size_t h = static_cast<std::size_t>(mpz_sgn(z) + 1);
    const std::size_t n = mpz_size(z);
    for (std::size_t i = 0; i < n; ++i)
      h = h * 1000003u ^ static_cast<std::size_t>(mpz_getlimbn(z, static_cast<mp_size_t>(i)));
    return h;
  };
  return limbs(q.get_num_mpz_t()) * 31u ^ limbs(q.get_den_mpz_t());
}

std::size_t FieldElement::hash() const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (const auto& c : c_) h = (h ^ hash_rational(c)) * 0x100000001b3ull;
  return h;
}

Rational FieldElement::trace() const {
  // Sum of the diagonal of multiplication by this element.
  Rational tr = 0;
  FieldElement basis = one(field_);
  const FieldElement gen = generator(field_);
  for (std::size_t k = 0; k < c_.size(); ++k) {
    tr += (*this * basis).c_[k];
    basis *= gen;
  }
  return tr;
}

Box evaluate_on(const FieldElement& a, const Box& region) {
  Box acc = Box::point(0);
  const auto& c = a.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * region + *it;
  return acc;
}

int sign_at(const FieldElement& a, const Embedding& e) {
  if (!e.is_real)
    throw Error(ErrorCode::FieldMismatch, "sign requested at a complex embedding");
  if (a.is_zero()) return 0;
  if (a.is_rational()) return sgn(a.constant());
  const QPoly& f = a.field().minpoly();
  Interval iv = e.region.re;
  const int lo_sign = sgn(f.eval(iv.lo));
  for (;;) {
    const Interval v = evaluate_interval(a.coeffs(), iv);
    if (v.positive()) return 1;
    if (v.negative()) return -1;
    const Rational m = iv.mid();
    const int s = sgn(f.eval(m));
    if (s == 0) {
      iv = Interval::point(m);
    } else if (s == lo_sign) {
      iv.lo = m;
    } else {
      iv.hi = m;
    }
  }
}

int sign(const FieldElement& a) { return sign_at(a, a.field().embeddings().front()); }

Box evaluate(const FieldElement& a, const Embedding& e, const Rational& precision) {
  Embedding cur = e;
  for (int round = 0;; ++round) {
    Box b = evaluate_on(a, cur.region);
    if (b.width() <= precision) return b;
    if (round > 2000)
      throw Error(ErrorCode::InternalMismatch, "evaluation did not reach precision");
    Rational w = cur.region.width() / 16;
    cur = a.field().refine(e, w);
  }
}

}  // namespace hurwitz
