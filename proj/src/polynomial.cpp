#include "hurwitz/polynomial.hpp"

#include "hurwitz/error.hpp"

namespace hurwitz {

Polynomial::Polynomial(NumberField field, std::vector<FieldElement> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
  for (const auto& c : c_) require_same_field(field_, c.field());
  trim();
}

Polynomial Polynomial::constant(const FieldElement& c) {
  return Polynomial(c.field(), {c});
}

Polynomial Polynomial::variable(const NumberField& field) {
  return Polynomial(field, {FieldElement::zero(field), FieldElement::one(field)});
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FieldElement Polynomial::coeff(std::size_t k) const {
  return k < c_.size() ? c_[k] : FieldElement::zero(field_);
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  const FieldElement inv = leading().inverse();
  return *this * inv;
}

Polynomial Polynomial::derivative() const {
  std::vector<FieldElement> d;
  for (std::size_t k = 1; k < c_.size(); ++k)
    d.push_back(c_[k] * FieldElement(field_, Rational(static_cast<long>(k))));
  return Polynomial(field_, std::move(d));
}

FieldElement Polynomial::eval(const FieldElement& x) const {
  FieldElement acc = FieldElement::zero(field_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_same_field(field_, o.field_);
  while (c_.size() < o.c_.size()) c_.push_back(FieldElement::zero(field_));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  require_same_field(field_, o.field_);
  while (c_.size() < o.c_.size()) c_.push_back(FieldElement::zero(field_));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_field(a.field_, b.field_);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
  std::vector<FieldElement> out(a.c_.size() + b.c_.size() - 1,
                                FieldElement::zero(a.field_));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      if (!b.c_[j].is_zero()) out[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(a.field_, std::move(out));
}

Polynomial operator*(const Polynomial& a, const FieldElement& c) {
  std::vector<FieldElement> out;
  out.reserve(a.c_.size());
  for (const auto& x : a.c_) out.push_back(x * c);
  return Polynomial(a.field_, std::move(out));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  require_same_field(a.field_, b.field_);
  return a.c_ == b.c_;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
  require_same_field(field_, d.field_);
  if (d.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (degree() < d.degree()) return {Polynomial(field_), *this};
  std::vector<FieldElement> rem = c_;
  const auto dd = static_cast<std::size_t>(d.degree());
  std::vector<FieldElement> quot(rem.size() - dd, FieldElement::zero(field_));
  const FieldElement inv = d.leading().inverse();
  for (std::size_t k = rem.size(); k-- > dd;) {
    if (rem[k].is_zero()) continue;
    FieldElement q = rem[k] * inv;
    for (std::size_t j = 0; j <= dd; ++j)
      if (!d.c_[j].is_zero()) rem[k - dd + j] -= q * d.c_[j];
    quot[k - dd] = std::move(q);
  }
  rem.resize(dd, FieldElement::zero(field_));
  return {Polynomial(field_, std::move(quot)), Polynomial(field_, std::move(rem))};
}

std::string Polynomial::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const FieldElement& c = c_[k];
    if (c.is_zero()) continue;
    std::string term;
    bool negative = false;
    if (c.is_rational()) {
      Rational q = c.constant();
      negative = q < 0;
      Rational mag = abs(q);
      if (k == 0 || mag != 1) term = mag.get_str();
    } else {
      term = "(" + c.to_string() + ")";
    }
    if (k > 0) {
      if (!term.empty()) term += "*";
      term += var;
      if (k > 1) term += "^" + std::to_string(k);
    }
    if (first) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    out += term;
    first = false;
  }
  return out;
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace hurwitz
