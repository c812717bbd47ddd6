#include "hurwitz/finiteness.hpp"

#include <numeric>
#include <unordered_set>

#include "hurwitz/error.hpp"

namespace hurwitz {

std::string to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::TraceOffSegment: return "TraceOffSegment";
    case WitnessKind::MixedZeroPair: return "MixedZeroPair";
    case WitnessKind::NotDiagonalizable: return "NotDiagonalizable";
    case WitnessKind::NonIntegralEigenvalue: return "NonIntegralEigenvalue";
    case WitnessKind::EigenvalueOffUnitCircle: return "EigenvalueOffUnitCircle";
  }
  return "?";
}

std::string to_string(OrderResult::Verdict v) {
  switch (v) {
    case OrderResult::Verdict::Finite: return "Finite";
    case OrderResult::Verdict::InfiniteCertified: return "InfiniteCertified";
    case OrderResult::Verdict::Unknown: return "Unknown";
  }
  return "?";
}

std::string to_string(ClosureResult::Status s) {
  return s == ClosureResult::Status::Finite ? "Finite" : "CapExceeded";
}

std::string to_string(CertificateReport::Conclusion c) {
  switch (c) {
    case CertificateReport::Conclusion::FiniteCertified: return "FiniteCertified";
    case CertificateReport::Conclusion::InfiniteCertified: return "InfiniteCertified";
    case CertificateReport::Conclusion::Inconclusive: return "Inconclusive";
  }
  return "?";
}

namespace {

// A conjugate of tau outside [-2, 2], certified by a rectangle.
std::optional<Witness> trace_witness(const FieldElement& tau) {
  const NumberField& k = tau.field();
  Witness w;
  w.kind = WitnessKind::TraceOffSegment;
  w.value = tau.to_string();
  if (tau.is_rational()) {
    if (abs(tau.constant()) <= 2) return std::nullopt;
    w.embedding = 0;
    w.rectangle = Box::point(tau.constant());
    w.detail = "rational trace outside [-2, 2]";
    return w;
  }
  const FieldElement two(k, 2);
  for (const auto& e : k.embeddings()) {
    if (e.is_real && sign_at(tau - two, e) <= 0 && sign_at(tau + two, e) >= 0) continue;
    // Real embeddings reaching here are strictly outside, so refinement ends.
    const int max_bits = e.is_real ? 4096 : 96;
    for (int bits = 4; bits <= max_bits; bits *= 2) {
      Box b = evaluate(tau, e, Rational(1) / Rational(Integer(1) << bits));
      if (b.excludes_segment(2)) {
        w.embedding = e.index;
        w.rectangle = b;
        w.detail = e.is_real ? "real conjugate outside [-2, 2]" : "non-real conjugate";
        return w;
      }
    }
  }
  return std::nullopt;
}

Polynomial linear(const NumberField& k, long root) {
  return Polynomial(k, {FieldElement(k, Rational(-root)), FieldElement::one(k)});
}

// Removes every factor x - 1 and x + 1; what is left of a plane rotation
// is x^2 - tau x + 1.
std::optional<FieldElement> plane_trace(Polynomial chi) {
  const NumberField& k = chi.field();
  for (long r : {1L, -1L}) {
    const Polynomial f = linear(k, r);
    while (chi.degree() >= 1) {
      auto [q, rem] = chi.divmod(f);
      if (!rem.is_zero()) break;
      chi = q;
    }
  }
  if (chi.degree() != 2 || !chi.coeff(0).is_one()) return std::nullopt;
  return -chi.coeff(1);
}

QPoly to_qpoly(const Polynomial& p) {
  std::vector<Rational> c;
  for (const auto& e : p.coeffs()) c.push_back(e.constant());
  return QPoly(c);
}

unsigned long reduce_order(const Matrix& g, unsigned long m) {
  unsigned long rest = m;
  std::vector<unsigned long> primes;
  for (unsigned long p = 2; p * p <= rest; ++p)
    if (rest % p == 0) {
      primes.push_back(p);
      while (rest % p == 0) rest /= p;
    }
  if (rest > 1) primes.push_back(rest);
  for (unsigned long p : primes)
    while (m % p == 0 && power(g, m / p).is_identity()) m /= p;
  return m;
}

// Exact decision through the rational realization G: g has finite order iff
// charpoly(G) is a product of cyclotomic polynomials and G^L = I for the
// lcm L of their indices.
OrderResult rational_test(const Matrix& g) {
  const QPoly p = to_qpoly(charpoly(rational_realization(g)));
  for (const auto& c : p.coeffs())
    if (!is_integer(c)) {
      Witness w;
      w.kind = WitnessKind::NonIntegralEigenvalue;
      w.value = p.to_string();
      w.detail = "norm of the characteristic polynomial is not integral";
      return OrderResult::infinite(w);
    }
  QPoly rest = p;
  unsigned long l = 1;
  const unsigned bound = 2 * static_cast<unsigned>(p.degree() * p.degree()) + 2;
  for (unsigned m = 1; m <= bound && rest.degree() > 0; ++m) {
    if (euler_phi(m) > static_cast<unsigned>(rest.degree())) continue;
    const QPoly phi = cyclotomic(m);
    bool divides = false;
    while (rest.degree() >= phi.degree()) {
      auto [q, r] = rest.divmod(phi);
      if (!r.is_zero()) break;
      rest = q;
      divides = true;
    }
    if (divides) l = std::lcm(l, static_cast<unsigned long>(m));
  }
  if (rest.degree() > 0) {
    Witness w;
    w.kind = WitnessKind::EigenvalueOffUnitCircle;
    w.value = rest.to_string();
    w.detail = "non-cyclotomic factor of the norm of the characteristic polynomial";
    return OrderResult::infinite(w);
  }
  if (!power(g, l).is_identity()) {
    Witness w;
    w.kind = WitnessKind::NotDiagonalizable;
    w.value = std::to_string(l);
    w.detail = "all eigenvalues are roots of unity but g^L != I";
    return OrderResult::infinite(w);
  }
  return OrderResult::finite(reduce_order(g, l));
}

}  // namespace

Matrix rational_realization(const Matrix& g) {
  const NumberField& k = g.field();
  const NumberField q = NumberField::rationals();
  const std::size_t d = k.degree();
  const FieldElement theta = FieldElement::generator(k);
  std::vector<FieldElement> basis{FieldElement::one(k)};
  for (std::size_t j = 1; j < d; ++j) basis.push_back(basis.back() * theta);

  Matrix out(q, g.rows() * d, g.cols() * d);
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) {
      if (g(i, j).is_zero()) continue;
      for (std::size_t col = 0; col < d; ++col) {
        const FieldElement prod = g(i, j) * basis[col];
        for (std::size_t row = 0; row < d; ++row)
          out(i * d + row, j * d + col) = FieldElement(q, prod.coeffs()[row]);
      }
    }
  return out;
}

OrderResult element_order(const Matrix& g, const OrderOptions& opt) {
  if (!g.is_square()) throw Error(ErrorCode::NotSquare, "order of a non-square matrix");
  if (det(g).is_zero()) throw Error(ErrorCode::Singular, "order of a singular matrix");

  Matrix p = g;
  for (unsigned long m = 1; m <= opt.cap; ++m) {
    if (p.is_identity()) {
      OrderResult r = OrderResult::finite(m);
      r.cap = opt.cap;
      return r;
    }
    p = p * g;
  }

  OrderResult r;
  const Polynomial chi = charpoly(g);
  if (auto tau = plane_trace(chi)) {
    if (auto w = trace_witness(*tau)) r = OrderResult::infinite(*w);
  }
  if (r.verdict == OrderResult::Verdict::Unknown) {
    const Polynomial sqf = chi.divmod(gcd(chi, chi.derivative())).first;
    if (!evaluate(sqf, g).is_zero()) {
      Witness w;
      w.kind = WitnessKind::NotDiagonalizable;
      w.value = sqf.to_string("x");
      w.detail = "squarefree part of the characteristic polynomial does not vanish at g";
      r = OrderResult::infinite(w);
    }
  }
  if (r.verdict == OrderResult::Verdict::Unknown &&
      g.rows() * g.field().degree() <= opt.rational_limit)
    r = rational_test(g);
  r.cap = opt.cap;
  return r;
}

OrderResult pair_product_order(const FieldElement& a, const FieldElement& b,
                               const OrderOptions& opt) {
  require_same_field(a.field(), b.field());
  const NumberField& k = a.field();
  if (a.is_zero() != b.is_zero()) {
    Witness w;
    w.kind = WitnessKind::MixedZeroPair;
    w.value = (a * b).to_string();
    w.detail = "one of C_ij, C_ji is zero and the other is not";
    OrderResult r = OrderResult::infinite(w);
    r.cap = opt.cap;
    return r;
  }
  if (a.is_zero()) {
    OrderResult r = OrderResult::finite(2);
    r.cap = opt.cap;
    return r;
  }
  const FieldElement t = a * b - FieldElement(k, 2);
  Matrix companion(k, 2, 2,
                   {FieldElement::zero(k), FieldElement(k, -1), FieldElement::one(k), t});
  return element_order(companion, opt);
}

ClosureResult group_closure(const std::vector<Matrix>& gens, std::size_t cap) {
  if (gens.empty()) throw Error(ErrorCode::DimensionMismatch, "no generators");
  const std::size_t n = gens[0].rows();
  for (const auto& g : gens) {
    require_same_field(gens[0].field(), g.field());
    if (g.rows() != n || g.cols() != n)
      throw Error(ErrorCode::DimensionMismatch, "generators differ in size");
  }
  std::vector<Matrix> moves;
  for (const auto& g : gens) {
    moves.push_back(g);
    if (!(g * g).is_identity()) moves.push_back(mat_inv(g));
  }

  ClosureResult r;
  r.cap = cap;
  std::vector<Matrix>& el = r.elements;
  auto hash = [&](std::size_t i) { return el[i].hash(); };
  auto eq = [&](std::size_t i, std::size_t j) { return el[i] == el[j]; };
  std::unordered_set<std::size_t, decltype(hash), decltype(eq)> seen(1024, hash, eq);

  el.push_back(Matrix::identity(gens[0].field(), n));
  seen.insert(0);
  for (std::size_t head = 0; head < el.size(); ++head) {
    if (el.size() >= cap) {
      r.status = ClosureResult::Status::CapExceeded;
      r.size = el.size();
      return r;
    }
    for (const auto& m : moves) {
      el.push_back(el[head] * m);
      if (!seen.insert(el.size() - 1).second) {
        el.pop_back();
        continue;
      }
      if (el.size() >= cap) {
        r.status = ClosureResult::Status::CapExceeded;
        r.size = el.size();
        return r;
      }
    }
  }
  r.status = ClosureResult::Status::Finite;
  r.size = el.size();
  return r;
}

std::vector<EmbeddingPd> galois_pd_check(const CartanMatrix& c) {
  if (!c.symmetric()) throw Error(ErrorCode::NotSymmetric, "Cartan matrix is not symmetric");
  const auto minors = leading_principal_minors(c.matrix());
  std::vector<EmbeddingPd> out;
  for (const auto& e : c.field().embeddings()) {
    EmbeddingPd pd;
    pd.index = e.index;
    pd.is_real = e.is_real;
    if (e.is_real) {
      bool all = true;
      for (const auto& m : minors) {
        const int s = sign_at(m, e);
        pd.minor_signs.push_back(s);
        all = all && s > 0;
      }
      pd.positive_definite = all;
    }
    out.push_back(std::move(pd));
  }
  return out;
}

CertificateReport certify(const CartanMatrix& c, const CertifyOptions& opt) {
  if (!c.symmetric()) throw Error(ErrorCode::NotSymmetric, "Cartan matrix is not symmetric");
  const std::size_t n = c.size();
  const ReflectionTuple t = reflections_from_cartan(c);
  const Matrix cox = coxeter_element(t);

  CertificateReport r{c, det(c.matrix()), false, false, cartan_blocks(c), {}, {}, false,
                      {}, cox, {}, {}, std::nullopt,
                      CertificateReport::Conclusion::Inconclusive};
  r.invertible = !r.det.is_zero();
  r.hypotheses = r.invertible;

  bool infinite = false;
  r.pair_orders.assign(n, std::vector<OrderResult>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      OrderResult& o = r.pair_orders[i][j];
      if (i == j || t.refs[i] == t.refs[j]) {
        o = OrderResult::finite(1);
        o.cap = opt.order.cap;
        o.degenerate = i != j;
      } else if (j < i) {
        o = r.pair_orders[j][i];
      } else {
        o = pair_product_order(c(i, j), c(j, i), opt.order);
      }
      infinite = infinite || o.is_infinite();
    }

  r.minors = leading_principal_minors(c.matrix());
  r.pd = is_positive_definite(c.matrix());
  r.galois_pd = galois_pd_check(c);
  r.coxeter_order = element_order(cox, opt.order);
  infinite = infinite || r.coxeter_order.is_infinite();

  r.orbit_probe = orbit(TupleState{t.refs}, opt.orbit_cap);

  if (!infinite || opt.force_closure) r.closure = group_closure(t.refs, opt.closure_cap);

  if (infinite) {
    if (r.closure && r.closure->status == ClosureResult::Status::Finite)
      throw Error(ErrorCode::InternalMismatch,
                  "finite closure contradicts an infinite-order certificate");
    r.conclusion = CertificateReport::Conclusion::InfiniteCertified;
  } else if (r.closure && r.closure->status == ClosureResult::Status::Finite) {
    r.conclusion = CertificateReport::Conclusion::FiniteCertified;
  }
  return r;
}

}  // namespace hurwitz
