#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hurwitz/braid.hpp"
#include "hurwitz/reflection.hpp"

namespace hurwitz {

enum class WitnessKind {
  /// Trace t of an invariant plane with x^2 - t x + 1: some conjugate of t
  /// is non-real or outside [-2, 2].
  TraceOffSegment,
  /// Exactly one of the two Cartan entries vanishes: a Jordan block.
  MixedZeroPair,
  /// The minimal polynomial has a repeated root.
  NotDiagonalizable,
  /// The norm of the characteristic polynomial is not in Z[x].
  NonIntegralEigenvalue,
  /// The norm of the characteristic polynomial has a non-cyclotomic factor.
  EigenvalueOffUnitCircle,
};

std::string to_string(WitnessKind k);

struct Witness {
  WitnessKind kind = WitnessKind::TraceOffSegment;
  /// For TraceOffSegment: the embedding and a rectangle around the image of
  /// the trace that misses [-2, 2].
  std::optional<std::size_t> embedding;
  std::optional<Box> rectangle;
  std::string value;
  std::string detail;
};

struct OrderResult {
  enum class Verdict { Finite, InfiniteCertified, Unknown };
  Verdict verdict = Verdict::Unknown;
  unsigned long order = 0;
  unsigned long cap = 0;
  std::optional<Witness> witness;
  /// Set for the product of a reflection with itself.
  bool degenerate = false;

  static OrderResult finite(unsigned long m) { return {Verdict::Finite, m, 0, {}, false}; }
  static OrderResult infinite(Witness w) {
    return {Verdict::InfiniteCertified, 0, 0, std::move(w), false};
  }
  [[nodiscard]] bool is_finite() const { return verdict == Verdict::Finite; }
  [[nodiscard]] bool is_infinite() const { return verdict == Verdict::InfiniteCertified; }
};

std::string to_string(OrderResult::Verdict v);

struct OrderOptions {
  /// Powers g, g^2, ..., g^cap are tried before any certificate.
  unsigned long cap = 120;
  /// Largest n * [K:Q] for the exact test over Q.
  std::size_t rational_limit = 48;
};

/// Throws NotSquare or Singular.
OrderResult element_order(const Matrix& g, const OrderOptions& opt = {});
inline OrderResult element_order(const Matrix& g, unsigned long cap) {
  return element_order(g, OrderOptions{cap});
}

/// Order of s_i s_j on the plane of the two roots, with C_ij = a, C_ji = b.
OrderResult pair_product_order(const FieldElement& a, const FieldElement& b,
                               const OrderOptions& opt = {});

/// The matrix of g acting on Q^(n d), entry a of g replaced by the matrix of
/// multiplication by a in the power basis.
Matrix rational_realization(const Matrix& g);

struct ClosureResult {
  enum class Status { Finite, CapExceeded };
  Status status = Status::Finite;
  std::size_t size = 0;
  std::size_t cap = 0;
  /// Discovery order, starting with I.
  std::vector<Matrix> elements;
};

std::string to_string(ClosureResult::Status s);

/// Breadth-first closure from I under right multiplication by the
/// generators and, for those that are not involutions, their inverses.
/// CapExceeded once `cap` elements are known. Throws DimensionMismatch.
ClosureResult group_closure(const std::vector<Matrix>& gens, std::size_t cap);

struct EmbeddingPd {
  std::size_t index = 0;
  bool is_real = false;
  /// Empty for complex embeddings.
  std::optional<bool> positive_definite;
  std::vector<int> minor_signs;
};

/// Signs of the leading principal minors at every real embedding.
/// Throws NotSymmetric.
std::vector<EmbeddingPd> galois_pd_check(const CartanMatrix& c);

struct CertifyOptions {
  OrderOptions order;
  std::size_t orbit_cap = 2000;
  std::size_t closure_cap = 20000;
  bool force_closure = false;
};

struct CertificateReport {
  enum class Conclusion { FiniteCertified, InfiniteCertified, Inconclusive };

  CartanMatrix cartan;
  FieldElement det;
  bool invertible = false;
  /// Symmetric and invertible, the hypotheses of the finiteness theorem.
  bool hypotheses = false;
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<std::vector<OrderResult>> pair_orders;
  std::vector<FieldElement> minors;
  bool pd = false;
  std::vector<EmbeddingPd> galois_pd;
  Matrix coxeter;
  OrderResult coxeter_order;
  OrbitResult orbit_probe;
  /// Empty when skipped after an infinite certificate.
  std::optional<ClosureResult> closure;
  Conclusion conclusion = Conclusion::Inconclusive;
};

std::string to_string(CertificateReport::Conclusion c);

/// Throws NotSymmetric; BadDiagonal is ruled out by CartanMatrix.
CertificateReport certify(const CartanMatrix& c, const CertifyOptions& opt = {});

}  // namespace hurwitz
