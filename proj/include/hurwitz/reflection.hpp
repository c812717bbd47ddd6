#pragma once

#include <cstddef>
#include <vector>

#include "hurwitz/linalg.hpp"

namespace hurwitz {

/// Square matrix with 2 on the diagonal: C_ij = coroot_i(root_j).
class CartanMatrix {
 public:
  /// Throws NotSquare or BadDiagonal.
  explicit CartanMatrix(Matrix m);

  [[nodiscard]] const Matrix& matrix() const noexcept { return m_; }
  [[nodiscard]] const NumberField& field() const noexcept { return m_.field(); }
  [[nodiscard]] std::size_t size() const noexcept { return m_.rows(); }
  [[nodiscard]] bool symmetric() const noexcept { return symmetric_; }
  [[nodiscard]] const FieldElement& operator()(std::size_t i, std::size_t j) const {
    return m_(i, j);
  }

 private:
  Matrix m_;
  bool symmetric_;
};

/// Reflections s_1..s_n written in the root basis of `cartan`.
struct ReflectionTuple {
  std::vector<Matrix> refs;
  CartanMatrix cartan;
};

/// s_i is the identity with row i replaced by e_i - (row i of C).
ReflectionTuple reflections_from_cartan(const CartanMatrix& c);

/// s^2 = I, det s = -1 and s - I of rank 1.
bool is_reflection(const Matrix& s);

struct RootCoroot {
  Matrix root;    // n x 1, first nonzero coordinate 1
  Matrix coroot;  // 1 x n, coroot(root) = 2
};

/// s = I - root * coroot. Throws NotAReflection.
RootCoroot root_coroot(const Matrix& s);

/// Throws NotAReflection for any member that is not one.
CartanMatrix cartan_of_tuple(const std::vector<Matrix>& refs);

struct ColemanDecomposition {
  Matrix u;  // upper unipotent
  Matrix v;  // lower, unit diagonal
};

ColemanDecomposition coleman_decompose(const CartanMatrix& c);

/// Plain product s_1 s_2 ... s_n.
Matrix product(const std::vector<Matrix>& refs);

/// s_1 ... s_n, checked against -U^-1 V of the tuple's Cartan matrix in the
/// basis of its roots. Throws InternalMismatch if the two disagree.
Matrix coxeter_element(const ReflectionTuple& t);
Matrix coxeter_element(const std::vector<Matrix>& refs);

/// det(xU + V).
Polynomial coleman_charpoly(const CartanMatrix& c);

/// Connected components of i ~ j iff C_ij or C_ji is nonzero, 0-based,
/// each sorted, ordered by smallest member.
std::vector<std::vector<std::size_t>> cartan_blocks(const CartanMatrix& c);

}  // namespace hurwitz
