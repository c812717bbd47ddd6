#include "hurwitz/reflection.hpp"

#include <numeric>

#include "hurwitz/error.hpp"

namespace hurwitz {

CartanMatrix::CartanMatrix(Matrix m) : m_(std::move(m)), symmetric_(false) {
  if (!m_.is_square() || m_.rows() == 0)
    throw Error(ErrorCode::NotSquare, "Cartan matrix must be square and nonempty");
  const FieldElement two(m_.field(), 2);
  for (std::size_t i = 0; i < m_.rows(); ++i)
    if (!(m_(i, i) == two))
      throw Error(ErrorCode::BadDiagonal, "diagonal entry " + std::to_string(i + 1) +
                                              " is " + m_(i, i).to_string() + ", not 2");
  symmetric_ = m_.is_symmetric();
}

ReflectionTuple reflections_from_cartan(const CartanMatrix& c) {
  const std::size_t n = c.size();
  std::vector<Matrix> refs;
  refs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix s = Matrix::identity(c.field(), n);
    for (std::size_t j = 0; j < n; ++j) s(i, j) -= c(i, j);
    refs.push_back(std::move(s));
  }
  return {std::move(refs), c};
}

RootCoroot root_coroot(const Matrix& s) {
  if (!s.is_square()) throw Error(ErrorCode::NotAReflection, "not a square matrix");
  const std::size_t n = s.rows();
  const Matrix m = Matrix::identity(s.field(), n) - s;
  std::size_t pr = n, pc = n;
  for (std::size_t j = 0; j < n && pc == n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      if (!m(i, j).is_zero()) {
        pr = i;
        pc = j;
        break;
      }
  if (pc == n) throw Error(ErrorCode::NotAReflection, "identity has no root");

  Matrix root = m.column(pc) * m(pr, pc).inverse();
  Matrix coroot(s.field(), 1, n);
  for (std::size_t j = 0; j < n; ++j) coroot(0, j) = m(pr, j);
  if (!(root * coroot == m)) throw Error(ErrorCode::NotAReflection, "s - I has rank > 1");
  if (!((coroot * root)(0, 0) == FieldElement(s.field(), 2)))
    throw Error(ErrorCode::NotAReflection, "coroot(root) is not 2");
  return {std::move(root), std::move(coroot)};
}

bool is_reflection(const Matrix& s) {
  if (!s.is_square() || !(s * s).is_identity()) return false;
  if (!(det(s) == FieldElement(s.field(), -1))) return false;
  return rank(s - Matrix::identity(s.field(), s.rows())) == 1;
}

CartanMatrix cartan_of_tuple(const std::vector<Matrix>& refs) {
  if (refs.empty()) throw Error(ErrorCode::NotSquare, "empty tuple");
  std::vector<RootCoroot> rc;
  for (const auto& s : refs) rc.push_back(root_coroot(s));
  const std::size_t n = refs.size();
  Matrix c(refs[0].field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c(i, j) = (rc[i].coroot * rc[j].root)(0, 0);
  return CartanMatrix(std::move(c));
}

ColemanDecomposition coleman_decompose(const CartanMatrix& c) {
  const std::size_t n = c.size();
  Matrix u = Matrix::identity(c.field(), n);
  Matrix v = Matrix::identity(c.field(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i < j) u(i, j) = c(i, j);
      if (i > j) v(i, j) = c(i, j);
    }
  return {std::move(u), std::move(v)};
}

Matrix product(const std::vector<Matrix>& refs) {
  if (refs.empty()) throw Error(ErrorCode::DimensionMismatch, "empty product");
  Matrix p = refs[0];
  for (std::size_t i = 1; i < refs.size(); ++i) p = p * refs[i];
  return p;
}

namespace {

Matrix coleman_coxeter(const CartanMatrix& c) {
  const auto [u, v] = coleman_decompose(c);
  return -(mat_inv(u) * v);
}

}  // namespace

Matrix coxeter_element(const ReflectionTuple& t) {
  Matrix c = product(t.refs);
  // refs are written in the root basis of t.cartan, so no base change.
  if (!(c == coleman_coxeter(t.cartan)))
    throw Error(ErrorCode::InternalMismatch, "s_1...s_n differs from -U^-1 V");
  return c;
}

Matrix coxeter_element(const std::vector<Matrix>& refs) {
  Matrix c = product(refs);
  const std::size_t n = refs.size();
  if (refs[0].rows() != n) return c;
  std::vector<RootCoroot> rc;
  for (const auto& s : refs) rc.push_back(root_coroot(s));
  Matrix roots(refs[0].field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) roots(i, j) = rc[j].root(i, 0);
  if (det(roots).is_zero()) return c;
  const Matrix in_roots = mat_inv(roots) * c * roots;
  if (!(in_roots == coleman_coxeter(cartan_of_tuple(refs))))
    throw Error(ErrorCode::InternalMismatch, "s_1...s_n differs from -U^-1 V");
  return c;
}

Polynomial coleman_charpoly(const CartanMatrix& c) {
  const auto [u, v] = coleman_decompose(c);
  const std::size_t n = c.size();
  const Polynomial x = Polynomial::variable(c.field());
  PolyMatrix m(n, std::vector<Polynomial>(n, Polynomial(c.field())));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m[i][j] = x * u(i, j) + Polynomial::constant(v(i, j));
  return det(std::move(m));
}

std::vector<std::vector<std::size_t>> cartan_blocks(const CartanMatrix& c) {
  const std::size_t n = c.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!c(i, j).is_zero() || !c(j, i).is_zero()) {
        const std::size_t a = find(i), b = find(j);
        parent[std::max(a, b)] = std::min(a, b);
      }
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<std::size_t> slot(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(i);
    if (slot[r] == n) {
      slot[r] = blocks.size();
      blocks.emplace_back();
    }
    blocks[slot[r]].push_back(i);
  }
  return blocks;
}

}  // namespace hurwitz
