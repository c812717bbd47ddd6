#include "hurwitz/linalg.hpp"

#include "hurwitz/error.hpp"

namespace hurwitz {

namespace {

void require_square(const Matrix& a, const char* what) {
  if (!a.is_square())
    throw Error(ErrorCode::NotSquare, std::string(what) + " of a " +
                                          std::to_string(a.rows()) + "x" +
                                          std::to_string(a.cols()) + " matrix");
}

void require_same_shape(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field());
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorCode::DimensionMismatch, "matrix shapes differ");
}

// In-place reduction to reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    const FieldElement inv = m(row, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      const FieldElement factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (!m(row, j).is_zero()) m(i, j) -= factor * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Matrix::Matrix(NumberField field, std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), field_(field),
      e_(rows * cols, FieldElement::zero(field)) {}

Matrix::Matrix(NumberField field, std::size_t rows, std::size_t cols,
               std::vector<FieldElement> entries)
    : rows_(rows), cols_(cols), field_(std::move(field)), e_(std::move(entries)) {
  if (e_.size() != rows_ * cols_)
    throw Error(ErrorCode::DimensionMismatch,
                "expected " + std::to_string(rows_ * cols_) + " entries, got " +
                    std::to_string(e_.size()));
  for (const auto& e : e_) require_same_field(field_, e.field());
}

Matrix Matrix::identity(const NumberField& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = FieldElement::one(field);
  return m;
}

Matrix Matrix::from_rationals(const NumberField& field,
                              std::initializer_list<std::initializer_list<Rational>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.begin()->size() : 0;
  std::vector<FieldElement> e;
  for (const auto& row : rows) {
    if (row.size() != c) throw Error(ErrorCode::DimensionMismatch, "ragged rows");
    for (const auto& q : row) e.emplace_back(field, q);
  }
  return Matrix(field, r, c, std::move(e));
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::column(std::size_t j) const {
  Matrix c(field_, rows_, 1);
  for (std::size_t i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
  return c;
}

Matrix Matrix::leading_block(std::size_t k) const {
  Matrix b(field_, k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) b(i, j) = (*this)(i, j);
  return b;
}

Matrix Matrix::principal(const std::vector<std::size_t>& idx) const {
  Matrix b(field_, idx.size(), idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) b(i, j) = (*this)(idx[i], idx[j]);
  return b;
}

bool Matrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (!((*this)(i, j) == (*this)(j, i))) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const auto& e = (*this)(i, j);
      if (i == j ? !e.is_one() : !e.is_zero()) return false;
    }
  return true;
}

bool Matrix::is_zero() const {
  for (const auto& e : e_)
    if (!e.is_zero()) return false;
  return true;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b);
  Matrix r = a;
  for (std::size_t k = 0; k < r.e_.size(); ++k) r.e_[k] += b.e_[k];
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b);
  Matrix r = a;
  for (std::size_t k = 0; k < r.e_.size(); ++k) r.e_[k] -= b.e_[k];
  return r;
}

Matrix operator-(const Matrix& a) {
  Matrix r = a;
  for (auto& e : r.e_) e = -e;
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_field(a.field_, b.field_);
  if (a.cols_ != b.rows_)
    throw Error(ErrorCode::DimensionMismatch,
                "cannot multiply " + std::to_string(a.rows_) + "x" +
                    std::to_string(a.cols_) + " by " + std::to_string(b.rows_) + "x" +
                    std::to_string(b.cols_));
  Matrix r(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const FieldElement& x = a(i, k);
      if (x.is_zero()) continue;
      const bool unit = x.is_one();
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const FieldElement& y = b(k, j);
        if (y.is_zero()) continue;
        if (unit) r(i, j) += y;
        else r(i, j) += x * y;
      }
    }
  return r;
}

Matrix operator*(const Matrix& a, const FieldElement& c) {
  Matrix r = a;
  for (auto& e : r.e_) e *= c;
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

std::string Matrix::key() const {
  std::string out = std::to_string(rows_) + "x" + std::to_string(cols_) + ":";
  for (std::size_t k = 0; k < e_.size(); ++k) {
    if (k) out += ';';
    out += e_[k].key();
  }
  return out;
}

std::size_t Matrix::hash() const noexcept {
  std::size_t h = rows_ * 131 + cols_;
  for (const auto& e : e_) h = (h ^ e.hash()) * 0x100000001b3ull;
  return h;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) { return a * b; }

Matrix mat_inv(const Matrix& a) {
  require_square(a, "inverse");
  const std::size_t n = a.rows();
  Matrix aug(a.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = FieldElement::one(a.field());
  }
  const auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1)
    throw Error(ErrorCode::Singular, "matrix is singular");
  Matrix inv(a.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

FieldElement det(const Matrix& a) {
  require_square(a, "determinant");
  const std::size_t n = a.rows();
  Matrix m = a;
  FieldElement result = FieldElement::one(a.field());
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && m(p, col).is_zero()) ++p;
    if (p == n) return FieldElement::zero(a.field());
    if (p != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(col, j));
      result = -result;
    }
    result *= m(col, col);
    const FieldElement inv = m(col, col).inverse();
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m(i, col).is_zero()) continue;
      const FieldElement factor = m(i, col) * inv;
      for (std::size_t j = col; j < n; ++j)
        if (!m(col, j).is_zero()) m(i, j) -= factor * m(col, j);
    }
  }
  return result;
}

Polynomial charpoly(const Matrix& a) {
  require_square(a, "characteristic polynomial");
  const std::size_t n = a.rows();
  const NumberField& k = a.field();
  // Faddeev-LeVerrier: M_j = a M_{j-1} + c_{n-j+1} I, c_{n-j} = -tr(a M_j) / j.
  std::vector<FieldElement> c(n + 1, FieldElement::zero(k));
  c[n] = FieldElement::one(k);
  Matrix m(k, n, n);
  const Matrix id = Matrix::identity(k, n);
  for (std::size_t j = 1; j <= n; ++j) {
    m = a * m + id * c[n - j + 1];
    const Matrix am = a * m;
    FieldElement tr = FieldElement::zero(k);
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - j] = -tr * FieldElement(k, Rational(1, static_cast<long>(j)));
  }
  return Polynomial(k, std::move(c));
}

std::vector<Matrix> kernel(const Matrix& a) {
  Matrix m = a;
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Matrix> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Matrix v(a.field(), a.cols(), 1);
    v(free, 0) = FieldElement::one(a.field());
    for (std::size_t r = 0; r < pivots.size(); ++r) v(pivots[r], 0) = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const Matrix& a) {
  Matrix m = a;
  return rref(m).size();
}

std::vector<FieldElement> leading_principal_minors(const Matrix& a) {
  require_square(a, "principal minors");
  std::vector<FieldElement> minors;
  for (std::size_t k = 1; k <= a.rows(); ++k) minors.push_back(det(a.leading_block(k)));
  return minors;
}

bool is_positive_definite(const Matrix& a) {
  require_square(a, "positive definiteness");
  if (!a.is_symmetric())
    throw Error(ErrorCode::NotSymmetric, "positive definiteness needs a symmetric matrix");
  for (const auto& m : leading_principal_minors(a))
    if (sign(m) != 1) return false;
  return true;
}

Matrix evaluate(const Polynomial& p, const Matrix& a) {
  require_square(a, "polynomial evaluation");
  const std::size_t n = a.rows();
  Matrix acc(a.field(), n, n);
  const Matrix id = Matrix::identity(a.field(), n);
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
    acc = acc * a + id * *it;
  return acc;
}

Matrix power(const Matrix& a, unsigned long e) {
  require_square(a, "power");
  Matrix result = Matrix::identity(a.field(), a.rows());
  Matrix base = a;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Polynomial det(PolyMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) throw Error(ErrorCode::NotSquare, "empty polynomial matrix");
  const NumberField field = m[0][0].field();
  for (const auto& row : m)
    if (row.size() != n) throw Error(ErrorCode::NotSquare, "polynomial matrix is not square");
  bool negate = false;
  Polynomial prev = Polynomial::constant(FieldElement::one(field));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return Polynomial(field);
      std::swap(m[p], m[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        auto [q, r] = num.divmod(prev);
        if (!r.is_zero())
          throw Error(ErrorCode::InternalMismatch, "inexact fraction-free step");
        m[i][j] = std::move(q);
      }
      m[i][k] = Polynomial(field);
    }
    prev = m[k][k];
  }
  Polynomial result = m[n - 1][n - 1];
  if (negate) result = result * FieldElement(field, Rational(-1));
  return result;
}

}  // namespace hurwitz
