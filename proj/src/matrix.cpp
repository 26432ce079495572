#include "cubicsym/matrix.hpp"

#include <algorithm>

#include "cubicsym/errors.hpp"

namespace cubicsym {

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return QMatrix(0, 0);
  const std::size_t cols = rows.front().size();
  QMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw DomainError("from_rows: ragged row lengths");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

bool QMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Rational& x) { return x == 0; });
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Rational QMatrix::trace() const {
  if (!is_square()) throw DomainError("trace: matrix is not square");
  Rational t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

QMatrix QMatrix::operator+(const QMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw DomainError("matrix addition: size mismatch");
  QMatrix r(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] + other.data_[k];
  return r;
}

QMatrix QMatrix::operator-(const QMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw DomainError("matrix subtraction: size mismatch");
  QMatrix r(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] - other.data_[k];
  return r;
}

QMatrix QMatrix::operator*(const QMatrix& other) const {
  if (cols_ != other.rows_)
    throw DomainError("matrix product: inner size mismatch");
  QMatrix r(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j)
        r.at(i, j) += a * other.at(k, j);
    }
  return r;
}

QMatrix QMatrix::operator*(const Rational& scalar) const {
  QMatrix r(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] * scalar;
  return r;
}

QMatrix QMatrix::operator-() const { return *this * Rational(-1); }

RrefResult rref(const QMatrix& m) {
  QMatrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows() && a.at(pivot, col) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != row)
      for (std::size_t j = 0; j < a.cols(); ++j)
        std::swap(a.at(pivot, j), a.at(row, j));
    const Rational inv = Rational(1) / a.at(row, col);
    for (std::size_t j = col; j < a.cols(); ++j) a.at(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row) continue;
      const Rational factor = a.at(i, col);
      if (factor == 0) continue;
      for (std::size_t j = col; j < a.cols(); ++j)
        a.at(i, j) -= factor * a.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const QMatrix& m) { return rref(m).pivot_columns.size(); }

std::vector<std::vector<Rational>> nullspace(const QMatrix& m) {
  const auto [r, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : pivots) is_pivot[p] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Rational> v(m.cols());
    v[free_col] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k)
      v[pivots[k]] = -r.at(k, free_col);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rational>> solve(const QMatrix& m,
                                           const std::vector<Rational>& b) {
  if (b.size() != m.rows()) throw DomainError("solve: rhs length != row count");
  QMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  const auto [r, pivots] = rref(aug);
  // a pivot in the appended column means b is outside the column space
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  std::vector<Rational> x(m.cols());
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = r.at(k, m.cols());
  return x;
}

Rational determinant(const QMatrix& m) {
  if (!m.is_square()) throw DomainError("determinant: matrix is not square");
  QMatrix a = m;
  Rational det = 1;
  for (std::size_t col = 0; col < a.cols(); ++col) {
    std::size_t pivot = col;
    while (pivot < a.rows() && a.at(pivot, col) == 0) ++pivot;
    if (pivot == a.rows()) return 0;
    if (pivot != col) {
      for (std::size_t j = 0; j < a.cols(); ++j)
        std::swap(a.at(pivot, j), a.at(col, j));
      det = -det;
    }
    det *= a.at(col, col);
    const Rational inv = Rational(1) / a.at(col, col);
    for (std::size_t i = col + 1; i < a.rows(); ++i) {
      const Rational factor = a.at(i, col) * inv;
      if (factor == 0) continue;
      for (std::size_t j = col; j < a.cols(); ++j)
        a.at(i, j) -= factor * a.at(col, j);
    }
  }
  return det;
}

QMatrix inverse(const QMatrix& m) {
  if (!m.is_square()) throw DomainError("inverse: matrix is not square");
  const std::size_t n = m.rows();
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  const auto [r, pivots] = rref(aug);
  if (pivots.size() != n || pivots.back() != n - 1)
    throw DomainError("inverse: matrix is singular");
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.at(i, n + j);
  return inv;
}

std::vector<Rational> mat_vec(const QMatrix& m, const std::vector<Rational>& v) {
  if (v.size() != m.cols()) throw DomainError("mat_vec: vector length != column count");
  std::vector<Rational> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m.at(i, j) * v[j];
  return out;
}

} // namespace cubicsym
