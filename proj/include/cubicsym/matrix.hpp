#ifndef CUBICSYM_MATRIX_HPP
#define CUBICSYM_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "cubicsym/rational.hpp"

namespace cubicsym {

/// Dense matrix of exact rationals, row-major.
class QMatrix {
public:
  QMatrix() : rows_(0), cols_(0) {}
  QMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static QMatrix identity(std::size_t n);
  static QMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  QMatrix transpose() const;
  Rational trace() const;

  /// Row-major flattening, used to treat matrices as vectors when spanning.
  std::vector<Rational> flatten() const { return data_; }

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

  QMatrix operator+(const QMatrix& other) const;
  QMatrix operator-(const QMatrix& other) const;
  QMatrix operator*(const QMatrix& other) const;
  QMatrix operator*(const Rational& scalar) const;
  QMatrix operator-() const;

private:
  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

struct RrefResult {
  QMatrix matrix;
  std::vector<std::size_t> pivot_columns;
};

/// Reduced row echelon form over Q (unique); preserves the row space.
RrefResult rref(const QMatrix& m);

std::size_t rank(const QMatrix& m);

/// Basis of {v : m v = 0}: the canonical free-variable basis from rref
/// (each free column set to 1 in column order, pivots back-substituted).
/// Deterministic, so kernels are byte-stable across runs.
std::vector<std::vector<Rational>> nullspace(const QMatrix& m);

/// One particular solution of m x = b with free variables zeroed,
/// or nullopt when b is not in the column space.
std::optional<std::vector<Rational>> solve(const QMatrix& m,
                                           const std::vector<Rational>& b);

Rational determinant(const QMatrix& m);

/// Inverse of a square invertible matrix; throws DomainError if singular.
QMatrix inverse(const QMatrix& m);

/// Matrix-vector product.
std::vector<Rational> mat_vec(const QMatrix& m, const std::vector<Rational>& v);

} // namespace cubicsym

#endif
