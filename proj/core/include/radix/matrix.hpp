#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "radix/scalar.hpp"

namespace radix {

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols);
  static Matrix diagonal(std::span<const Scalar> entries);
  static Matrix diagonal(std::initializer_list<Scalar> entries);
  /// Columns are the given vectors; all must have length `rows`.
  static Matrix from_columns(std::size_t rows, std::span<const Vector> columns);
  static Matrix from_rows(std::size_t cols, std::span<const Vector> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_symmetric() const;
  bool is_diagonal() const;
  bool is_zero() const;

  Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  const std::vector<Scalar>& entries() const noexcept { return entries_; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  std::vector<Vector> columns() const;
  Vector diagonal_entries() const;

  Matrix transpose() const;

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

/// Row vector times matrix: (vᵀ·m)ᵀ.
Vector left_multiply(const Vector& v, const Matrix& m);

/// Rows separated by "; ", entries by spaces.
std::ostream& operator<<(std::ostream& os, const Matrix& m);

}  // namespace radix
