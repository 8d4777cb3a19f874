#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "liederiv/scalar.hpp"

namespace liederiv {

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::size_t cols, const std::vector<Vector>& rows);
  /// Builds a matrix whose columns are the given vectors.
  static Matrix from_columns(std::size_t rows, const std::vector<Vector>& cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  Vector row_vector(std::size_t r) const;
  Vector column(std::size_t c) const;

  void swap_rows(std::size_t a, std::size_t b);
  void append_row(std::span<const Scalar> row);
  /// Appends all rows of other (column counts must agree).
  void append_rows(const Matrix& other);

  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  const std::vector<Scalar>& data() const noexcept { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, const Vector& v);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Scalar& s, const Matrix& a);

/// Vertical concatenation; column counts must agree.
Matrix vstack(const Matrix& top, const Matrix& bottom);
/// Horizontal concatenation; row counts must agree.
Matrix hstack(const Matrix& left, const Matrix& right);

/// Column-major flattening: entry (r, c) lands at index c * rows + r, so the
/// flattened vector is the concatenation of the columns (images of basis vectors).
Vector flatten(const Matrix& m);
Matrix unflatten(const Vector& v, std::size_t rows, std::size_t cols);
inline std::size_t flat_index(std::size_t r, std::size_t c, std::size_t rows) { return c * rows + r; }

}  // namespace liederiv
