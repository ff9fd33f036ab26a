// Copyright 2026 The cy4 Authors. Licensed under the Apache License, Version 2.0.
//
// Dense exact matrices over Q. Storage is row-major.
#pragma once

#include <vector>

#include "cy4/common.hpp"

namespace cy4 {

class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static Matrix identity(size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Q& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const Q& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  bool is_zero() const;
  bool operator==(const Matrix&) const = default;

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Q& c) const;

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<Q> a_;
};

Matrix transpose(const Matrix& m);
// [a | b]
Matrix hstack(const Matrix& a, const Matrix& b);
// Rows [r0, r1) of m.
Matrix row_block(const Matrix& m, size_t r0, size_t r1);
Q det(const Matrix& m);
// Throws a singular error for non-invertible input.
Matrix inverse(const Matrix& m);

// Exact rank: rows are scaled to integers, then fraction-free (Bareiss) elimination.
size_t rank(const Matrix& m);

}  // namespace cy4
