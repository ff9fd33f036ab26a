// Copyright 2026 The cy4 Authors. Licensed under the Apache License, Version 2.0.
#include "cy4/linalg.hpp"

namespace cy4 {

Matrix Matrix::identity(size_t n) {
  Matrix m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool Matrix::is_zero() const {
  for (const Q& x : a_)
    if (x != 0) return false;
  return true;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) fail(ErrorKind::shape, "matrix product shape mismatch");
  Matrix r(rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const Q& x = (*this)(i, k);
      if (x == 0) continue;
      for (size_t j = 0; j < o.cols_; ++j) r(i, j) += x * o(k, j);
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorKind::shape, "matrix sum shape mismatch");
  Matrix r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + o.scaled(-1); }

Matrix Matrix::scaled(const Q& c) const {
  Matrix r = *this;
  for (Q& x : r.a_) x *= c;
  return r;
}

Matrix transpose(const Matrix& m) {
  Matrix t(m.cols(), m.rows());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return t;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) fail(ErrorKind::shape, "hstack row mismatch");
  Matrix r(a.rows(), a.cols() + b.cols());
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (size_t j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
  }
  return r;
}

Matrix row_block(const Matrix& m, size_t r0, size_t r1) {
  if (r0 > r1 || r1 > m.rows()) fail(ErrorKind::shape, "row block out of range");
  Matrix r(r1 - r0, m.cols());
  for (size_t i = r0; i < r1; ++i)
    for (size_t j = 0; j < m.cols(); ++j) r(i - r0, j) = m(i, j);
  return r;
}

Q det(const Matrix& m) {
  if (m.rows() != m.cols()) fail(ErrorKind::shape, "determinant of a non-square matrix");
  Matrix a = m;
  const size_t n = a.rows();
  Q d = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      d = -d;
    }
    d *= a(c, c);
    for (size_t i = c + 1; i < n; ++i) {
      if (a(i, c) == 0) continue;
      Q f = a(i, c) / a(c, c);
      for (size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return d;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) fail(ErrorKind::shape, "inverse of a non-square matrix");
  const size_t n = m.rows();
  Matrix a = hstack(m, Matrix::identity(n));
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) fail(ErrorKind::singular, "matrix is not invertible");
    for (size_t j = 0; j < 2 * n; ++j) std::swap(a(p, j), a(c, j));
    Q piv = a(c, c);
    for (size_t j = 0; j < 2 * n; ++j) a(c, j) /= piv;
    for (size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      Q f = a(i, c);
      for (size_t j = 0; j < 2 * n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  Matrix r(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) r(i, j) = a(i, n + j);
  return r;
}

size_t rank(const Matrix& m) {
  const size_t R = m.rows(), C = m.cols();
  std::vector<std::vector<mpz_class>> a(R, std::vector<mpz_class>(C));
  for (size_t i = 0; i < R; ++i) {
    mpz_class l = 1;
    for (size_t j = 0; j < C; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (size_t j = 0; j < C; ++j) a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  // Bareiss: every division below is exact.
  size_t r = 0;
  mpz_class prev = 1;
  for (size_t col = 0; col < C && r < R; ++col) {
    size_t piv = r;
    while (piv < R && a[piv][col] == 0) ++piv;
    if (piv == R) continue;
    std::swap(a[piv], a[r]);
    for (size_t i = r + 1; i < R; ++i) {
      for (size_t j = col + 1; j < C; ++j) {
        a[i][j] = a[r][col] * a[i][j] - a[i][col] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = a[r][col];
    ++r;
  }
  return r;
}

}  // namespace cy4
