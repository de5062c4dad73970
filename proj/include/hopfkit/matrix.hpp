#pragma once

// Dense matrices over exact rationals, row-major.
//
// Multiplication has two implementations: mul() runs the elimination-style
// i-k-j loop with OpenMP over output rows, mul_serial() is the plain
// reference kept for testing.  Both skip zero entries of the left factor,
// which makes products with permutation-like matrices (ubiquitous for group
// algebras) effectively linear in the number of nonzeros.

#include "hopfkit/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace hopfkit {

struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Rat> a;  // rows*cols entries, row-major

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, Rat(0)) {}

  Rat& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  Vec row(std::size_t i) const {
    return Vec(a.begin() + i * cols, a.begin() + (i + 1) * cols);
  }
  Vec col(std::size_t j) const {
    Vec v(rows, Rat(0));
    for (std::size_t i = 0; i < rows; ++i) v[i] = at(i, j);
    return v;
  }
  void set_row(std::size_t i, const Vec& v) {
    if (v.size() != cols) throw std::invalid_argument("set_row: length mismatch");
    for (std::size_t j = 0; j < cols; ++j) a[i * cols + j] = v[j];
  }
  void set_col(std::size_t j, const Vec& v) {
    if (v.size() != rows) throw std::invalid_argument("set_col: length mismatch");
    for (std::size_t i = 0; i < rows; ++i) at(i, j) = v[i];
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  // Columns are the given vectors.
  static Matrix from_cols(std::size_t nrows, const std::vector<Vec>& cs) {
    Matrix m(nrows, cs.size());
    for (std::size_t j = 0; j < cs.size(); ++j) {
      if (cs[j].size() != nrows) throw std::invalid_argument("from_cols: length mismatch");
      for (std::size_t i = 0; i < nrows; ++i) m.at(i, j) = cs[j][i];
    }
    return m;
  }
  static Matrix from_rows(std::size_t ncols, const std::vector<Vec>& rs) {
    Matrix m(rs.size(), ncols);
    for (std::size_t i = 0; i < rs.size(); ++i) m.set_row(i, rs[i]);
    return m;
  }

  Matrix transpose() const;
  Matrix mul(const Matrix& o) const;         // OpenMP over rows
  Matrix mul_serial(const Matrix& o) const;  // reference
  Vec apply(const Vec& v) const;             // this * v
  Matrix add(const Matrix& o) const;
  Matrix sub(const Matrix& o) const;
  bool is_zero() const;
  bool is_identity() const;

  bool operator==(const Matrix& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
};

inline Matrix operator*(const Matrix& x, const Matrix& y) { return x.mul(y); }

// Kronecker product, first factor on the coarse index:
// (x ⊗ y)(i1*ry+i2, j1*cy+j2) = x(i1,j1)·y(i2,j2).
Matrix kron(const Matrix& x, const Matrix& y);
Vec kron_vec(const Vec& a, const Vec& b);

}  // namespace hopfkit
