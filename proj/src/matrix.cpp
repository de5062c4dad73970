#include "hopfkit/matrix.hpp"

#include <cstdint>

namespace hopfkit {

Matrix Matrix::transpose() const {
  Matrix t(cols, rows);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix Matrix::mul(const Matrix& o) const {
  if (cols != o.rows) throw std::invalid_argument("mul: inner dimension mismatch");
  Matrix r(rows, o.cols);
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t ii = 0; ii < static_cast<std::int64_t>(rows); ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    for (std::size_t k = 0; k < cols; ++k) {
      const Rat& x = at(i, k);
      if (sgn(x) == 0) continue;
      const Rat* orow = &o.a[k * o.cols];
      Rat* rrow = &r.a[i * o.cols];
      for (std::size_t j = 0; j < o.cols; ++j)
        if (sgn(orow[j]) != 0) rrow[j] += x * orow[j];
    }
  }
  return r;
}

Matrix Matrix::mul_serial(const Matrix& o) const {
  if (cols != o.rows) throw std::invalid_argument("mul: inner dimension mismatch");
  Matrix r(rows, o.cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < cols; ++k) {
      const Rat& x = at(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < o.cols; ++j)
        if (sgn(o.at(k, j)) != 0) r.at(i, j) += x * o.at(k, j);
    }
  return r;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols) throw std::invalid_argument("apply: length mismatch");
  Vec r(rows, Rat(0));
  for (std::size_t j = 0; j < cols; ++j) {
    if (sgn(v[j]) == 0) continue;
    for (std::size_t i = 0; i < rows; ++i)
      if (sgn(at(i, j)) != 0) r[i] += at(i, j) * v[j];
  }
  return r;
}

Matrix Matrix::add(const Matrix& o) const {
  if (rows != o.rows || cols != o.cols) throw std::invalid_argument("add: shape mismatch");
  Matrix r(*this);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(o.a[i]) != 0) r.a[i] += o.a[i];
  return r;
}

Matrix Matrix::sub(const Matrix& o) const {
  if (rows != o.rows || cols != o.cols) throw std::invalid_argument("sub: shape mismatch");
  Matrix r(*this);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(o.a[i]) != 0) r.a[i] -= o.a[i];
  return r;
}

bool Matrix::is_zero() const {
  for (const Rat& x : a)
    if (sgn(x) != 0) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows != cols) return false;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (at(i, j) != Rat(i == j ? 1 : 0)) return false;
  return true;
}

Matrix kron(const Matrix& x, const Matrix& y) {
  Matrix r(x.rows * y.rows, x.cols * y.cols);
  for (std::size_t i1 = 0; i1 < x.rows; ++i1)
    for (std::size_t j1 = 0; j1 < x.cols; ++j1) {
      const Rat& v = x.at(i1, j1);
      if (sgn(v) == 0) continue;
      for (std::size_t i2 = 0; i2 < y.rows; ++i2)
        for (std::size_t j2 = 0; j2 < y.cols; ++j2)
          if (sgn(y.at(i2, j2)) != 0)
            r.at(i1 * y.rows + i2, j1 * y.cols + j2) = v * y.at(i2, j2);
    }
  return r;
}

Vec kron_vec(const Vec& a, const Vec& b) {
  Vec r(a.size() * b.size(), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (sgn(b[j]) != 0) r[i * b.size() + j] = a[i] * b[j];
  }
  return r;
}

}  // namespace hopfkit
