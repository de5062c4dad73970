#include "hopfkit/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace hopfkit {

namespace {

void swap_rows(Matrix& m, std::size_t r1, std::size_t r2) {
  if (r1 == r2) return;
  std::swap_ranges(m.a.begin() + r1 * m.cols, m.a.begin() + (r1 + 1) * m.cols,
                   m.a.begin() + r2 * m.cols);
}

void normalize_pivot_row(Matrix& m, std::size_t r, std::size_t col) {
  Rat inv = 1 / m.at(r, col);
  if (inv == 1) return;
  Rat* row = &m.a[r * m.cols];
  for (std::size_t j = col; j < m.cols; ++j)
    if (sgn(row[j]) != 0) row[j] *= inv;
}

}  // namespace

Rref rref(const Matrix& input) {
  Rref out;
  out.m = input;
  Matrix& m = out.m;
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols && r < m.rows; ++col) {
    std::size_t piv = r;
    while (piv < m.rows && sgn(m.at(piv, col)) == 0) ++piv;
    if (piv == m.rows) continue;
    swap_rows(m, r, piv);
    normalize_pivot_row(m, r, col);
    const Rat* prow = &m.a[r * m.cols];
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t ii = 0; ii < static_cast<std::int64_t>(m.rows); ++ii) {
      const auto i = static_cast<std::size_t>(ii);
      if (i == r) continue;
      Rat& lead = m.at(i, col);
      if (sgn(lead) == 0) continue;
      Rat f = lead;
      Rat* row = &m.a[i * m.cols];
      for (std::size_t j = col + 1; j < m.cols; ++j)
        if (sgn(prow[j]) != 0) row[j] -= f * prow[j];
      lead = 0;
    }
    out.pivots.push_back(col);
    ++r;
  }
  return out;
}

Rref rref_serial(const Matrix& input) {
  Rref out;
  out.m = input;
  Matrix& m = out.m;
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols && r < m.rows; ++col) {
    std::size_t piv = r;
    while (piv < m.rows && sgn(m.at(piv, col)) == 0) ++piv;
    if (piv == m.rows) continue;
    swap_rows(m, r, piv);
    normalize_pivot_row(m, r, col);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || sgn(m.at(i, col)) == 0) continue;
      Rat f = m.at(i, col);
      for (std::size_t j = col; j < m.cols; ++j)
        if (sgn(m.at(r, j)) != 0) m.at(i, j) -= f * m.at(r, j);
    }
    out.pivots.push_back(col);
    ++r;
  }
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank(); }

std::optional<Vec> solve_linear(const Matrix& A, const Vec& b) {
  if (b.size() != A.rows) throw std::invalid_argument("solve_linear: rhs length mismatch");
  Matrix aug(A.rows, A.cols + 1);
  for (std::size_t i = 0; i < A.rows; ++i) {
    for (std::size_t j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, A.cols) = b[i];
  }
  Rref rr = rref(aug);
  for (std::size_t p : rr.pivots)
    if (p == A.cols) return std::nullopt;  // 0 = 1 row: inconsistent
  Vec x(A.cols, Rat(0));
  for (std::size_t r = 0; r < rr.rank(); ++r) x[rr.pivots[r]] = rr.m.at(r, A.cols);
  return x;
}

std::optional<Matrix> solve_linear_many(const Matrix& A, const Matrix& B) {
  if (B.rows != A.rows) throw std::invalid_argument("solve_linear_many: shape mismatch");
  Matrix aug(A.rows, A.cols + B.cols);
  for (std::size_t i = 0; i < A.rows; ++i) {
    for (std::size_t j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
    for (std::size_t j = 0; j < B.cols; ++j) aug.at(i, A.cols + j) = B.at(i, j);
  }
  Rref rr = rref(aug);
  for (std::size_t p : rr.pivots)
    if (p >= A.cols) return std::nullopt;
  Matrix X(A.cols, B.cols);
  for (std::size_t r = 0; r < rr.rank(); ++r)
    for (std::size_t j = 0; j < B.cols; ++j) X.at(rr.pivots[r], j) = rr.m.at(r, A.cols + j);
  return X;
}

std::vector<Vec> nullspace(const Matrix& A) {
  Rref rr = rref(A);
  std::vector<bool> is_pivot(A.cols, false);
  for (std::size_t p : rr.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < A.cols; ++f) {
    if (is_pivot[f]) continue;
    Vec v(A.cols, Rat(0));
    v[f] = 1;
    for (std::size_t r = 0; r < rr.rank(); ++r)
      if (sgn(rr.m.at(r, f)) != 0) v[rr.pivots[r]] = -rr.m.at(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

Subspace Subspace::from_vectors(std::size_t ambient, std::vector<Vec> gens) {
  for (const Vec& g : gens)
    if (g.size() != ambient)
      throw std::invalid_argument("Subspace: generator has wrong length");
  Rref rr = rref(Matrix::from_rows(ambient, gens));
  if (rr.rank() != gens.size())
    throw std::invalid_argument("Subspace: basis vectors are dependent");
  Subspace s;
  s.ambient = ambient;
  s.basis = std::move(gens);
  return s;
}

std::vector<Vec> Subspace::canonical() const {
  Rref rr = rref(Matrix::from_rows(ambient, basis));
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < rr.rank(); ++r) rows.push_back(rr.m.row(r));
  return rows;
}

bool Subspace::contains(const Vec& v) const {
  return span_membership(basis, v).has_value();
}

std::optional<Vec> span_membership(const std::vector<Vec>& family, const Vec& v) {
  if (family.empty()) return vec_is_zero(v) ? std::optional<Vec>(Vec{}) : std::nullopt;
  return solve_linear(Matrix::from_cols(family.front().size(), family), v);
}

Subspace subspace_sum(const Subspace& x, const Subspace& y) {
  if (x.ambient != y.ambient) throw std::invalid_argument("subspace_sum: ambient mismatch");
  std::vector<Vec> all(x.basis);
  all.insert(all.end(), y.basis.begin(), y.basis.end());
  Rref rr = rref(Matrix::from_rows(x.ambient, all));
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < rr.rank(); ++r) rows.push_back(rr.m.row(r));
  return Subspace::from_vectors(x.ambient, std::move(rows));
}

Subspace subspace_intersect(const Subspace& x, const Subspace& y) {
  if (x.ambient != y.ambient)
    throw std::invalid_argument("subspace_intersect: ambient mismatch");
  // Columns [X | -Y]; kernel vectors give equal combinations from both sides.
  std::vector<Vec> cols(x.basis);
  for (const Vec& v : y.basis) cols.push_back(vec_scale(Rat(-1), v));
  std::vector<Vec> gens;
  if (!cols.empty()) {
    for (const Vec& k : nullspace(Matrix::from_cols(x.ambient, cols))) {
      Vec w(x.ambient, Rat(0));
      for (std::size_t i = 0; i < x.basis.size(); ++i) vec_axpy(w, k[i], x.basis[i]);
      if (!vec_is_zero(w)) gens.push_back(std::move(w));
    }
  }
  Rref rr = rref(Matrix::from_rows(x.ambient, gens));
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < rr.rank(); ++r) rows.push_back(rr.m.row(r));
  return Subspace::from_vectors(x.ambient, std::move(rows));
}

bool subspace_equal(const Subspace& x, const Subspace& y) {
  if (x.ambient != y.ambient) throw std::invalid_argument("subspace_equal: ambient mismatch");
  return x.canonical() == y.canonical();
}

Subspace subspace_span(std::size_t ambient, const std::vector<Vec>& gens) {
  Rref rr = rref(Matrix::from_rows(ambient, gens));
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < rr.rank(); ++r) rows.push_back(rr.m.row(r));
  return Subspace::from_vectors(ambient, std::move(rows));
}

QuotientSpace quotient_by_span(std::size_t ambient, const std::vector<Vec>& killed) {
  Rref rr = rref(Matrix::from_rows(ambient, killed));
  std::vector<bool> is_pivot(ambient, false);
  for (std::size_t pc : rr.pivots) is_pivot[pc] = true;

  QuotientSpace q;
  q.ambient = ambient;
  for (std::size_t j = 0; j < ambient; ++j)
    if (!is_pivot[j]) q.free_cols.push_back(j);
  q.dim = q.free_cols.size();

  std::vector<std::size_t> class_of(ambient, ambient);
  for (std::size_t c = 0; c < q.free_cols.size(); ++c) class_of[q.free_cols[c]] = c;

  q.project = Matrix(q.dim, ambient);
  for (std::size_t j = 0; j < ambient; ++j)
    if (!is_pivot[j]) q.project.at(class_of[j], j) = 1;
  for (std::size_t r = 0; r < rr.rank(); ++r) {
    std::size_t pc = rr.pivots[r];
    // e_pc ≡ -sum over free f of rr.m[r][f]·e_f modulo the killed span
    for (std::size_t f = pc + 1; f < ambient; ++f)
      if (!is_pivot[f] && sgn(rr.m.at(r, f)) != 0) q.project.at(class_of[f], pc) = -rr.m.at(r, f);
  }

  q.section = Matrix(ambient, q.dim);
  for (std::size_t c = 0; c < q.dim; ++c) q.section.at(q.free_cols[c], c) = 1;
  return q;
}

}  // namespace hopfkit
