#include "hopfkit/finalg.hpp"

#include <stdexcept>

namespace hopfkit {

Vec FinAlgebra::mul(const Vec& x, const Vec& y) const {
  if (x.size() != dim || y.size() != dim) throw std::invalid_argument("mul: length mismatch");
  Vec r(dim, Rat(0));
  for (std::size_t i = 0; i < dim; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (sgn(y[j]) == 0) continue;
      Rat f = x[i] * y[j];
      const Rat* row = &sc[(i * dim + j) * dim];
      for (std::size_t k = 0; k < dim; ++k)
        if (sgn(row[k]) != 0) r[k] += f * row[k];
    }
  }
  return r;
}

Matrix FinAlgebra::left_mult(const Vec& x) const {
  if (x.size() != dim) throw std::invalid_argument("left_mult: length mismatch");
  Matrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      const Rat* row = &sc[(i * dim + j) * dim];
      for (std::size_t k = 0; k < dim; ++k)
        if (sgn(row[k]) != 0) m.at(k, j) += x[i] * row[k];
    }
  }
  return m;
}

Matrix FinAlgebra::right_mult(const Vec& y) const {
  if (y.size() != dim) throw std::invalid_argument("right_mult: length mismatch");
  Matrix m(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    if (sgn(y[j]) == 0) continue;
    for (std::size_t i = 0; i < dim; ++i) {
      const Rat* row = &sc[(i * dim + j) * dim];
      for (std::size_t k = 0; k < dim; ++k)
        if (sgn(row[k]) != 0) m.at(k, i) += y[j] * row[k];
    }
  }
  return m;
}

AlgebraReport validate_algebra(const FinAlgebra& a) {
  AlgebraReport rep;
  const std::size_t d = a.dim;
  if (a.unit.size() != d || a.sc.size() != d * d * d) {
    rep.failures.push_back("shape mismatch between dim, unit, and constants");
    return rep;
  }
  for (std::size_t j = 0; j < d; ++j) {
    if (a.mul(a.unit, unit_vec(d, j)) != unit_vec(d, j))
      rep.failures.push_back("unit fails on the left of basis " + std::to_string(j));
    if (a.mul(unit_vec(d, j), a.unit) != unit_vec(d, j))
      rep.failures.push_back("unit fails on the right of basis " + std::to_string(j));
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vec ij = a.basis_mul(i, j);
      for (std::size_t k = 0; k < d; ++k) {
        // (b_i b_j) b_k vs b_i (b_j b_k), contracting sparse intermediates.
        Vec lhs = a.mul(ij, unit_vec(d, k));
        Vec rhs = a.mul(unit_vec(d, i), a.basis_mul(j, k));
        if (lhs != rhs)
          rep.failures.push_back("associativity fails at (" + std::to_string(i) + "," +
                                 std::to_string(j) + "," + std::to_string(k) + ")");
      }
    }
  return rep;
}

FinAlgebra build_group_algebra(const GroupTable& g) {
  validate_group_table(g);
  FinAlgebra a("Q[" + g.name + "]", g.order);
  a.unit[0] = 1;
  for (std::size_t i = 0; i < g.order; ++i)
    for (std::size_t j = 0; j < g.order; ++j) a.c(i, j, g.mul(i, j)) = 1;
  return a;
}

FinAlgebra dual_number_algebra() {
  FinAlgebra a("Q[x]/(x^2)", 2);
  a.unit[0] = 1;
  a.c(0, 0, 0) = 1;
  a.c(0, 1, 1) = 1;
  a.c(1, 0, 1) = 1;
  // x*x = 0
  return a;
}

FinAlgebra tensor_product_algebra(const FinAlgebra& x, const FinAlgebra& y) {
  const std::size_t dx = x.dim, dy = y.dim;
  FinAlgebra t(x.name + "(x)" + y.name, dx * dy);
  t.unit = kron_vec(x.unit, y.unit);
  for (std::size_t i = 0; i < dx; ++i)
    for (std::size_t j = 0; j < dx; ++j)
      for (std::size_t h = 0; h < dx; ++h) {
        const Rat& cx = x.c(i, j, h);
        if (rat_is_zero(cx)) continue;
        for (std::size_t a = 0; a < dy; ++a)
          for (std::size_t b = 0; b < dy; ++b)
            for (std::size_t z = 0; z < dy; ++z) {
              const Rat& cy = y.c(a, b, z);
              if (!rat_is_zero(cy)) t.c(i * dy + a, j * dy + b, h * dy + z) = cx * cy;
            }
      }
  return t;
}

Matrix regular_trace_gram(const FinAlgebra& a) {
  const std::size_t d = a.dim;
  // trace(L_{b_l}) precomputed, then G_ij = sum_l c[i][j][l] tr(L_{b_l}).
  Vec tr(d, Rat(0));
  for (std::size_t l = 0; l < d; ++l)
    for (std::size_t m = 0; m < d; ++m) tr[l] += a.c(l, m, m);
  Matrix g(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Rat* row = &a.sc[(i * d + j) * d];
      for (std::size_t l = 0; l < d; ++l)
        if (sgn(row[l]) != 0 && sgn(tr[l]) != 0) g.at(i, j) += row[l] * tr[l];
    }
  return g;
}

bool is_semisimple(const FinAlgebra& a) {
  return rank(regular_trace_gram(a)) == a.dim;
}

namespace {

// Incrementally maintained span with exact membership.
struct SpanTracker {
  std::size_t ambient;
  std::vector<Vec> basis;

  explicit SpanTracker(std::size_t n) : ambient(n) {}
  bool contains(const Vec& v) const { return span_membership(basis, v).has_value(); }
  bool extend(const Vec& v) {  // true if the span grew
    if (contains(v)) return false;
    basis.push_back(v);
    return true;
  }
};

}  // namespace

std::vector<Vec> algebra_generators(const FinAlgebra& a) {
  std::vector<Vec> gens;
  SpanTracker span(a.dim);
  span.extend(a.unit);
  auto close = [&]() {
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<Vec> cur = span.basis;
      for (const Vec& x : cur)
        for (const Vec& y : cur)
          if (span.extend(a.mul(x, y))) grew = true;
    }
  };
  close();
  for (std::size_t i = 0; i < a.dim && span.basis.size() < a.dim; ++i) {
    Vec e = unit_vec(a.dim, i);
    if (span.contains(e)) continue;
    gens.push_back(e);
    span.extend(e);
    close();
  }
  return gens;
}

std::optional<Vec> separability_idempotent(const FinAlgebra& a, bool symmetric) {
  const std::size_t d = a.dim, dd = d * d;
  std::vector<Vec> gens = algebra_generators(a);
  // Unknown e = sum e_pq b_p⊗b_q.  Rows: (x⊗1)e - e(1⊗x) = 0 per generator
  // x (dd equations each), then mu(e) = 1 (d equations), then optionally the
  // flip constraints e_pq = e_qp.
  const std::size_t sym_rows = symmetric ? d * (d - 1) / 2 : 0;
  Matrix sys(gens.size() * dd + d + sym_rows, dd);
  std::size_t base = 0;
  for (const Vec& x : gens) {
    Matrix lx = a.left_mult(x), rx = a.right_mult(x);
    // coefficient of e_pq in coordinate (u,v): lx[u][p]·[v==q] - [u==p]·rx[v][q]
    for (std::size_t p = 0; p < d; ++p)
      for (std::size_t q = 0; q < d; ++q) {
        for (std::size_t u = 0; u < d; ++u)
          if (sgn(lx.at(u, p)) != 0) sys.at(base + u * d + q, p * d + q) += lx.at(u, p);
        for (std::size_t v = 0; v < d; ++v)
          if (sgn(rx.at(v, q)) != 0) sys.at(base + p * d + v, p * d + q) -= rx.at(v, q);
      }
    base += dd;
  }
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = 0; q < d; ++q) {
      const Rat* row = &a.sc[(p * d + q) * d];
      for (std::size_t k = 0; k < d; ++k)
        if (sgn(row[k]) != 0) sys.at(base + k, p * d + q) += row[k];
    }
  Vec rhs(sys.rows, Rat(0));
  for (std::size_t k = 0; k < d; ++k) rhs[base + k] = a.unit[k];
  if (symmetric) {
    std::size_t r = base + d;
    for (std::size_t p = 0; p < d; ++p)
      for (std::size_t q = p + 1; q < d; ++q, ++r) {
        sys.at(r, p * d + q) = 1;
        sys.at(r, q * d + p) = -1;
      }
  }
  return solve_linear(sys, rhs);
}

}  // namespace hopfkit
