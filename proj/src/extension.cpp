#include "hopfkit/extension.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace hopfkit {

ExtensionPair make_extension_pair(FinAlgebra big, FinAlgebra small, Matrix embed) {
  if (embed.rows != big.dim || embed.cols != small.dim)
    throw std::invalid_argument("extension: embed shape mismatch");
  if (rank(embed) != small.dim)
    throw std::invalid_argument("extension: embedding is not injective");
  if (embed.apply(small.unit) != big.unit)
    throw std::invalid_argument("extension: embedding does not preserve the unit");
  for (std::size_t i = 0; i < small.dim; ++i)
    for (std::size_t j = 0; j < small.dim; ++j)
      if (big.mul(embed.col(i), embed.col(j)) != embed.apply(small.basis_mul(i, j)))
        throw std::invalid_argument("extension: embedding not multiplicative at basis pair (" +
                                    std::to_string(i) + "," + std::to_string(j) + ")");
  return ExtensionPair{std::move(big), std::move(small), std::move(embed)};
}

ExtensionPair group_algebra_pair(const GroupTable& g, const std::vector<std::size_t>& sub) {
  FinAlgebra big = build_group_algebra(g);
  FinAlgebra small = build_group_algebra(subgroup_table(g, sub));
  Matrix embed(big.dim, small.dim);
  for (std::size_t j = 0; j < sub.size(); ++j) embed.at(sub[j], j) = 1;
  return make_extension_pair(std::move(big), std::move(small), std::move(embed));
}

ExtensionPair scalar_pair(FinAlgebra a) {
  FinAlgebra k("Q", 1);
  k.unit[0] = 1;
  k.c(0, 0, 0) = 1;
  Matrix embed = Matrix::from_cols(a.dim, {a.unit});
  return make_extension_pair(std::move(a), std::move(k), std::move(embed));
}

std::vector<Vec> small_generator_images(const ExtensionPair& p) {
  std::vector<Vec> imgs;
  for (const Vec& b : algebra_generators(p.small)) imgs.push_back(p.embed.apply(b));
  return imgs;
}

Subspace centralizer(const ExtensionPair& p) {
  const std::size_t d = p.big.dim;
  std::vector<Vec> gens = small_generator_images(p);
  Matrix sys(gens.size() * d, d);
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    Matrix diff = p.big.left_mult(gens[gi]).sub(p.big.right_mult(gens[gi]));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) sys.at(gi * d + i, j) = diff.at(i, j);
  }
  // No generators (B = scalars) leaves a 0-row system; nullspace is then all of A.
  Subspace r = Subspace::from_vectors(d, nullspace(sys));
  for (const Vec& x : r.basis)
    for (const Vec& y : r.basis)
      if (!r.contains(p.big.mul(x, y)))
        throw std::logic_error("centralizer: span not closed under multiplication");
  return r;
}

FinAlgebra subalgebra_on_basis(const FinAlgebra& a, const std::vector<Vec>& basis,
                               std::string name) {
  const std::size_t n = basis.size();
  FinAlgebra sub(std::move(name), n);
  std::optional<Vec> u = span_membership(basis, a.unit);
  if (!u) throw std::invalid_argument("subalgebra_on_basis: 1 is not in the span");
  sub.unit = *u;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::optional<Vec> c = span_membership(basis, a.mul(basis[i], basis[j]));
      if (!c)
        throw std::invalid_argument("subalgebra_on_basis: product (" + std::to_string(i) + "," +
                                    std::to_string(j) + ") leaves the span");
      for (std::size_t k = 0; k < n; ++k) sub.c(i, j, k) = (*c)[k];
    }
  return sub;
}

std::vector<Vec> free_module_basis(const ExtensionPair& p) {
  const std::size_t d = p.big.dim, k = p.small.dim;
  if (d % k != 0)
    throw std::logic_error("free_module_basis: dim A is not a multiple of dim B");
  std::vector<Vec> picked;        // the a_i
  std::vector<Vec> span_rows;     // all products ι(b_u)·a_i accepted so far
  for (std::size_t j = 0; j < d && span_rows.size() < d; ++j) {
    std::vector<Vec> trial = span_rows;
    for (std::size_t u = 0; u < k; ++u)
      trial.push_back(p.big.mul(p.embed.col(u), unit_vec(d, j)));
    if (rank(Matrix::from_rows(d, trial)) == span_rows.size() + k) {
      picked.push_back(unit_vec(d, j));
      span_rows = std::move(trial);
    }
  }
  if (span_rows.size() != d)
    throw std::logic_error("free_module_basis: greedy search over the basis failed");
  return picked;
}

TensorSquare tensor_square(const ExtensionPair& p) {
  const std::size_t d = p.big.dim, dd = d * d;
  std::vector<Vec> gens = small_generator_images(p);

  std::vector<Vec> rels;
  rels.reserve(gens.size() * dd);
  for (const Vec& b : gens) {
    Matrix rb = p.big.right_mult(b), lb = p.big.left_mult(b);
    for (std::size_t x = 0; x < d; ++x)
      for (std::size_t y = 0; y < d; ++y) {
        Vec rel(dd, Rat(0));
        for (std::size_t u = 0; u < d; ++u)
          if (sgn(rb.at(u, x)) != 0) rel[u * d + y] += rb.at(u, x);  // (x b)⊗y
        for (std::size_t v = 0; v < d; ++v)
          if (sgn(lb.at(v, y)) != 0) rel[x * d + v] -= lb.at(v, y);  // x⊗(b y)
        if (!vec_is_zero(rel)) rels.push_back(std::move(rel));
      }
  }

  QuotientSpace q = quotient_by_span(dd, rels);
  TensorSquare t;
  t.big_dim = d;
  t.ambient = dd;
  t.dim = q.dim;
  t.project = std::move(q.project);
  t.section = std::move(q.section);
  t.free_cols = std::move(q.free_cols);
  return t;
}

Matrix first_leg_left_action(const ExtensionPair& p, const TensorSquare& t, const Vec& x) {
  const std::size_t d = t.big_dim;
  Matrix lx = p.big.left_mult(x);
  Matrix m(t.dim, t.dim);
  for (std::size_t c = 0; c < t.dim; ++c) {
    std::size_t pp = t.free_cols[c] / d, qq = t.free_cols[c] % d;
    Vec amb(t.ambient, Rat(0));
    for (std::size_t u = 0; u < d; ++u)
      if (sgn(lx.at(u, pp)) != 0) amb[u * d + qq] = lx.at(u, pp);
    m.set_col(c, t.project.apply(amb));
  }
  return m;
}

Matrix second_leg_right_action(const ExtensionPair& p, const TensorSquare& t, const Vec& y) {
  const std::size_t d = t.big_dim;
  Matrix ry = p.big.right_mult(y);
  Matrix m(t.dim, t.dim);
  for (std::size_t c = 0; c < t.dim; ++c) {
    std::size_t pp = t.free_cols[c] / d, qq = t.free_cols[c] % d;
    Vec amb(t.ambient, Rat(0));
    for (std::size_t v = 0; v < d; ++v)
      if (sgn(ry.at(v, qq)) != 0) amb[pp * d + v] = ry.at(v, qq);
    m.set_col(c, t.project.apply(amb));
  }
  return m;
}

Subspace b_central_tensors(const ExtensionPair& p, const TensorSquare& t) {
  std::vector<Vec> gens = small_generator_images(p);
  Matrix sys(gens.size() * t.dim, t.dim);
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    Matrix diff = first_leg_left_action(p, t, gens[gi])
                      .sub(second_leg_right_action(p, t, gens[gi]));
    for (std::size_t i = 0; i < t.dim; ++i)
      for (std::size_t j = 0; j < t.dim; ++j) sys.at(gi * t.dim + i, j) = diff.at(i, j);
  }
  return Subspace::from_vectors(t.dim, nullspace(sys));
}

BimoduleHomSpace bimodule_endos(const ExtensionPair& p) {
  const std::size_t d = p.big.dim, dd = d * d;
  std::vector<Vec> gens = small_generator_images(p);
  std::vector<Matrix> constraint;  // commutation partners for the unknown M
  for (const Vec& b : gens) {
    constraint.push_back(p.big.left_mult(b));
    constraint.push_back(p.big.right_mult(b));
  }
  Matrix sys(constraint.size() * dd, dd);
  std::size_t base = 0;
  for (const Matrix& L : constraint) {
    // (M L - L M) = 0; unknown M flattened row-major as m[i*d+k] = M(i,k).
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t k = 0; k < d; ++k)
          if (sgn(L.at(k, j)) != 0) sys.at(base + i * d + j, i * d + k) += L.at(k, j);
        for (std::size_t k = 0; k < d; ++k)
          if (sgn(L.at(i, k)) != 0) sys.at(base + i * d + j, k * d + j) -= L.at(i, k);
      }
    base += dd;
  }
  BimoduleHomSpace h;
  for (const Vec& v : nullspace(sys)) {
    Matrix m(d, d);
    m.a = v;
    h.basis.push_back(std::move(m));
  }
  return h;
}

}  // namespace hopfkit
