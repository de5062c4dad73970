#include "hopfkit/frobenius.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hopfkit {

namespace {

void axpy_matrix(Matrix& acc, const Rat& c, const Matrix& m) {
  for (std::size_t i = 0; i < m.a.size(); ++i)
    if (!rat_is_zero(m.a[i])) acc.a[i] += c * m.a[i];
}

// t_H(b_u · ι(Λ_K)) for every u — the kernel of the expectation formula.
Vec expectation_weights(const HopfPair& p, const IntegralData& ints) {
  const std::size_t d = p.big.dim();
  Matrix rw = p.big.alg.right_mult(p.pair.embed_vec(ints.lambda_small));
  Vec w(d, Rat(0));
  for (std::size_t u = 0; u < d; ++u) w[u] = vec_dot(ints.t_big, rw.col(u));
  return w;
}

}  // namespace

FrobeniusSystem build_frobenius_system(const HopfPair& p, const IntegralData& ints) {
  const std::size_t d = p.big.dim(), k = p.small.dim();
  FrobeniusSystem fs;
  fs.pair = p.pair;
  fs.index = ints.index;

  // E(b_j) = Σ Δ(b_j)-terms  t_H(b_u ι(Λ_K)) b_v, first in H coordinates
  Vec w = expectation_weights(p, ints);
  Matrix e_in_h(d, d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t e = 0; e < d * d; ++e) {
      const Rat& c = p.big.comult.at(e, j);
      if (!rat_is_zero(c) && !rat_is_zero(w[e / d])) e_in_h.at(e % d, j) += c * w[e / d];
    }
  std::optional<Matrix> ek = solve_linear_many(p.pair.embed, e_in_h);
  if (!ek) throw std::logic_error("frobenius: expectation image leaves ι(K)");
  fs.expectation = std::move(*ek);

  // dual tensor S(Λ₍₂₎)⊗Λ₍₁₎
  Vec dl = p.big.comult.apply(ints.lambda_rel);
  fs.dual_tensor = Vec(d * d, Rat(0));
  for (std::size_t e = 0; e < d * d; ++e) {
    if (rat_is_zero(dl[e])) continue;
    Vec sv = p.big.antipode.col(e % d);
    for (std::size_t x = 0; x < d; ++x)
      if (!rat_is_zero(sv[x])) fs.dual_tensor[x * d + e / d] += dl[e] * sv[x];
  }

  // K-bilinearity of E over algebra generators of K
  std::vector<Vec> gens = algebra_generators(p.small.alg);
  for (const Vec& g : gens) {
    Vec gh = p.pair.embed_vec(g);
    if (!(fs.expectation.mul(p.big.alg.left_mult(gh)) ==
          p.small.alg.left_mult(g).mul(fs.expectation)))
      throw std::logic_error("frobenius: E is not left K-linear");
    if (!(fs.expectation.mul(p.big.alg.right_mult(gh)) ==
          p.small.alg.right_mult(g).mul(fs.expectation)))
      throw std::logic_error("frobenius: E is not right K-linear");
  }

  // μ(dual_tensor) = index·1
  Vec mu(d, Rat(0));
  for (std::size_t e = 0; e < d * d; ++e)
    if (!rat_is_zero(fs.dual_tensor[e])) vec_axpy(mu, fs.dual_tensor[e], p.big.alg.basis_mul(e / d, e % d));
  if (mu != vec_scale(fs.index, p.big.alg.unit))
    throw std::logic_error("frobenius: μ(dual tensor) ≠ index·1");

  AuditReport rep = verify_frobenius_identities(fs);
  if (!rep.ok())
    throw std::logic_error("frobenius: identity failure: " + rep.first_failure());
  return fs;
}

AuditReport verify_frobenius_identities(const FrobeniusSystem& fs) {
  const FinAlgebra& a = fs.pair.big;
  const std::size_t d = a.dim;
  AuditReport rep;
  bool pass_l = true, pass_r = true;
  std::string wit_l, wit_r;
  for (std::size_t j = 0; j < d && (pass_l || pass_r); ++j) {
    Vec acc_l(d, Rat(0)), acc_r(d, Rat(0));
    for (std::size_t e = 0; e < d * d; ++e) {
      const Rat& t = fs.dual_tensor[e];
      if (rat_is_zero(t)) continue;
      const std::size_t x = e / d, y = e % d;
      // x_i · ι(E(y_i a))
      Vec eya = fs.pair.embed_vec(fs.expectation.apply(a.basis_mul(y, j)));
      vec_axpy(acc_l, t, a.mul(unit_vec(d, x), eya));
      // ι(E(a x_i)) · y_i
      Vec eax = fs.pair.embed_vec(fs.expectation.apply(a.basis_mul(j, x)));
      vec_axpy(acc_r, t, a.mul(eax, unit_vec(d, y)));
    }
    if (pass_l && acc_l != unit_vec(d, j)) {
      pass_l = false;
      wit_l = "basis " + std::to_string(j);
    }
    if (pass_r && acc_r != unit_vec(d, j)) {
      pass_r = false;
      wit_r = "basis " + std::to_string(j);
    }
  }
  rep.add("left_identity", pass_l, wit_l);
  rep.add("right_identity", pass_r, wit_r);
  return rep;
}

std::pair<std::vector<Vec>, std::vector<Vec>> dual_bases_lists(const FrobeniusSystem& fs) {
  const std::size_t d = fs.pair.big.dim;
  Matrix m(d, d);
  for (std::size_t e = 0; e < d * d; ++e) m.a[e] = fs.dual_tensor[e];
  Rref rr = rref(m);
  std::vector<Vec> xs, ys;
  for (std::size_t r = 0; r < rr.rank(); ++r) {
    xs.push_back(m.col(rr.pivots[r]));
    ys.push_back(rr.m.row(r));
  }
  return {std::move(xs), std::move(ys)};
}

MarkovAudit markov_audit(const HopfPair& p, const IntegralData& ints, const FrobeniusSystem& fs) {
  const FinAlgebra& a = p.big.alg;
  const std::size_t d = a.dim;
  MarkovAudit out;
  out.index = fs.index;
  AuditReport& rep = out.report;

  rep.add("expectation_unital", fs.expectation.apply(a.unit) == p.small.alg.unit);

  Vec mu(d, Rat(0)), mu_flip(d, Rat(0));
  for (std::size_t e = 0; e < d * d; ++e) {
    const Rat& t = fs.dual_tensor[e];
    if (rat_is_zero(t)) continue;
    vec_axpy(mu, t, a.basis_mul(e / d, e % d));
    vec_axpy(mu_flip, t, a.basis_mul(e % d, e / d));
  }
  Vec target = vec_scale(fs.index, a.unit);
  rep.add("dual_bases_product", mu == target);
  rep.add("dual_bases_product_flipped", mu_flip == target);

  {
    bool free_ok = true;
    std::string wit;
    try {
      free_module_basis(fs.pair);
    } catch (const std::logic_error& ex) {
      free_ok = false;
      wit = ex.what();
    }
    rep.add("free_module", free_ok, wit);
  }

  Subspace r = centralizer(fs.pair);
  FinAlgebra ralg = subalgebra_on_basis(a, r.basis, "C_H(K)");
  {
    bool semi = is_semisimple(ralg);
    bool strong = semi && separability_idempotent(ralg, true).has_value();
    std::string wit;
    if (!semi)
      wit = "centralizer is not semisimple";
    else if (!strong)
      wit = separability_idempotent(ralg).has_value()
                ? "plain separability only: symmetric idempotent system inconsistent"
                : "no separability idempotent";
    rep.add("centralizer_strongly_separable", strong, wit);
  }

  {
    bool pass = true;
    std::string wit;
    for (std::size_t u = 0; u < r.dim() && pass; ++u)
      for (std::size_t j = 0; j < d && pass; ++j)
        if (fs.expectation.apply(a.mul(r.basis[u], unit_vec(d, j))) !=
            fs.expectation.apply(a.mul(unit_vec(d, j), r.basis[u]))) {
          pass = false;
          wit = "centralizer basis " + std::to_string(u) + ", basis " + std::to_string(j);
        }
    rep.add("expectation_commutes_centralizer", pass, wit);
  }

  {
    bool pass = true;
    std::string wit;
    for (std::size_t j = 0; j < d && pass; ++j)
      if (vec_dot(ints.t_small, fs.expectation.col(j)) != ints.t_big[j]) {
        pass = false;
        wit = "basis " + std::to_string(j);
      }
    rep.add("trace_factors_through_expectation", pass, wit);
  }

  {
    Matrix gram(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) gram.at(i, j) = vec_dot(ints.t_big, a.basis_mul(i, j));
    bool pass = gram == gram.transpose() && rank(gram) == d &&
                vec_dot(ints.t_big, a.unit) == 1;
    rep.add("trace_nondegenerate", pass);
  }

  {
    Matrix gram(r.dim(), r.dim());
    for (std::size_t i = 0; i < r.dim(); ++i)
      for (std::size_t j = 0; j < r.dim(); ++j)
        gram.at(i, j) = vec_dot(ints.t_big, a.mul(r.basis[i], r.basis[j]));
    rep.add("trace_nondegenerate_on_centralizer", rank(gram) == r.dim());
  }

  rep.add("centralizer_is_adjoint_fixed_space", subspace_equal(r, adjoint_fixed_space(p)));
  return out;
}

FinAlgebra smash_product_hk(const HopfPair& p) {
  const std::size_t d = p.big.dim(), k = p.small.dim(), n = d * k;
  const Matrix& cm = p.small.comult;
  FinAlgebra s(p.big.alg.name + "#" + p.small.alg.name, n);
  s.unit = kron_vec(p.big.alg.unit, p.small.alg.unit);

  // ι(S(x-leg)) columns, reused across pairs
  std::vector<Vec> s_embed(k);
  for (std::size_t q = 0; q < k; ++q) s_embed[q] = p.pair.embed_vec(p.small.antipode.col(q));

  for (std::size_t x = 0; x < k; ++x) {
    // Δ²(x) = Σ coef  b_p1 ⊗ b_q1 ⊗ b_v3
    for (std::size_t e1 = 0; e1 < k * k; ++e1) {
      const Rat& c1 = cm.at(e1, x);
      if (rat_is_zero(c1)) continue;
      const std::size_t mid = e1 / k, v3 = e1 % k;
      for (std::size_t e2 = 0; e2 < k * k; ++e2) {
        const Rat& c2 = cm.at(e2, mid);
        if (rat_is_zero(c2)) continue;
        const std::size_t p1 = e2 / k, q1 = e2 % k;
        const Rat coef = c1 * c2;
        for (std::size_t i = 0; i < d; ++i) {
          Vec m1 = p.big.alg.mul(unit_vec(d, i), p.pair.embed.col(p1));
          for (std::size_t j = 0; j < d; ++j) {
            Vec m3 = p.big.alg.mul(p.big.alg.mul(m1, unit_vec(d, j)), s_embed[q1]);
            for (std::size_t y = 0; y < k; ++y) {
              Vec kk = p.small.alg.basis_mul(v3, y);
              for (std::size_t h = 0; h < d; ++h) {
                if (rat_is_zero(m3[h])) continue;
                for (std::size_t z = 0; z < k; ++z)
                  if (!rat_is_zero(kk[z]))
                    s.c(i * k + x, j * k + y, h * k + z) += coef * m3[h] * kk[z];
              }
            }
          }
        }
      }
    }
  }
  return s;
}

SmashUntwist untwist_smash(const HopfPair& p) {
  const std::size_t d = p.big.dim(), k = p.small.dim(), n = d * k;
  SmashUntwist out;
  out.forward = Matrix(n, n);
  out.inverse = Matrix(n, n);
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t e = 0; e < k * k; ++e) {
      const Rat& c = p.small.comult.at(e, x);
      if (rat_is_zero(c)) continue;
      const std::size_t u = e / k, v = e % k;
      Vec su = p.pair.embed_vec(p.small.antipode.col(u));
      for (std::size_t i = 0; i < d; ++i) {
        Vec mf = p.big.alg.mul(unit_vec(d, i), p.pair.embed.col(u));
        Vec mi = p.big.alg.mul(unit_vec(d, i), su);
        for (std::size_t h = 0; h < d; ++h) {
          if (!rat_is_zero(mf[h])) out.forward.at(h * k + v, i * k + x) += c * mf[h];
          if (!rat_is_zero(mi[h])) out.inverse.at(h * k + v, i * k + x) += c * mi[h];
        }
      }
    }
  if (!out.forward.mul(out.inverse).is_identity() || !out.inverse.mul(out.forward).is_identity())
    throw std::logic_error("untwist_smash: stated inverse is not an inverse");

  FinAlgebra smash = smash_product_hk(p);
  FinAlgebra tensor = tensor_product_algebra(p.big.alg, p.small.alg);
  if (out.forward.apply(smash.unit) != tensor.unit)
    throw std::logic_error("untwist_smash: map is not unital");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (tensor.mul(out.forward.col(a), out.forward.col(b)) !=
          out.forward.apply(smash.basis_mul(a, b)))
        throw std::logic_error("untwist_smash: not multiplicative at pair (" +
                               std::to_string(a) + "," + std::to_string(b) + ")");
  return out;
}

MoritaPairings morita_pairings(const HopfPair& p, const IntegralData& ints) {
  const std::size_t d = p.big.dim(), k = p.small.dim();
  const FinAlgebra& a = p.big.alg;
  MoritaPairings out;

  std::vector<Matrix> lacts = left_adjoint_action(p);
  Matrix lambda_act(d, d);
  for (std::size_t u = 0; u < k; ++u) axpy_matrix(lambda_act, ints.lambda_small[u], lacts[u]);

  out.paren = Matrix(d, d * d);
  out.bracket = Matrix(d * k, d * d);
  Vec dl = p.small.comult.apply(ints.lambda_small);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      out.paren.set_col(i * d + j, lambda_act.apply(a.basis_mul(i, j)));
      for (std::size_t e = 0; e < k * k; ++e) {
        if (rat_is_zero(dl[e])) continue;
        Vec t = a.mul(unit_vec(d, i), lacts[e / k].col(j));
        for (std::size_t h = 0; h < d; ++h)
          if (!rat_is_zero(t[h])) out.bracket.at(h * k + e % k, i * d + j) += dl[e] * t[h];
      }
    }
  out.paren_of_units = lambda_act.apply(a.unit);

  Subspace r = centralizer(p.pair);
  bool in_r = true;
  for (std::size_t c = 0; c < d * d && in_r; ++c) in_r = r.contains(out.paren.col(c));
  out.paren_onto_r = in_r && rank(out.paren) == r.dim();
  return out;
}

Matrix ebar(const HopfPair& p, const IntegralData& ints, const FrobeniusSystem& fs) {
  const std::size_t d = p.big.dim();
  Matrix composed = p.big.antipode.mul(p.pair.embed.mul(fs.expectation)).mul(p.big.antipode);

  // Ē(b_j) = Σ Δ(b_j)-terms  b_u · t_H(ι(Λ_K) b_v)
  Vec lk = p.pair.embed_vec(ints.lambda_small);
  Matrix lw = p.big.alg.left_mult(lk);
  Vec w(d, Rat(0));
  for (std::size_t v = 0; v < d; ++v) w[v] = vec_dot(ints.t_big, lw.col(v));
  Matrix direct(d, d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t e = 0; e < d * d; ++e) {
      const Rat& c = p.big.comult.at(e, j);
      if (!rat_is_zero(c) && !rat_is_zero(w[e % d])) direct.at(e / d, j) += c * w[e % d];
    }

  if (!(composed == direct)) {
    std::string why;
    if (p.big.antipode.apply(lk) != lk) why = "S(Λ_K) ≠ Λ_K";
    if (p.big.antipode.transpose().apply(ints.t_big) != ints.t_big)
      why += why.empty() ? "t_H∘S ≠ t_H" : " and t_H∘S ≠ t_H";
    if (why.empty()) why = "unknown cause";
    throw std::logic_error("ebar: S∘E∘S and the direct formula disagree (" + why + ")");
  }

  std::vector<Vec> cols;
  for (std::size_t u = 0; u < p.small.dim(); ++u) cols.push_back(p.pair.embed.col(u));
  Subspace iota_k = subspace_span(d, cols);
  for (std::size_t j = 0; j < d; ++j)
    if (!iota_k.contains(composed.col(j)))
      throw std::logic_error("ebar: image leaves ι(K) at basis " + std::to_string(j));
  return composed;
}

}  // namespace hopfkit
