#include "hopfkit/hopf.hpp"

#include <cstddef>
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

// Matrix of a ↦ v₍₁₎ a S(v₍₂₎) (left = true) or a ↦ S(v₍₁₎) a v₍₂₎,
// assembled from the Δ-support of v.
Matrix adjoint_matrix(const HopfStructure& h, const Vec& v, bool left) {
  const std::size_t d = h.dim();
  Matrix acc(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    if (rat_is_zero(v[j])) continue;
    for (std::size_t u = 0; u < d; ++u)
      for (std::size_t w = 0; w < d; ++w) {
        const Rat& c = h.comult.at(u * d + w, j);
        if (rat_is_zero(c)) continue;
        Matrix lm = h.alg.left_mult(left ? unit_vec(d, u) : h.antipode.col(u));
        Matrix rm = h.alg.right_mult(left ? h.antipode.col(w) : unit_vec(d, w));
        axpy_matrix(acc, v[j] * c, lm.mul(rm));
      }
  }
  return acc;
}

// The unique (up to scale) two-sided integral: x·Λ = ε(x)·Λ = Λ·x for all x,
// imposed per basis element.  Unnormalized.
Vec two_sided_integral(const HopfStructure& h, const char* label) {
  const std::size_t d = h.dim();
  Matrix sys(2 * d * d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) {
        sys.at(i * d + r, c) = h.alg.c(i, c, r);
        sys.at(d * d + i * d + r, c) = h.alg.c(c, i, r);
        if (r == c) {
          sys.at(i * d + r, c) -= h.counit[i];
          sys.at(d * d + i * d + r, c) -= h.counit[i];
        }
      }
  }
  std::vector<Vec> ker = nullspace(sys);
  if (ker.size() != 1)
    throw std::invalid_argument(std::string(label) + ": integral space has dimension " +
                                std::to_string(ker.size()) + ", expected 1");
  return ker[0];
}

Vec iota_tensor_iota(const Matrix& embed, const Vec& small_tensor, std::size_t k) {
  const std::size_t D = embed.rows;
  Vec out(D * D, Rat(0));
  for (std::size_t u = 0; u < k; ++u)
    for (std::size_t w = 0; w < k; ++w) {
      const Rat& c = small_tensor[u * k + w];
      if (rat_is_zero(c)) continue;
      for (std::size_t x = 0; x < D; ++x) {
        if (rat_is_zero(embed.at(x, u))) continue;
        for (std::size_t y = 0; y < D; ++y) {
          if (rat_is_zero(embed.at(y, w))) continue;
          out[x * D + y] += c * embed.at(x, u) * embed.at(y, w);
        }
      }
    }
  return out;
}

}  // namespace

Vec tensor_alg_mul(const FinAlgebra& a, const Vec& s, const Vec& t) {
  const std::size_t d = a.dim;
  Vec out(d * d, Rat(0));
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = 0; q < d; ++q) {
      const Rat& sc = s[p * d + q];
      if (rat_is_zero(sc)) continue;
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t w = 0; w < d; ++w) {
          const Rat& tc = t[r * d + w];
          if (rat_is_zero(tc)) continue;
          Rat coef = sc * tc;
          for (std::size_t u = 0; u < d; ++u) {
            const Rat& c1 = a.c(p, r, u);
            if (rat_is_zero(c1)) continue;
            for (std::size_t v = 0; v < d; ++v) {
              const Rat& c2 = a.c(q, w, v);
              if (rat_is_zero(c2)) continue;
              out[u * d + v] += coef * c1 * c2;
            }
          }
        }
    }
  return out;
}

AuditReport audit_hopf(const HopfStructure& h) {
  AuditReport rep;
  const std::size_t d = h.dim();

  bool shapes = d > 0 && h.alg.unit.size() == d && h.alg.sc.size() == d * d * d &&
                h.comult.rows == d * d && h.comult.cols == d && h.counit.size() == d &&
                h.antipode.rows == d && h.antipode.cols == d;
  rep.add("shapes", shapes, shapes ? "" : "coalgebra data does not match dim");
  if (!shapes) return rep;  // nothing below is safe to index

  AlgebraReport ar = validate_algebra(h.alg);
  rep.add("algebra_valid", ar.ok(), ar.ok() ? "" : ar.failures.front());

  {
    bool pass = true;
    std::string witness;
    for (std::size_t j = 0; j < d && pass; ++j) {
      Vec D = h.comult.col(j);
      Vec l3(d * d * d, Rat(0)), r3(d * d * d, Rat(0));
      for (std::size_t e = 0; e < d * d; ++e) {
        if (rat_is_zero(D[e])) continue;
        std::size_t u = e / d, w = e % d;
        for (std::size_t f = 0; f < d * d; ++f) {
          const Rat& cu = h.comult.at(f, u);
          if (!rat_is_zero(cu)) l3[f * d + w] += D[e] * cu;
          const Rat& cw = h.comult.at(f, w);
          if (!rat_is_zero(cw)) r3[u * d * d + f] += D[e] * cw;
        }
      }
      if (l3 != r3) {
        pass = false;
        witness = "basis " + std::to_string(j);
      }
    }
    rep.add("coassociative", pass, witness);
  }

  {
    bool pass = true;
    std::string witness;
    for (std::size_t j = 0; j < d && pass; ++j) {
      Vec D = h.comult.col(j);
      Vec eps1(d, Rat(0)), eps2(d, Rat(0));  // (ε⊗id)Δ and (id⊗ε)Δ
      for (std::size_t e = 0; e < d * d; ++e) {
        if (rat_is_zero(D[e])) continue;
        eps1[e % d] += D[e] * h.counit[e / d];
        eps2[e / d] += D[e] * h.counit[e % d];
      }
      Vec bj = unit_vec(d, j);
      if (eps1 != bj || eps2 != bj) {
        pass = false;
        witness = "basis " + std::to_string(j);
      }
    }
    rep.add("counit_law", pass, witness);
  }

  {
    bool pass = true;
    std::string witness;
    for (std::size_t i = 0; i < d && pass; ++i)
      for (std::size_t j = 0; j < d && pass; ++j) {
        Vec lhs = tensor_alg_mul(h.alg, h.comult.col(i), h.comult.col(j));
        Vec rhs = h.comult.apply(h.alg.basis_mul(i, j));
        if (lhs != rhs) {
          pass = false;
          witness = "pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
        }
      }
    rep.add("comult_multiplicative", pass, witness);
  }

  rep.add("comult_unital", h.comult.apply(h.alg.unit) == kron_vec(h.alg.unit, h.alg.unit));

  {
    bool pass = true;
    std::string witness;
    for (std::size_t i = 0; i < d && pass; ++i)
      for (std::size_t j = 0; j < d && pass; ++j)
        if (vec_dot(h.counit, h.alg.basis_mul(i, j)) != h.counit[i] * h.counit[j]) {
          pass = false;
          witness = "pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
        }
    rep.add("counit_multiplicative", pass, witness);
  }

  rep.add("counit_unital", h.counit_of(h.alg.unit) == 1);

  {
    bool pass_l = true, pass_r = true;
    std::string wit_l, wit_r;
    for (std::size_t j = 0; j < d && (pass_l || pass_r); ++j) {
      Vec D = h.comult.col(j);
      Vec accl(d, Rat(0)), accr(d, Rat(0));
      for (std::size_t e = 0; e < d * d; ++e) {
        if (rat_is_zero(D[e])) continue;
        std::size_t u = e / d, w = e % d;
        vec_axpy(accl, D[e], h.alg.mul(h.antipode.col(u), unit_vec(d, w)));
        vec_axpy(accr, D[e], h.alg.mul(unit_vec(d, u), h.antipode.col(w)));
      }
      Vec target = vec_scale(h.counit[j], h.alg.unit);
      if (pass_l && accl != target) {
        pass_l = false;
        wit_l = "basis " + std::to_string(j);
      }
      if (pass_r && accr != target) {
        pass_r = false;
        wit_r = "basis " + std::to_string(j);
      }
    }
    rep.add("antipode_left", pass_l, wit_l);
    rep.add("antipode_right", pass_r, wit_r);
  }

  rep.add("antipode_involutive", h.antipode.mul(h.antipode).is_identity());
  return rep;
}

bool audit_hopf_ok(const AuditReport& r) {
  for (const AuditClause& c : r.clauses)
    if (!c.pass && c.name != "antipode_involutive") return false;
  return true;
}

HopfStructure group_hopf(const GroupTable& g) {
  HopfStructure h;
  h.alg = build_group_algebra(g);
  const std::size_t n = g.order;
  h.comult = Matrix(n * n, n);
  h.counit = Vec(n, Rat(1));
  h.antipode = Matrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    h.comult.at(j * n + j, j) = 1;
    h.antipode.at(g.inv(j), j) = 1;
  }
  return h;
}

HopfStructure dual_hopf(const HopfStructure& h) {
  const std::size_t d = h.dim();
  HopfStructure out;
  out.alg = FinAlgebra(h.alg.name + "*", d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) out.alg.c(i, j, k) = h.comult.at(i * d + j, k);
  out.alg.unit = h.counit;
  out.comult = Matrix(d * d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) out.comult.at(i * d + j, k) = h.alg.c(i, j, k);
  out.counit = h.alg.unit;
  out.antipode = h.antipode.transpose();
  return out;
}

HopfStructure sweedler_hopf() {
  // basis order 1, g, x, gx
  HopfStructure h;
  h.alg = FinAlgebra("H4", 4);
  h.alg.unit[0] = 1;
  auto set = [&](std::size_t i, std::size_t j, std::size_t k, int v) { h.alg.c(i, j, k) = v; };
  for (std::size_t i = 0; i < 4; ++i) {
    set(0, i, i, 1);
    if (i != 0) set(i, 0, i, 1);
  }
  set(1, 1, 0, 1);   // g·g = 1
  set(1, 2, 3, 1);   // g·x = gx
  set(2, 1, 3, -1);  // x·g = -gx
  set(1, 3, 2, 1);   // g·gx = x
  set(3, 1, 2, -1);  // gx·g = -x
  // x² = 0 kills every product of two odd elements
  h.comult = Matrix(16, 4);
  h.comult.at(0 * 4 + 0, 0) = 1;  // Δ1 = 1⊗1
  h.comult.at(1 * 4 + 1, 1) = 1;  // Δg = g⊗g
  h.comult.at(2 * 4 + 0, 2) = 1;  // Δx = x⊗1 + g⊗x
  h.comult.at(1 * 4 + 2, 2) = 1;
  h.comult.at(3 * 4 + 1, 3) = 1;  // Δ(gx) = gx⊗g + 1⊗gx
  h.comult.at(0 * 4 + 3, 3) = 1;
  h.counit = Vec(4, Rat(0));
  h.counit[0] = 1;
  h.counit[1] = 1;
  h.antipode = Matrix(4, 4);
  h.antipode.at(0, 0) = 1;
  h.antipode.at(1, 1) = 1;   // S(g) = g
  h.antipode.at(3, 2) = -1;  // S(x) = -gx
  h.antipode.at(2, 3) = 1;   // S(gx) = x
  return h;
}

HopfPair make_hopf_pair(HopfStructure big, HopfStructure small, Matrix embed) {
  ExtensionPair pair = make_extension_pair(big.alg, small.alg, std::move(embed));
  const std::size_t k = small.dim();
  for (std::size_t j = 0; j < k; ++j) {
    Vec lhs = big.comult.apply(pair.embed.col(j));
    Vec rhs = iota_tensor_iota(pair.embed, small.comult.col(j), k);
    if (lhs != rhs)
      throw std::invalid_argument("hopf embedding does not intertwine comult at small basis " +
                                  std::to_string(j));
    if (vec_dot(big.counit, pair.embed.col(j)) != small.counit[j])
      throw std::invalid_argument("hopf embedding does not intertwine counit at small basis " +
                                  std::to_string(j));
  }
  if (!(big.antipode.mul(pair.embed) == pair.embed.mul(small.antipode)))
    throw std::invalid_argument("hopf embedding does not intertwine antipode");
  return {std::move(big), std::move(small), std::move(pair)};
}

HopfPair group_hopf_pair(const GroupTable& g, const std::vector<std::size_t>& sub) {
  HopfStructure big = group_hopf(g);
  HopfStructure small = group_hopf(subgroup_table(g, sub));
  Matrix embed(big.dim(), small.dim());
  for (std::size_t j = 0; j < sub.size(); ++j) embed.at(sub[j], j) = 1;
  return make_hopf_pair(std::move(big), std::move(small), std::move(embed));
}

IntegralData find_integrals(const HopfPair& p) {
  IntegralData out;
  const std::size_t dh = p.big.dim(), dk = p.small.dim();

  auto scaled_to_counit = [](const HopfStructure& h, Vec lam, const char* label) {
    Rat e = h.counit_of(lam);
    if (rat_is_zero(e))
      throw std::invalid_argument(std::string(label) + ": counit of integral is zero");
    return vec_scale(Rat(static_cast<unsigned long>(h.dim())) / e, lam);
  };
  auto scaled_to_unit = [](const HopfStructure& h, Vec t, const char* label) {
    Rat v = vec_dot(t, h.alg.unit);
    if (rat_is_zero(v))
      throw std::invalid_argument(std::string(label) + ": integral vanishes on 1");
    return vec_scale(Rat(1) / v, t);
  };

  out.lambda_big = scaled_to_counit(p.big, two_sided_integral(p.big, "H"), "H");
  out.t_big = scaled_to_unit(p.big, two_sided_integral(dual_hopf(p.big), "H*"), "H*");
  out.lambda_small = scaled_to_counit(p.small, two_sided_integral(p.small, "K"), "K");
  out.t_small = scaled_to_unit(p.small, two_sided_integral(dual_hopf(p.small), "K*"), "K*");

  if (vec_dot(out.t_big, out.lambda_big) != 1)
    throw std::logic_error("find_integrals: t_H(Λ_H) ≠ 1 under the paper normalizations");

  std::optional<Vec> rel =
      solve_linear(p.big.alg.left_mult(p.pair.embed_vec(out.lambda_small)), out.lambda_big);
  if (!rel) throw std::logic_error("find_integrals: Λ_H does not factor through ι(Λ_K)");
  out.lambda_rel = std::move(*rel);
  out.index = p.big.counit_of(out.lambda_rel);
  if (out.index * Rat(static_cast<unsigned long>(dk)) != Rat(static_cast<unsigned long>(dh)))
    throw std::logic_error("find_integrals: ε(Λ) ≠ dim H / dim K");
  return out;
}

std::vector<Matrix> left_adjoint_action(const HopfPair& p) {
  std::vector<Matrix> acts;
  acts.reserve(p.small.dim());
  for (std::size_t k = 0; k < p.small.dim(); ++k)
    acts.push_back(adjoint_matrix(p.big, p.pair.embed.col(k), true));
  return acts;
}

std::vector<Matrix> right_adjoint_action(const HopfPair& p) {
  const std::size_t d = p.big.dim();
  std::vector<Matrix> acts;
  acts.reserve(d);
  for (std::size_t h = 0; h < d; ++h)
    acts.push_back(adjoint_matrix(p.big, unit_vec(d, h), false));
  return acts;
}

Subspace adjoint_fixed_space(const HopfPair& p) {
  const std::size_t d = p.big.dim(), k = p.small.dim();
  std::vector<Matrix> acts = left_adjoint_action(p);
  Matrix sys(k * d, d);
  for (std::size_t i = 0; i < k; ++i) {
    Rat eps = vec_dot(p.big.counit, p.pair.embed.col(i));
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) {
        sys.at(i * d + r, c) = acts[i].at(r, c);
        if (r == c) sys.at(i * d + r, c) -= eps;
      }
  }
  return Subspace::from_vectors(d, nullspace(sys));
}

Subspace k_plus(const HopfPair& p) {
  const std::size_t d = p.big.dim();
  std::vector<Vec> cols;
  for (std::size_t j = 0; j < p.small.dim(); ++j) cols.push_back(p.pair.embed.col(j));
  Subspace iota_k = subspace_span(d, cols);
  Matrix eps_row(1, d);
  eps_row.set_row(0, p.big.counit);
  Subspace ker_eps = Subspace::from_vectors(d, nullspace(eps_row));
  return subspace_intersect(iota_k, ker_eps);
}

namespace {

Subspace one_sided_ideal(const HopfPair& p, bool left_factor_runs_over_h) {
  const std::size_t d = p.big.dim();
  Subspace kp = k_plus(p);
  std::vector<Vec> gens;
  for (const Vec& v : kp.basis)
    for (std::size_t i = 0; i < d; ++i)
      gens.push_back(left_factor_runs_over_h ? p.big.alg.mul(unit_vec(d, i), v)
                                             : p.big.alg.mul(v, unit_vec(d, i)));
  return subspace_span(d, gens);
}

}  // namespace

Subspace ideal_hk(const HopfPair& p) { return one_sided_ideal(p, true); }
Subspace ideal_kh(const HopfPair& p) { return one_sided_ideal(p, false); }

NormalityVerdict check_normality(const HopfPair& p, const IntegralData& ints) {
  NormalityVerdict v;
  const std::size_t d = p.big.dim();

  std::vector<Vec> cols;
  for (std::size_t j = 0; j < p.small.dim(); ++j) cols.push_back(p.pair.embed.col(j));
  Subspace iota_k = subspace_span(d, cols);
  v.adjoint_right = true;
  for (const Matrix& act : right_adjoint_action(p)) {
    for (const Vec& c : cols)
      if (!iota_k.contains(act.apply(c))) {
        v.adjoint_right = false;
        break;
      }
    if (!v.adjoint_right) break;
  }

  v.ideal_eq = subspace_equal(ideal_hk(p), ideal_kh(p));

  Vec lk = p.pair.embed_vec(ints.lambda_small);
  v.central_integral = p.big.alg.left_mult(lk) == p.big.alg.right_mult(lk);
  return v;
}

SchneiderMaps schneider_maps(const HopfPair& p, const TensorSquare& t) {
  const std::size_t d = p.big.dim();
  SchneiderMaps out;

  // Both maps are defined on A⊗A and kill the ⊗_K relations (move k across
  // the tensor sign, split Δ(kb), and reduce k₍₂₎ to ε(k₍₂₎) mod K⁺H), so
  // composing with the section computes the induced map on H⊗_K H.
  QuotientSpace qr = quotient_by_span(d, ideal_kh(p).basis);   // H/K⁺H
  QuotientSpace ql = quotient_by_span(d, ideal_hk(p).basis);   // H/HK⁺
  out.dim_h_mod_kh = qr.dim;
  out.dim_h_mod_hk = ql.dim;

  out.right_map = Matrix(d * qr.dim, t.dim);
  out.left_map = Matrix(ql.dim * d, t.dim);
  for (std::size_t cls = 0; cls < t.dim; ++cls) {
    std::size_t f = t.free_cols[cls];
    std::size_t a = f / d, b = f % d;  // representative b_a ⊗ b_b
    for (std::size_t e = 0; e < d * d; ++e) {
      std::size_t u = e / d, w = e % d;
      // right: a⊗b ↦ a·b₍₁₎ ⊗ class(b₍₂₎)
      const Rat& cb = p.big.comult.at(e, b);
      if (!rat_is_zero(cb)) {
        Vec m1 = p.big.alg.basis_mul(a, u);
        Vec c2 = qr.project.col(w);
        for (std::size_t x = 0; x < d; ++x) {
          if (rat_is_zero(m1[x])) continue;
          for (std::size_t y = 0; y < qr.dim; ++y)
            if (!rat_is_zero(c2[y])) out.right_map.at(x * qr.dim + y, cls) += cb * m1[x] * c2[y];
        }
      }
      // left: a⊗b ↦ class(a₍₁₎) ⊗ a₍₂₎·b
      const Rat& ca = p.big.comult.at(e, a);
      if (!rat_is_zero(ca)) {
        Vec c1 = ql.project.col(u);
        Vec m2 = p.big.alg.basis_mul(w, b);
        for (std::size_t x = 0; x < ql.dim; ++x) {
          if (rat_is_zero(c1[x])) continue;
          for (std::size_t y = 0; y < d; ++y)
            if (!rat_is_zero(m2[y])) out.left_map.at(x * d + y, cls) += ca * c1[x] * m2[y];
        }
      }
    }
  }
  out.right_bijective =
      out.right_map.rows == out.right_map.cols && rank(out.right_map) == out.right_map.rows;
  out.left_bijective =
      out.left_map.rows == out.left_map.cols && rank(out.left_map) == out.left_map.rows;
  return out;
}

HopfStructure hopf_quotient(const HopfPair& p, const IntegralData& ints) {
  (void)ints;
  const std::size_t d = p.big.dim();
  QuotientSpace q = quotient_by_span(d, ideal_hk(p).basis);
  const std::size_t n = q.dim;

  HopfStructure out;
  out.alg = FinAlgebra(p.big.alg.name + "//" + p.small.alg.name, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec prod = q.project_vec(p.big.alg.mul(q.section.col(i), q.section.col(j)));
      for (std::size_t k = 0; k < n; ++k) out.alg.c(i, j, k) = prod[k];
    }
  out.alg.unit = q.project_vec(p.big.alg.unit);

  out.comult = Matrix(n * n, n);
  out.counit = Vec(n, Rat(0));
  out.antipode = Matrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vec s = q.section.col(j);
    Vec D = p.big.comult.apply(s);
    for (std::size_t e = 0; e < d * d; ++e) {
      if (rat_is_zero(D[e])) continue;
      Vec cu = q.project.col(e / d);
      Vec cw = q.project.col(e % d);
      for (std::size_t x = 0; x < n; ++x) {
        if (rat_is_zero(cu[x])) continue;
        for (std::size_t y = 0; y < n; ++y)
          if (!rat_is_zero(cw[y])) out.comult.at(x * n + y, j) += D[e] * cu[x] * cw[y];
      }
    }
    out.counit[j] = p.big.counit_of(s);
    out.antipode.set_col(j, q.project_vec(p.big.antipode.apply(s)));
  }

  AuditReport rep = audit_hopf(out);
  if (!audit_hopf_ok(rep))
    throw std::logic_error("hopf_quotient: induced structure fails audit: " + rep.first_failure());
  return out;
}

}  // namespace hopfkit
