#include "hopfkit/weakhopf.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hopfkit {

namespace {

std::string bw(std::size_t j) { return "x = b_" + std::to_string(j); }
std::string bw2(std::size_t i, std::size_t j) {
  return "a = b_" + std::to_string(i) + ", b = b_" + std::to_string(j);
}

// ε(b_i b_j) table
Matrix counit_products(const WeakHopfStructure& w) {
  std::size_t d = w.dim();
  Matrix ep(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) ep.at(i, j) = vec_dot(w.counit, w.alg.basis_mul(i, j));
  return ep;
}

ProjectionData make_projections(const WeakHopfStructure& w, const Matrix& ep) {
  std::size_t d = w.dim();
  Vec u = w.comult.apply(w.alg.unit);
  ProjectionData pd{Matrix(d, d), Matrix(d, d), Matrix(d, d), Matrix(d, d), {}, {}};
  for (std::size_t e = 0; e < u.size(); ++e) {
    if (rat_is_zero(u[e])) continue;
    std::size_t p = e / d, q = e % d;
    for (std::size_t j = 0; j < d; ++j) {
      pd.piL.at(q, j) += u[e] * ep.at(p, j);
      pd.piR.at(p, j) += u[e] * ep.at(j, q);
      pd.piLbar.at(p, j) += u[e] * ep.at(q, j);
      pd.piRbar.at(q, j) += u[e] * ep.at(j, p);
    }
  }
  std::vector<Vec> lcols, rcols;
  for (std::size_t j = 0; j < d; ++j) {
    lcols.push_back(pd.piL.col(j));
    rcols.push_back(pd.piR.col(j));
  }
  pd.WL = subspace_span(d, lcols);
  pd.WR = subspace_span(d, rcols);
  return pd;
}

// product in W⊗W⊗W, sparse in both factors
Vec triple_mul(const FinAlgebra& a, const Vec& s, const Vec& t) {
  std::size_t d = a.dim;
  Vec out(d * d * d, Rat(0));
  for (std::size_t e1 = 0; e1 < s.size(); ++e1) {
    if (rat_is_zero(s[e1])) continue;
    std::size_t i1 = e1 / (d * d), i2 = (e1 / d) % d, i3 = e1 % d;
    for (std::size_t e2 = 0; e2 < t.size(); ++e2) {
      if (rat_is_zero(t[e2])) continue;
      std::size_t j1 = e2 / (d * d), j2 = (e2 / d) % d, j3 = e2 % d;
      Rat c0 = s[e1] * t[e2];
      for (std::size_t k1 = 0; k1 < d; ++k1) {
        const Rat& c1 = a.c(i1, j1, k1);
        if (rat_is_zero(c1)) continue;
        for (std::size_t k2 = 0; k2 < d; ++k2) {
          const Rat& c2 = a.c(i2, j2, k2);
          if (rat_is_zero(c2)) continue;
          Rat c12 = c0 * c1 * c2;
          for (std::size_t k3 = 0; k3 < d; ++k3) {
            const Rat& c3 = a.c(i3, j3, k3);
            if (!rat_is_zero(c3)) out[(k1 * d + k2) * d + k3] += c12 * c3;
          }
        }
      }
    }
  }
  return out;
}

// product in X⊗Y for distinct algebras (index i*dim(Y)+k)
Vec mixed_mul(const FinAlgebra& x, const FinAlgebra& y, const Vec& s, const Vec& t) {
  std::size_t dy = y.dim;
  Vec out(s.size(), Rat(0));
  for (std::size_t e1 = 0; e1 < s.size(); ++e1) {
    if (rat_is_zero(s[e1])) continue;
    std::size_t i1 = e1 / dy, k1 = e1 % dy;
    for (std::size_t e2 = 0; e2 < t.size(); ++e2) {
      if (rat_is_zero(t[e2])) continue;
      std::size_t i2 = e2 / dy, k2 = e2 % dy;
      Rat c0 = s[e1] * t[e2];
      for (std::size_t i3 = 0; i3 < x.dim; ++i3) {
        const Rat& cx = x.c(i1, i2, i3);
        if (rat_is_zero(cx)) continue;
        Rat cc = c0 * cx;
        for (std::size_t k3 = 0; k3 < dy; ++k3) {
          const Rat& cy = y.c(k1, k2, k3);
          if (!rat_is_zero(cy)) out[i3 * dy + k3] += cc * cy;
        }
      }
    }
  }
  return out;
}

// (Δ⊗id)Δ(b_j) as a d³ vector
Vec comult_twice(const WeakHopfStructure& w, const Vec& x) {
  std::size_t d = w.dim();
  Vec dx = w.comult.apply(x);
  Vec out(d * d * d, Rat(0));
  for (std::size_t e = 0; e < dx.size(); ++e) {
    if (rat_is_zero(dx[e])) continue;
    std::size_t p = e / d, q = e % d;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < d; ++k) {
        const Rat& c = w.comult.at(i * d + k, p);
        if (!rat_is_zero(c)) out[(i * d + k) * d + q] += dx[e] * c;
      }
  }
  return out;
}

std::optional<Matrix> antipode_inverse(const WeakHopfStructure& w) {
  return solve_linear_many(w.antipode, Matrix::identity(w.dim()));
}

ExtensionPair pair_over_subspace(const FinAlgebra& a, const Subspace& bsub, const std::string& nm) {
  return make_extension_pair(a, subalgebra_on_basis(a, bsub.basis, nm),
                             Matrix::from_cols(a.dim, bsub.basis));
}

}  // namespace

WeakHopfStructure from_hopf(const HopfStructure& h) {
  return {h.alg, h.comult, h.counit, h.antipode};
}

WeakHopfStructure matrix_groupoid(std::size_t n) {
  if (n == 0) throw std::invalid_argument("matrix_groupoid: n must be positive");
  std::size_t d = n * n;
  FinAlgebra a("M" + std::to_string(n), d);
  for (std::size_t i = 0; i < n; ++i) {
    a.unit[i * n + i] = 1;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) a.c(i * n + j, j * n + l, i * n + l) = 1;
  }
  WeakHopfStructure w{std::move(a), Matrix(d * d, d), Vec(d, Rat(1)), Matrix(d, d)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t t = i * n + j;
      w.comult.at(t * d + t, t) = 1;
      w.antipode.at(j * n + i, t) = 1;
    }
  return w;
}

WeakHopfStructure dual_weak_hopf(const WeakHopfStructure& w) {
  std::size_t d = w.dim();
  FinAlgebra a(w.alg.name + "^*", d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) a.c(i, j, k) = w.comult.at(i * d + j, k);
  a.unit = w.counit;
  WeakHopfStructure out{std::move(a), Matrix(d * d, d), w.alg.unit, w.antipode.transpose()};
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) out.comult.at(i * d + j, k) = w.alg.c(i, j, k);
  return out;
}

AuditReport audit_weak_hopf(const WeakHopfStructure& w) {
  AuditReport rep;
  std::size_t d = w.dim();
  bool shapes = w.comult.rows == d * d && w.comult.cols == d && w.counit.size() == d &&
                w.antipode.rows == d && w.antipode.cols == d;
  rep.add("shapes", shapes, shapes ? "" : "coalgebra data does not match dim");
  if (!shapes) return rep;

  AlgebraReport ar = validate_algebra(w.alg);
  rep.add("algebra_valid", ar.ok(), ar.ok() ? "" : ar.failures.front());
  if (!ar.ok()) return rep;

  const FinAlgebra& alg = w.alg;
  const Matrix& dm = w.comult;
  Matrix ep = counit_products(w);
  Vec u = dm.apply(alg.unit);

  {
    bool pass = true;
    std::string wit;
    for (std::size_t j = 0; j < d && pass; ++j) {
      Vec lhs = comult_twice(w, unit_vec(d, j));
      Vec col = dm.col(j);
      Vec rhs(d * d * d, Rat(0));
      for (std::size_t e = 0; e < col.size(); ++e) {
        if (rat_is_zero(col[e])) continue;
        std::size_t p = e / d, q = e % d;
        for (std::size_t k = 0; k < d; ++k)
          for (std::size_t l = 0; l < d; ++l) {
            const Rat& c = dm.at(k * d + l, q);
            if (!rat_is_zero(c)) rhs[(p * d + k) * d + l] += col[e] * c;
          }
      }
      if (lhs != rhs) {
        pass = false;
        wit = bw(j);
      }
    }
    rep.add("coassociative", pass, wit);
  }

  {
    bool pass = true;
    std::string wit;
    for (std::size_t j = 0; j < d && pass; ++j) {
      Vec col = dm.col(j), l(d, Rat(0)), r(d, Rat(0));
      for (std::size_t e = 0; e < col.size(); ++e) {
        if (rat_is_zero(col[e])) continue;
        l[e % d] += col[e] * w.counit[e / d];
        r[e / d] += col[e] * w.counit[e % d];
      }
      if (l != unit_vec(d, j) || r != unit_vec(d, j)) {
        pass = false;
        wit = bw(j);
      }
    }
    rep.add("counit_law", pass, wit);
  }

  {
    bool pass = true;
    std::string wit;
    for (std::size_t i = 0; i < d && pass; ++i)
      for (std::size_t j = 0; j < d && pass; ++j)
        if (dm.apply(alg.basis_mul(i, j)) != tensor_alg_mul(alg, dm.col(i), dm.col(j))) {
          pass = false;
          wit = bw2(i, j);
        }
    rep.add("comult_multiplicative", pass, wit);
  }

  {
    // 1₍₁₎⊗1₍₂₎⊗1₍₃₎ = (Δ(1)⊗1)(1⊗Δ(1)) = (1⊗Δ(1))(Δ(1)⊗1)
    Vec dd1 = comult_twice(w, alg.unit);
    Vec left3(d * d * d, Rat(0)), right3(d * d * d, Rat(0));
    for (std::size_t e = 0; e < u.size(); ++e) {
      if (rat_is_zero(u[e])) continue;
      std::size_t p = e / d, q = e % d;
      for (std::size_t r = 0; r < d; ++r) {
        if (!rat_is_zero(alg.unit[r])) {
          left3[(p * d + q) * d + r] += u[e] * alg.unit[r];
          right3[(r * d + p) * d + q] += alg.unit[r] * u[e];
        }
      }
    }
    Vec prod1 = triple_mul(alg, left3, right3);
    Vec prod2 = triple_mul(alg, right3, left3);
    bool pass = dd1 == prod1 && dd1 == prod2;
    rep.add("weak_comult_unit", pass,
            pass ? "" : (dd1 == prod1 ? "reversed product differs" : "product differs"));
  }

  {
    bool pass = true;
    std::string wit;
    for (std::size_t a = 0; a < d && pass; ++a)
      for (std::size_t b = 0; b < d && pass; ++b) {
        Vec col = dm.col(b);
        for (std::size_t c = 0; c < d && pass; ++c) {
          Rat eps = vec_dot(w.counit, alg.mul(alg.basis_mul(a, b), unit_vec(d, c)));
          Rat r1(0), r2(0);
          for (std::size_t e = 0; e < col.size(); ++e) {
            if (rat_is_zero(col[e])) continue;
            std::size_t p = e / d, q = e % d;
            r1 += col[e] * ep.at(a, p) * ep.at(q, c);
            r2 += col[e] * ep.at(a, q) * ep.at(p, c);
          }
          if (eps != r1 || eps != r2) {
            pass = false;
            wit = "a = b_" + std::to_string(a) + ", b = b_" + std::to_string(b) +
                  ", c = b_" + std::to_string(c);
          }
        }
      }
    rep.add("weak_counit_mult", pass, wit);
  }

  ProjectionData pd = make_projections(w, ep);

  {
    bool pr = true, pl = true;
    std::string wr, wl;
    for (std::size_t j = 0; j < d; ++j) {
      Vec col = dm.col(j), accr(d, Rat(0)), accl(d, Rat(0));
      for (std::size_t e = 0; e < col.size(); ++e) {
        if (rat_is_zero(col[e])) continue;
        std::size_t p = e / d, q = e % d;
        vec_axpy(accr, col[e], alg.mul(w.antipode.col(p), unit_vec(d, q)));
        vec_axpy(accl, col[e], alg.mul(unit_vec(d, p), w.antipode.col(q)));
      }
      if (pr && accr != pd.piR.col(j)) {
        pr = false;
        wr = bw(j);
      }
      if (pl && accl != pd.piL.col(j)) {
        pl = false;
        wl = bw(j);
      }
    }
    rep.add("antipode_piR", pr, wr);
    rep.add("antipode_piL", pl, wl);
  }

  {
    bool pass = true;
    std::string wit;
    for (std::size_t j = 0; j < d && pass; ++j) {
      Vec t3 = comult_twice(w, unit_vec(d, j));
      Vec acc(d, Rat(0));
      for (std::size_t e = 0; e < t3.size(); ++e) {
        if (rat_is_zero(t3[e])) continue;
        std::size_t p = e / (d * d), q = (e / d) % d, r = e % d;
        vec_axpy(acc, t3[e],
                 alg.mul(alg.mul(w.antipode.col(p), unit_vec(d, q)), w.antipode.col(r)));
      }
      if (acc != w.antipode.col(j)) {
        pass = false;
        wit = bw(j);
      }
    }
    rep.add("antipode_sandwich", pass, wit);
  }

  std::optional<Matrix> sbar = antipode_inverse(w);
  rep.add("antipode_invertible", sbar.has_value(), sbar ? "" : "S is singular");
  if (!sbar) return rep;

  rep.add("piL_is_S_piLbar", pd.piL == w.antipode.mul(pd.piLbar), "");
  rep.add("piR_is_S_piRbar", pd.piR == w.antipode.mul(pd.piRbar), "");

  {
    bool p1 = true, p2 = true;
    std::string w1, w2;
    for (std::size_t j = 0; j < d; ++j) {
      Vec col = dm.col(j), acc1(d, Rat(0)), acc2(d, Rat(0));
      for (std::size_t e = 0; e < col.size(); ++e) {
        if (rat_is_zero(col[e])) continue;
        std::size_t p = e / d, q = e % d;
        vec_axpy(acc1, col[e], alg.mul(sbar->col(q), unit_vec(d, p)));
        vec_axpy(acc2, col[e], alg.mul(unit_vec(d, q), sbar->col(p)));
      }
      if (p1 && acc1 != pd.piRbar.col(j)) {
        p1 = false;
        w1 = bw(j);
      }
      if (p2 && acc2 != pd.piLbar.col(j)) {
        p2 = false;
        w2 = bw(j);
      }
    }
    rep.add("sbar_piRbar", p1, w1);
    rep.add("sbar_piLbar", p2, w2);
  }

  {
    // a₍₁₎⊗Π^L(a₍₂₎) = 1₍₁₎a⊗1₍₂₎  and  Π^R(a₍₁₎)⊗a₍₂₎ = 1₍₁₎⊗a1₍₂₎
    bool p1 = true, p2 = true;
    std::string w1, w2;
    for (std::size_t a = 0; a < d; ++a) {
      Vec col = dm.col(a);
      Vec l1(d * d, Rat(0)), r1(d * d, Rat(0)), l2(d * d, Rat(0)), r2(d * d, Rat(0));
      for (std::size_t e = 0; e < col.size(); ++e) {
        if (rat_is_zero(col[e])) continue;
        std::size_t p = e / d, q = e % d;
        for (std::size_t r = 0; r < d; ++r) {
          if (!rat_is_zero(pd.piL.at(r, q))) l1[p * d + r] += col[e] * pd.piL.at(r, q);
          if (!rat_is_zero(pd.piR.at(r, p))) l2[r * d + q] += col[e] * pd.piR.at(r, p);
        }
      }
      for (std::size_t e = 0; e < u.size(); ++e) {
        if (rat_is_zero(u[e])) continue;
        std::size_t p = e / d, q = e % d;
        for (std::size_t i = 0; i < d; ++i) {
          const Rat& cl = alg.c(p, a, i);
          if (!rat_is_zero(cl)) r1[i * d + q] += u[e] * cl;
          const Rat& cr = alg.c(a, q, i);
          if (!rat_is_zero(cr)) r2[p * d + i] += u[e] * cr;
        }
      }
      if (p1 && l1 != r1) {
        p1 = false;
        w1 = bw(a);
      }
      if (p2 && l2 != r2) {
        p2 = false;
        w2 = bw(a);
      }
    }
    rep.add("piL_translate", p1, w1);
    rep.add("piR_translate", p2, w2);
  }

  {
    // Π^R(a)b = b₍₁₎ε(ab₍₂₎)  and  aΠ^L(b) = ε(a₍₁₎b)a₍₂₎
    bool p1 = true, p2 = true;
    std::string w1, w2;
    for (std::size_t a = 0; a < d && (p1 || p2); ++a)
      for (std::size_t b = 0; b < d && (p1 || p2); ++b) {
        if (p1) {
          Vec rhs(d, Rat(0)), col = dm.col(b);
          for (std::size_t e = 0; e < col.size(); ++e)
            if (!rat_is_zero(col[e])) rhs[e / d] += col[e] * ep.at(a, e % d);
          if (alg.mul(pd.piR.col(a), unit_vec(d, b)) != rhs) {
            p1 = false;
            w1 = bw2(a, b);
          }
        }
        if (p2) {
          Vec rhs(d, Rat(0)), col = dm.col(a);
          for (std::size_t e = 0; e < col.size(); ++e)
            if (!rat_is_zero(col[e])) rhs[e % d] += col[e] * ep.at(e / d, b);
          if (alg.mul(unit_vec(d, a), pd.piL.col(b)) != rhs) {
            p2 = false;
            w2 = bw2(a, b);
          }
        }
      }
    rep.add("piR_absorb", p1, w1);
    rep.add("piL_absorb", p2, w2);
  }
  return rep;
}

ProjectionData projections(const WeakHopfStructure& w) {
  return make_projections(w, counit_products(w));
}

WeakIntegralData find_integrals_weak(const WeakHopfStructure& w) {
  std::size_t d = w.dim();
  const FinAlgebra& alg = w.alg;
  ProjectionData pd = projections(w);

  Matrix sysL(d * d, d), sysR(d * d, d);
  for (std::size_t a = 0; a < d; ++a) {
    Matrix la = alg.left_mult(unit_vec(d, a)), lp = alg.left_mult(pd.piL.col(a));
    Matrix ra = alg.right_mult(unit_vec(d, a)), rp = alg.right_mult(pd.piR.col(a));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        sysL.at(a * d + i, j) = la.at(i, j) - lp.at(i, j);
        sysR.at(a * d + i, j) = ra.at(i, j) - rp.at(i, j);
      }
  }
  WeakIntegralData out;
  out.left = Subspace::from_vectors(d, nullspace(sysL));
  out.right = Subspace::from_vectors(d, nullspace(sysR));

  Matrix big(2 * d * d + 2 * d, d);
  Vec rhs(2 * d * d + 2 * d, Rat(0));
  for (std::size_t r = 0; r < d * d; ++r)
    for (std::size_t j = 0; j < d; ++j) {
      big.at(r, j) = sysL.at(r, j);
      big.at(d * d + r, j) = sysR.at(r, j);
    }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      big.at(2 * d * d + i, j) = pd.piL.at(i, j);
      big.at(2 * d * d + d + i, j) = pd.piR.at(i, j);
    }
  for (std::size_t i = 0; i < d; ++i) {
    rhs[2 * d * d + i] = alg.unit[i];
    rhs[2 * d * d + d + i] = alg.unit[i];
  }
  out.haar = solve_linear(big, rhs);
  if (!out.haar) return out;
  if (!nullspace(big).empty())
    throw std::logic_error("find_integrals_weak: normalized integral is not unique");

  Vec dh = w.comult.apply(*out.haar);
  Matrix m(d, d);
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = 0; q < d; ++q) m.at(p, q) = dh[p * d + q];
  out.dual_left = solve_linear(m, alg.unit);
  if (!out.dual_left) return out;

  std::optional<Matrix> sbar = antipode_inverse(w);
  if (!sbar) return out;
  // w = S̄(h₍₁₎)⟨λ, wh₍₂₎⟩ on the basis
  out.dual_bases_ok = true;
  for (std::size_t j = 0; j < d && out.dual_bases_ok; ++j) {
    Vec acc(d, Rat(0));
    for (std::size_t e = 0; e < dh.size(); ++e) {
      if (rat_is_zero(dh[e])) continue;
      Rat c = dh[e] * vec_dot(*out.dual_left, alg.basis_mul(j, e % d));
      if (!rat_is_zero(c)) vec_axpy(acc, c, sbar->col(e / d));
    }
    if (acc != unit_vec(d, j)) out.dual_bases_ok = false;
  }
  return out;
}

Vec WeakAction::act(const Vec& wv, const Vec& av) const {
  Vec out(a.dim, Rat(0));
  for (std::size_t i = 0; i < wv.size(); ++i) {
    if (rat_is_zero(wv[i])) continue;
    vec_axpy(out, wv[i], mats[i].apply(av));
  }
  return out;
}

AuditReport check_module_algebra(const WeakAction& act) {
  AuditReport rep;
  std::size_t dw = act.w.dim(), da = act.a.dim;
  bool shapes = act.mats.size() == dw;
  for (const Matrix& m : act.mats)
    if (m.rows != da || m.cols != da) shapes = false;
  rep.add("shapes", shapes, shapes ? "" : "need one dimA x dimA matrix per W basis element");
  if (!shapes) return rep;

  {
    bool pass = true;
    std::string wit;
    for (std::size_t i = 0; i < dw && pass; ++i)
      for (std::size_t j = 0; j < dw && pass; ++j) {
        Matrix prod(da, da);
        for (std::size_t k = 0; k < dw; ++k) {
          const Rat& c = act.w.alg.c(i, j, k);
          if (rat_is_zero(c)) continue;
          for (std::size_t e = 0; e < prod.a.size(); ++e)
            if (!rat_is_zero(act.mats[k].a[e])) prod.a[e] += c * act.mats[k].a[e];
        }
        if (!(prod == act.mats[i].mul(act.mats[j]))) {
          pass = false;
          wit = bw2(i, j);
        }
      }
    rep.add("action_associative", pass, wit);
  }

  {
    Matrix one(da, da);
    for (std::size_t i = 0; i < dw; ++i)
      if (!rat_is_zero(act.w.alg.unit[i])) {
        for (std::size_t e = 0; e < one.a.size(); ++e)
          if (!rat_is_zero(act.mats[i].a[e])) one.a[e] += act.w.alg.unit[i] * act.mats[i].a[e];
      }
    rep.add("action_unital", one.is_identity(), "");
  }

  {
    bool pass = true;
    std::string wit;
    for (std::size_t i = 0; i < dw && pass; ++i) {
      Vec col = act.w.comult.col(i);
      for (std::size_t a = 0; a < da && pass; ++a)
        for (std::size_t b = 0; b < da && pass; ++b) {
          Vec lhs = act.mats[i].apply(act.a.basis_mul(a, b));
          Vec rhs(da, Rat(0));
          for (std::size_t e = 0; e < col.size(); ++e) {
            if (rat_is_zero(col[e])) continue;
            vec_axpy(rhs, col[e],
                     act.a.mul(act.mats[e / dw].col(a), act.mats[e % dw].col(b)));
          }
          if (lhs != rhs) {
            pass = false;
            wit = "w = b_" + std::to_string(i) + ", " + bw2(a, b);
          }
        }
    }
    rep.add("product_law", pass, wit);
  }

  {
    ProjectionData pd = projections(act.w);
    bool pass = true;
    std::string wit;
    for (std::size_t i = 0; i < dw && pass; ++i) {
      Vec lhs = act.mats[i].apply(act.a.unit);
      Vec rhs = act.act(pd.piL.col(i), act.a.unit);
      if (lhs != rhs) {
        pass = false;
        wit = "w = b_" + std::to_string(i);
      }
    }
    rep.add("unit_law", pass, wit);
  }
  return rep;
}

WeakAction pair_groupoid_action(std::size_t n) {
  WeakHopfStructure w = matrix_groupoid(n);
  FinAlgebra diag("diag" + std::to_string(n), n);
  diag.unit = Vec(n, Rat(1));
  for (std::size_t i = 0; i < n; ++i) diag.c(i, i, i) = 1;
  WeakAction act{std::move(w), std::move(diag), {}};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix m(n, n);
      m.at(i, j) = 1;  // e_ij·f_k = δ_jk f_i
      act.mats.push_back(std::move(m));
    }
  return act;
}

WeakAction group_translation_action(const GroupTable& g) {
  HopfStructure h = group_hopf(g);
  WeakAction act{from_hopf(h), dual_hopf(h).alg, {}};
  std::size_t n = g.order;
  for (std::size_t gi = 0; gi < n; ++gi) {
    Matrix m(n, n);
    for (std::size_t hh = 0; hh < n; ++hh) m.at(g.mul(hh, g.inv(gi)), hh) = 1;
    act.mats.push_back(std::move(m));
  }
  return act;
}

WeakAction trivial_action(const WeakHopfStructure& w, FinAlgebra a) {
  WeakAction act{w, std::move(a), {}};
  std::size_t da = act.a.dim;
  for (std::size_t i = 0; i < w.counit.size(); ++i) {
    Matrix m(da, da);
    for (std::size_t j = 0; j < da; ++j) m.at(j, j) = w.counit[i];
    act.mats.push_back(std::move(m));
  }
  return act;
}

WeakCoaction action_to_coaction(const WeakAction& act) {
  std::size_t dw = act.w.dim(), da = act.a.dim;
  WeakCoaction co{dual_weak_hopf(act.w), act.a, Matrix(da * dw, da)};
  for (std::size_t k = 0; k < dw; ++k)
    for (std::size_t i = 0; i < da; ++i)
      for (std::size_t j = 0; j < da; ++j) co.rho.at(i * dw + k, j) = act.mats[k].at(i, j);
  return co;
}

WeakAction coaction_to_action(const WeakCoaction& co) {
  std::size_t dw = co.w.dim(), da = co.b.dim;
  WeakAction act{dual_weak_hopf(co.w), co.b, {}};
  for (std::size_t k = 0; k < dw; ++k) {
    Matrix m(da, da);
    for (std::size_t i = 0; i < da; ++i)
      for (std::size_t j = 0; j < da; ++j) m.at(i, j) = co.rho.at(i * dw + k, j);
    act.mats.push_back(std::move(m));
  }
  return act;
}

AuditReport check_comodule_algebra(const WeakCoaction& co) {
  AuditReport rep;
  std::size_t dw = co.w.dim(), db = co.b.dim;
  bool shapes = co.rho.rows == db * dw && co.rho.cols == db;
  rep.add("shapes", shapes, shapes ? "" : "rho must be (dim b · dim w) x dim b");
  if (!shapes) return rep;

  {
    bool pass = true;
    std::string wit;
    for (std::size_t j = 0; j < db && pass; ++j) {
      Vec col = co.rho.col(j);
      Vec lhs(db * dw * dw, Rat(0)), rhs(db * dw * dw, Rat(0));
      for (std::size_t e = 0; e < col.size(); ++e) {
        if (rat_is_zero(col[e])) continue;
        std::size_t i = e / dw, k = e % dw;
        Vec inner = co.rho.col(i);
        for (std::size_t f = 0; f < inner.size(); ++f)
          if (!rat_is_zero(inner[f])) lhs[f * dw + k] += col[e] * inner[f];
        for (std::size_t pq = 0; pq < dw * dw; ++pq) {
          const Rat& c = co.w.comult.at(pq, k);
          if (!rat_is_zero(c)) rhs[(i * dw + pq / dw) * dw + pq % dw] += col[e] * c;
        }
      }
      if (lhs != rhs) {
        pass = false;
        wit = bw(j);
      }
    }
    rep.add("coassociative", pass, wit);
  }

  {
    bool pass = true;
    std::string wit;
    for (std::size_t j = 0; j < db && pass; ++j) {
      Vec col = co.rho.col(j), acc(db, Rat(0));
      for (std::size_t e = 0; e < col.size(); ++e)
        if (!rat_is_zero(col[e])) acc[e / dw] += col[e] * co.w.counit[e % dw];
      if (acc != unit_vec(db, j)) {
        pass = false;
        wit = bw(j);
      }
    }
    rep.add("counit_coaction", pass, wit);
  }

  {
    bool pass = true;
    std::string wit;
    for (std::size_t a = 0; a < db && pass; ++a)
      for (std::size_t b = 0; b < db && pass; ++b)
        if (co.rho.apply(co.b.basis_mul(a, b)) !=
            mixed_mul(co.b, co.w.alg, co.rho.col(a), co.rho.col(b))) {
          pass = false;
          wit = bw2(a, b);
        }
    rep.add("rho_multiplicative", pass, wit);
  }

  {
    ProjectionData pd = projections(co.w);
    Vec r1 = co.rho.apply(co.b.unit), proj(db * dw, Rat(0));
    for (std::size_t e = 0; e < r1.size(); ++e) {
      if (rat_is_zero(r1[e])) continue;
      std::size_t i = e / dw, k = e % dw;
      for (std::size_t r = 0; r < dw; ++r)
        if (!rat_is_zero(pd.piL.at(r, k))) proj[i * dw + r] += r1[e] * pd.piL.at(r, k);
    }
    rep.add("rho_unit", r1 == proj, "");
  }
  return rep;
}

Subspace action_invariants(const WeakAction& act) {
  std::size_t dw = act.w.dim(), da = act.a.dim;
  ProjectionData pd = projections(act.w);
  Matrix sys(dw * da, da);
  for (std::size_t i = 0; i < dw; ++i) {
    Matrix diff = act.mats[i];
    for (std::size_t r = 0; r < dw; ++r) {
      const Rat& c = pd.piL.at(r, i);
      if (rat_is_zero(c)) continue;
      for (std::size_t e = 0; e < diff.a.size(); ++e)
        if (!rat_is_zero(act.mats[r].a[e])) diff.a[e] -= c * act.mats[r].a[e];
    }
    for (std::size_t r = 0; r < da; ++r)
      for (std::size_t j = 0; j < da; ++j) sys.at(i * da + r, j) = diff.at(r, j);
  }
  return Subspace::from_vectors(da, nullspace(sys));
}

Subspace coaction_coinvariants(const WeakCoaction& co) {
  std::size_t dw = co.w.dim(), db = co.b.dim;
  ProjectionData pd = projections(co.w);
  Matrix sys(db * dw, db);
  for (std::size_t j = 0; j < db; ++j) {
    Vec col = co.rho.col(j), proj(db * dw, Rat(0));
    for (std::size_t e = 0; e < col.size(); ++e) {
      if (rat_is_zero(col[e])) continue;
      std::size_t i = e / dw, k = e % dw;
      for (std::size_t r = 0; r < dw; ++r)
        if (!rat_is_zero(pd.piL.at(r, k))) proj[i * dw + r] += col[e] * pd.piL.at(r, k);
    }
    for (std::size_t r = 0; r < db * dw; ++r) sys.at(r, j) = col[r] - proj[r];
  }
  return Subspace::from_vectors(db, nullspace(sys));
}

SmashProduct smash_product(const WeakAction& act) {
  const FinAlgebra& A = act.a;
  const FinAlgebra& W = act.w.alg;
  std::size_t da = A.dim, dw = W.dim;
  ProjectionData pd = projections(act.w);

  std::vector<Vec> rels;
  for (const Vec& l : pd.WL.basis) {
    Vec l1 = act.act(l, A.unit);  // w^L·1
    for (std::size_t a = 0; a < da; ++a) {
      Vec u = A.mul(unit_vec(da, a), l1);
      for (std::size_t wi = 0; wi < dw; ++wi) {
        Vec rel(da * dw, Rat(0));
        for (std::size_t i = 0; i < da; ++i)
          if (!rat_is_zero(u[i])) rel[i * dw + wi] += u[i];
        Vec lw = W.mul(l, unit_vec(dw, wi));
        for (std::size_t k = 0; k < dw; ++k)
          if (!rat_is_zero(lw[k])) rel[a * dw + k] -= lw[k];
        if (!vec_is_zero(rel)) rels.push_back(std::move(rel));
      }
    }
  }
  SmashProduct sp{FinAlgebra(), quotient_by_span(da * dw, rels)};
  std::size_t m = sp.quot.dim;
  FinAlgebra sm(A.name + "#" + W.name, m);
  sm.unit = sp.quot.project_vec(kron_vec(A.unit, W.unit));

  for (std::size_t s = 0; s < m; ++s) {
    std::size_t fa = sp.quot.free_cols[s] / dw, fw = sp.quot.free_cols[s] % dw;
    Vec dcol = act.w.comult.col(fw);
    for (std::size_t t = 0; t < m; ++t) {
      std::size_t fb = sp.quot.free_cols[t] / dw, fv = sp.quot.free_cols[t] % dw;
      Vec amb(da * dw, Rat(0));
      for (std::size_t e = 0; e < dcol.size(); ++e) {
        if (rat_is_zero(dcol[e])) continue;
        std::size_t p = e / dw, q = e % dw;
        Vec awb = A.mul(unit_vec(da, fa), act.mats[p].col(fb));  // a(w₍₁₎·b)
        Vec qv = W.basis_mul(q, fv);                             // w₍₂₎v
        for (std::size_t i = 0; i < da; ++i) {
          if (rat_is_zero(awb[i])) continue;
          Rat c = dcol[e] * awb[i];
          for (std::size_t k = 0; k < dw; ++k)
            if (!rat_is_zero(qv[k])) amb[i * dw + k] += c * qv[k];
        }
      }
      Vec cls = sp.quot.project_vec(amb);
      for (std::size_t r = 0; r < m; ++r) sm.c(s, t, r) = cls[r];
    }
  }
  AlgebraReport ar = validate_algebra(sm);
  if (!ar.ok())
    throw std::logic_error("smash_product: quotient algebra invalid: " + ar.failures.front());
  sp.alg = std::move(sm);
  return sp;
}

GaloisData galois_beta(const WeakCoaction& co, const Subspace& bsub) {
  if (!subspace_equal(bsub, coaction_coinvariants(co)))
    throw std::invalid_argument("galois_beta: subspace is not the coinvariants");
  const FinAlgebra& A = co.b;
  std::size_t da = A.dim, dw = co.w.dim();
  ExtensionPair p = pair_over_subspace(A, bsub, A.name + "_coinv");
  TensorSquare t2 = tensor_square(p);

  GaloisData out{Matrix(da * dw, t2.dim), false, false};
  for (std::size_t t = 0; t < t2.dim; ++t) {
    std::size_t x = t2.free_cols[t] / da, y = t2.free_cols[t] % da;
    Vec col = co.rho.col(y);
    for (std::size_t e = 0; e < col.size(); ++e) {
      if (rat_is_zero(col[e])) continue;
      std::size_t i = e / dw, k = e % dw;
      for (std::size_t j = 0; j < da; ++j) {
        const Rat& c = A.c(x, i, j);
        if (!rat_is_zero(c)) out.beta.at(j * dw + k, t) += col[e] * c;
      }
    }
  }
  out.bijective = rank(out.beta) == t2.dim;

  Vec rho1 = co.rho.apply(A.unit);
  std::vector<Vec> corner_gens;
  for (std::size_t e = 0; e < da * dw; ++e) {
    Vec v = mixed_mul(A, co.w.alg, unit_vec(da * dw, e), rho1);
    if (!vec_is_zero(v)) corner_gens.push_back(std::move(v));
  }
  std::vector<Vec> img_gens;
  for (std::size_t t = 0; t < t2.dim; ++t) img_gens.push_back(out.beta.col(t));
  out.image_ok =
      subspace_equal(subspace_span(da * dw, img_gens), subspace_span(da * dw, corner_gens));
  return out;
}

PiData pi_map(const WeakAction& act, const Subspace& bsub) {
  if (!subspace_equal(bsub, action_invariants(act)))
    throw std::invalid_argument("pi_map: subspace is not the invariants");
  const FinAlgebra& A = act.a;
  std::size_t da = A.dim, dw = act.w.dim();
  SmashProduct sp = smash_product(act);
  std::size_t m = sp.alg.dim;

  std::vector<Matrix> ends;
  PiData out{Matrix(da * da, m), false};
  for (std::size_t t = 0; t < m; ++t) {
    std::size_t fa = sp.quot.free_cols[t] / dw, fw = sp.quot.free_cols[t] % dw;
    Matrix endo = A.left_mult(unit_vec(da, fa)).mul(act.mats[fw]);
    out.pi.set_col(t, endo.a);
    ends.push_back(std::move(endo));
  }
  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t t = 0; t < m; ++t) {
      Vec lhs = out.pi.apply(sp.alg.basis_mul(s, t));
      if (lhs != ends[s].mul(ends[t]).a)
        throw std::logic_error("pi_map: pi is not multiplicative at classes " +
                               std::to_string(s) + ", " + std::to_string(t));
    }

  // End(A_B): commutant of the right multiplications by the embedded basis
  Matrix sys(bsub.dim() * da * da, da * da);
  for (std::size_t u = 0; u < bsub.dim(); ++u) {
    Matrix r = A.right_mult(bsub.basis[u]);
    for (std::size_t i = 0; i < da; ++i)
      for (std::size_t j = 0; j < da; ++j)
        for (std::size_t k = 0; k < da; ++k) {
          sys.at(u * da * da + i * da + j, i * da + k) += r.at(k, j);
          sys.at(u * da * da + i * da + j, k * da + j) -= r.at(i, k);
        }
  }
  Subspace endB = Subspace::from_vectors(da * da, nullspace(sys));
  std::vector<Vec> img;
  for (std::size_t t = 0; t < m; ++t) img.push_back(out.pi.col(t));
  Subspace pi_img = subspace_span(da * da, img);
  out.iso = rank(out.pi) == m && subspace_equal(pi_img, endB);
  return out;
}

bool module_projective(const ExtensionPair& p) {
  std::size_t d = p.big.dim, k = p.small.dim;
  if (k == 1) return true;
  // unknowns F[(i,u,j)]: f_i(b_j) = Σ_u F b_u; dual basis needs
  // right-B-linearity of each f_i and Σ_i b_i ι(f_i(x)) = x
  auto idx = [&](std::size_t i, std::size_t u, std::size_t j) { return (i * k + u) * d + j; };
  std::size_t rows = d * d * k * k + d * d, cols = d * k * d;
  Matrix sys(rows, cols);
  Vec rhs(rows, Rat(0));
  std::size_t r = 0;
  for (std::size_t v = 0; v < k; ++v) {
    Matrix rv = p.big.right_mult(p.embed.col(v));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t u = 0; u < k; ++u, ++r) {
          for (std::size_t l = 0; l < d; ++l)
            if (!rat_is_zero(rv.at(l, j))) sys.at(r, idx(i, u, l)) += rv.at(l, j);
          for (std::size_t u2 = 0; u2 < k; ++u2) {
            const Rat& c = p.small.c(u2, v, u);
            if (!rat_is_zero(c)) sys.at(r, idx(i, u2, j)) -= c;
          }
        }
  }
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t t = 0; t < d; ++t, ++r) {
      rhs[r] = j == t ? Rat(1) : Rat(0);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t u = 0; u < k; ++u) {
          Vec bu = p.embed.col(u);
          Rat acc(0);
          for (std::size_t s = 0; s < d; ++s)
            if (!rat_is_zero(bu[s])) acc += bu[s] * p.big.c(i, s, t);
          if (!rat_is_zero(acc)) sys.at(r, idx(i, u, j)) += acc;
        }
    }
  return solve_linear(sys, rhs).has_value();
}

AuditReport theorem42_report(const WeakAction& act) {
  AuditReport rep;
  AuditReport ma = check_module_algebra(act);
  rep.add("module_algebra", ma.ok(), ma.ok() ? "" : ma.first_failure());
  if (!ma.ok()) return rep;

  WeakCoaction co = action_to_coaction(act);
  AuditReport ca = check_comodule_algebra(co);
  rep.add("comodule_algebra", ca.ok(), ca.ok() ? "" : ca.first_failure());

  WeakAction back = coaction_to_action(co);
  bool rt = back.mats.size() == act.mats.size();
  for (std::size_t i = 0; rt && i < act.mats.size(); ++i)
    if (!(back.mats[i] == act.mats[i])) rt = false;
  rep.add("action_coaction_roundtrip", rt, rt ? "" : "converted action tensor differs");

  Subspace inv = action_invariants(act);
  Subspace coinv = coaction_coinvariants(co);
  bool eq = subspace_equal(inv, coinv);
  rep.add("invariants_equal_coinvariants", eq, eq ? "" : "subspaces differ");
  if (!ca.ok() || !rt || !eq) return rep;

  GaloisData gd = galois_beta(co, coinv);
  PiData pi = pi_map(act, inv);
  bool proj = module_projective(pair_over_subspace(act.a, inv, act.a.name + "^W"));
  bool galois = gd.image_ok && gd.bijective;
  bool smash_endo = pi.iso && proj;
  rep.add("galois_iff_smash_endos", galois == smash_endo,
          "beta image_ok=" + std::string(gd.image_ok ? "1" : "0") +
              " bijective=" + (gd.bijective ? "1" : "0") + ", pi iso=" + (pi.iso ? "1" : "0") +
              ", projective=" + (proj ? "1" : "0"));
  return rep;
}

}  // namespace hopfkit
