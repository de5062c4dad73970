#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfkit/hopf.hpp"

using namespace hopfkit;

namespace {

HopfPair s3_a3() { return group_hopf_pair(dihedral_group(3), {0, 1, 2}); }
HopfPair s3_refl() { return group_hopf_pair(dihedral_group(3), {0, 3}); }

// Sweedler's 4-dimensional Hopf algebra, basis {1, g, x, gx}: g^2 = 1,
// x^2 = 0, xg = -gx, Δx = x⊗1 + g⊗x, S(x) = -gx.  Valid but not
// semisimple, and S^2 ≠ id.
HopfStructure sweedler_h4() {
  HopfStructure h;
  h.alg = FinAlgebra("H4", 4);
  auto& a = h.alg;
  a.unit = unit_vec(4, 0);
  for (std::size_t j = 0; j < 4; ++j) {
    a.c(0, j, j) = 1;
    if (j != 0) a.c(j, 0, j) = 1;
  }
  a.c(1, 1, 0) = 1;   // g g = 1
  a.c(1, 2, 3) = 1;   // g x = gx
  a.c(1, 3, 2) = 1;   // g gx = x
  a.c(2, 1, 3) = -1;  // x g = -gx
  a.c(3, 1, 2) = -1;  // gx g = -x
  h.comult = Matrix(16, 4);
  h.comult.at(0 * 4 + 0, 0) = 1;                              // 1⊗1
  h.comult.at(1 * 4 + 1, 1) = 1;                              // g⊗g
  h.comult.at(2 * 4 + 0, 2) = h.comult.at(1 * 4 + 2, 2) = 1;  // x⊗1 + g⊗x
  h.comult.at(3 * 4 + 1, 3) = h.comult.at(0 * 4 + 3, 3) = 1;  // gx⊗g + 1⊗gx
  h.counit = {1, 1, 0, 0};
  h.antipode = Matrix(4, 4);
  h.antipode.at(0, 0) = 1;
  h.antipode.at(1, 1) = 1;
  h.antipode.at(3, 2) = -1;  // S(x) = -gx
  h.antipode.at(2, 3) = 1;   // S(gx) = x
  return h;
}

}  // namespace

TEST_CASE("audit passes on group Hopf structures and flags a broken antipode") {
  HopfStructure h = group_hopf(dihedral_group(3));
  AuditReport rep = audit_hopf(h);
  CHECK(rep.ok());  // S^2 = id for groups, so even the informational clause holds
  CHECK(audit_hopf_ok(rep));

  // identity antipode is wrong as soon as some element has order > 2
  h.antipode = Matrix::identity(6);
  rep = audit_hopf(h);
  CHECK_FALSE(audit_hopf_ok(rep));
  CHECK_FALSE(rep.find("antipode_left")->pass);
  CHECK_FALSE(rep.find("antipode_right")->pass);
  CHECK(!rep.find("antipode_left")->witness.empty());
  CHECK(rep.find("coassociative")->pass);  // coalgebra side untouched

  // shape mismatch short-circuits before anything can index out of bounds
  h.counit = Vec(2, Rat(1));
  rep = audit_hopf(h);
  CHECK(rep.clauses.size() == 1);
  CHECK_FALSE(rep.ok());
}

TEST_CASE("sweedler H4: valid Hopf algebra whose S^2 is not the identity") {
  HopfStructure h = sweedler_h4();
  AuditReport rep = audit_hopf(h);
  CHECK(audit_hopf_ok(rep));
  CHECK_FALSE(rep.ok());  // exactly the informational clause fails
  CHECK_FALSE(rep.find("antipode_involutive")->pass);

  // not unimodular: no nonzero two-sided integral, so the pair solver throws
  HopfPair p = make_hopf_pair(h, sweedler_h4(), Matrix::identity(4));
  CHECK_THROWS_AS(find_integrals(p), std::invalid_argument);
}

TEST_CASE("dual Hopf: Q[C2]* is the idempotent pair, double dual restores Q[S3]") {
  HopfStructure d = dual_hopf(group_hopf(cyclic_group(2)));
  CHECK(audit_hopf(d).ok());
  // pointwise algebra on the two characters-of-basis slots
  CHECK(d.alg.c(0, 0, 0) == 1);
  CHECK(d.alg.c(1, 1, 1) == 1);
  CHECK(d.alg.c(0, 1, 0) == 0);
  CHECK(d.alg.c(0, 1, 1) == 0);
  CHECK(d.alg.unit == Vec{Rat(1), Rat(1)});
  CHECK(d.counit == unit_vec(2, 0));

  HopfStructure h = group_hopf(dihedral_group(3));
  CHECK(audit_hopf(dual_hopf(h)).ok());
  HopfStructure dd = dual_hopf(dual_hopf(h));
  CHECK(dd.alg.sc == h.alg.sc);
  CHECK(dd.alg.unit == h.alg.unit);
  CHECK(dd.comult == h.comult);
  CHECK(dd.counit == h.counit);
  CHECK(dd.antipode == h.antipode);
}

TEST_CASE("pair construction rejects an algebra map that is not a coalgebra map") {
  // u = (-1 + r + r^2 + r^3)/2 squares to 1 in Q[C4] but is not grouplike
  HopfStructure big = group_hopf(cyclic_group(4));
  HopfStructure small = group_hopf(cyclic_group(2));
  Matrix e(4, 2);
  e.at(0, 0) = 1;
  e.at(0, 1) = rat(-1, 2);
  for (std::size_t i = 1; i < 4; ++i) e.at(i, 1) = rat(1, 2);
  CHECK_THROWS_AS(make_hopf_pair(big, small, e), std::invalid_argument);

  Matrix ok(4, 2);
  ok.at(0, 0) = 1;
  ok.at(2, 1) = 1;  // g -> r^2 is grouplike
  make_hopf_pair(big, small, ok);
}

TEST_CASE("integrals of Q[S3] | Q[A3]: frozen values and the factorization") {
  HopfPair p = s3_a3();
  IntegralData ints = find_integrals(p);
  CHECK(ints.lambda_big == Vec(6, Rat(1)));   // sum of all group elements
  CHECK(ints.t_big == unit_vec(6, 0));        // coefficient of the identity
  CHECK(ints.lambda_small == Vec(3, Rat(1)));
  CHECK(ints.t_small == unit_vec(3, 0));
  CHECK(ints.lambda_rel == Vec{Rat(1), Rat(0), Rat(0), Rat(1), Rat(0), Rat(0)});
  CHECK(ints.index == 2);

  // ι(Λ_K)·Λ = Λ_H and t_H ∘ ι = t_K
  CHECK(p.big.alg.mul(p.pair.embed_vec(ints.lambda_small), ints.lambda_rel) == ints.lambda_big);
  for (std::size_t j = 0; j < 3; ++j)
    CHECK(vec_dot(ints.t_big, p.pair.embed.col(j)) == ints.t_small[j]);

  // t_H is a nondegenerate trace
  const FinAlgebra& a = p.big.alg;
  Matrix gram(6, 6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      CHECK(vec_dot(ints.t_big, a.basis_mul(i, j)) == vec_dot(ints.t_big, a.basis_mul(j, i)));
      gram.at(i, j) = vec_dot(ints.t_big, a.basis_mul(i, j));
    }
  CHECK(rank(gram) == 6);

  // H = K collapses the relative integral
  HopfPair full = group_hopf_pair(dihedral_group(3), {0, 1, 2, 3, 4, 5});
  IntegralData fi = find_integrals(full);
  CHECK(fi.index == 1);
  CHECK(fi.lambda_rel == unit_vec(6, 0));
}

TEST_CASE("adjoint actions are conjugations on a group pair") {
  GroupTable g = dihedral_group(3);
  HopfPair p = s3_a3();

  std::vector<Matrix> lacts = left_adjoint_action(p);
  REQUIRE(lacts.size() == 3);
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t x = 0; x < 6; ++x)
      CHECK(lacts[k].col(x) == unit_vec(6, g.conjugate(k, x)));

  std::vector<Matrix> racts = right_adjoint_action(p);
  REQUIRE(racts.size() == 6);
  for (std::size_t h = 0; h < 6; ++h)
    for (std::size_t x = 0; x < 6; ++x)
      CHECK(racts[h].col(x) == unit_vec(6, g.conjugate(g.inv(h), x)));

  // fixed space of the K-conjugation = centralizer of ι(K)
  Subspace fixed = adjoint_fixed_space(p);
  CHECK(fixed.dim() == 4);
  CHECK(subspace_equal(fixed, centralizer(p.pair)));
}

TEST_CASE("K-plus ideals: normal pairs have HK+ = K+H, non-normal pairs do not") {
  HopfPair pn = s3_a3();
  CHECK(k_plus(pn).dim() == 2);
  Subspace hk = ideal_hk(pn), kh = ideal_kh(pn);
  CHECK(hk.dim() == 4);
  CHECK(kh.dim() == 4);
  CHECK(subspace_equal(hk, kh));

  HopfPair pr = s3_refl();
  CHECK(k_plus(pr).dim() == 1);
  Subspace hk2 = ideal_hk(pr), kh2 = ideal_kh(pr);
  CHECK(hk2.dim() == 3);
  CHECK(kh2.dim() == 3);
  CHECK_FALSE(subspace_equal(hk2, kh2));

  HopfPair pt = group_hopf_pair(dihedral_group(3), {0});
  CHECK(k_plus(pt).dim() == 0);
  CHECK(ideal_hk(pt).dim() == 0);
}

TEST_CASE("normality criteria agree with each other and the group oracle") {
  IntegralData ints = find_integrals(s3_a3());
  NormalityVerdict v = check_normality(s3_a3(), ints);
  CHECK(v.all());
  CHECK(v.agree());

  IntegralData ri = find_integrals(s3_refl());
  NormalityVerdict r = check_normality(s3_refl(), ri);
  CHECK_FALSE(r.adjoint_right);
  CHECK_FALSE(r.ideal_eq);
  CHECK_FALSE(r.central_integral);
  CHECK(r.agree());

  // sweep every subgroup of D8 against the conjugation-closure oracle
  GroupTable d8 = dihedral_group(4);
  for (const std::vector<std::size_t>& sub : all_subgroups(d8)) {
    HopfPair p = group_hopf_pair(d8, sub);
    NormalityVerdict w = check_normality(p, find_integrals(p));
    CHECK(w.agree());
    CHECK(w.all() == is_normal_subgroup(d8, sub));
  }
}

TEST_CASE("schneider maps are bijective for group pairs, any subgroup") {
  {
    HopfPair p = s3_a3();
    SchneiderMaps m = schneider_maps(p, tensor_square(p.pair));
    CHECK(m.dim_h_mod_kh == 2);
    CHECK(m.dim_h_mod_hk == 2);
    CHECK(m.right_map.rows == 12);
    CHECK(m.right_bijective);
    CHECK(m.left_bijective);
  }
  {
    // non-normal: the maps still witness freeness of H over K
    HopfPair p = s3_refl();
    SchneiderMaps m = schneider_maps(p, tensor_square(p.pair));
    CHECK(m.dim_h_mod_kh == 3);
    CHECK(m.dim_h_mod_hk == 3);
    CHECK(m.right_map.rows == 18);
    CHECK(m.right_bijective);
    CHECK(m.left_bijective);
  }
  {
    // K = Q·1: both collapse to the classical Galois map of H
    HopfPair p = group_hopf_pair(dihedral_group(3), {0});
    SchneiderMaps m = schneider_maps(p, tensor_square(p.pair));
    CHECK(m.dim_h_mod_kh == 6);
    CHECK(m.dim_h_mod_hk == 6);
    CHECK(m.right_bijective);
    CHECK(m.left_bijective);
  }
}

TEST_CASE("hopf quotient: Q[S3]//Q[A3] is Q[C2] on the nose") {
  HopfPair p = s3_a3();
  HopfStructure q = hopf_quotient(p, find_integrals(p));
  HopfStructure c2 = group_hopf(cyclic_group(2));
  CHECK(q.alg.dim == 2);
  CHECK(q.alg.sc == c2.alg.sc);
  CHECK(q.alg.unit == c2.alg.unit);
  CHECK(q.comult == c2.comult);
  CHECK(q.counit == c2.counit);
  CHECK(q.antipode == c2.antipode);

  // same for the abelian pair Q[C4] // Q[<r^2>]
  HopfPair p4 = group_hopf_pair(cyclic_group(4), {0, 2});
  HopfStructure q4 = hopf_quotient(p4, find_integrals(p4));
  CHECK(q4.alg.sc == c2.alg.sc);
  CHECK(q4.comult == c2.comult);

  // trivial subgroup: H//k reproduces H entry for entry
  HopfPair pt = group_hopf_pair(dihedral_group(3), {0});
  HopfStructure qt = hopf_quotient(pt, find_integrals(pt));
  HopfStructure h = group_hopf(dihedral_group(3));
  CHECK(qt.alg.sc == h.alg.sc);
  CHECK(qt.comult == h.comult);
  CHECK(qt.antipode == h.antipode);

  // non-normal: the induced structure is not well defined and the audit trips
  HopfPair pr = s3_refl();
  CHECK_THROWS_AS(hopf_quotient(pr, find_integrals(pr)), std::logic_error);
}
