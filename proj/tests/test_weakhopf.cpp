#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfkit/weakhopf.hpp"

using namespace hopfkit;

namespace {

// Q{1, x, y} with x² = xy = y² = 0 over the dual numbers B = Q[x]/(x²).
// A_B ≅ B ⊕ B/xB, and B/xB is not projective over the local ring B.
ExtensionPair dual_number_overring() {
  FinAlgebra a("Q[x,y]/(x2,xy,y2)", 3);
  a.unit[0] = 1;
  for (std::size_t i = 0; i < 3; ++i) {
    a.c(0, i, i) = 1;
    if (i != 0) a.c(i, 0, i) = 1;
  }
  FinAlgebra b("Q[x]/(x2)", 2);
  b.unit[0] = 1;
  b.c(0, 0, 0) = 1;
  b.c(0, 1, 1) = 1;
  b.c(1, 0, 1) = 1;
  Matrix embed(3, 2);
  embed.at(0, 0) = 1;
  embed.at(1, 1) = 1;
  return make_extension_pair(std::move(a), std::move(b), std::move(embed));
}

}  // namespace

TEST_CASE("matrix groupoids and group Hopf algebras pass the weak audit") {
  for (std::size_t n : {1, 2, 3}) {
    AuditReport rep = audit_weak_hopf(matrix_groupoid(n));
    CAPTURE(n);
    CHECK(rep.ok());
  }
  CHECK(audit_weak_hopf(from_hopf(group_hopf(dihedral_group(3)))).ok());
}

TEST_CASE("sweedler_hopf is a Hopf algebra with non-involutive antipode") {
  HopfStructure h = sweedler_hopf();
  AuditReport rep = audit_hopf(h);
  CHECK(audit_hopf_ok(rep));
  const AuditClause* invol = rep.find("antipode_involutive");
  REQUIRE(invol != nullptr);
  CHECK_FALSE(invol->pass);  // S(x) = -gx, S²(x) = -x

  // S has order exactly 4
  Matrix s2 = h.antipode.mul(h.antipode);
  CHECK_FALSE(s2.is_identity());
  CHECK(s2.mul(s2).is_identity());

  CHECK(audit_weak_hopf(from_hopf(h)).ok());
}

TEST_CASE("a perturbed groupoid counit is caught with a witness") {
  WeakHopfStructure w = matrix_groupoid(2);
  w.counit[1] = 0;  // ε(e_12)
  AuditReport rep = audit_weak_hopf(w);
  CHECK_FALSE(rep.ok());
  const AuditClause* c = rep.find("weak_counit_mult");
  REQUIRE(c != nullptr);
  CHECK_FALSE(c->pass);
  CHECK_FALSE(c->witness.empty());
}

TEST_CASE("a wrong antipode fails the antipode clauses") {
  WeakHopfStructure w = matrix_groupoid(2);
  w.antipode = Matrix::identity(4);  // drops the transpose
  AuditReport rep = audit_weak_hopf(w);
  CHECK_FALSE(rep.ok());
  const AuditClause* c = rep.find("antipode_piR");
  REQUIRE(c != nullptr);
  CHECK_FALSE(c->pass);
}

TEST_CASE("groupoid projections are the two diagonal corners") {
  std::size_t n = 2;
  WeakHopfStructure w = matrix_groupoid(n);
  ProjectionData pd = projections(w);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t t = i * n + j;
      CHECK(pd.piL.col(t) == unit_vec(n * n, i * n + i));  // Π^L(e_ij) = e_ii
      CHECK(pd.piR.col(t) == unit_vec(n * n, j * n + j));  // Π^R(e_ij) = e_jj
    }
  CHECK(pd.piLbar == pd.piL);
  CHECK(pd.piRbar == pd.piR);
  CHECK(pd.piL.mul(pd.piL) == pd.piL);
  CHECK(pd.piR.mul(pd.piR) == pd.piR);
  CHECK(pd.WL.dim() == n);
  CHECK(pd.WR.dim() == n);
  CHECK(subspace_equal(pd.WL, pd.WR));  // both are the diagonal subalgebra
}

TEST_CASE("Hopf projections collapse to unit∘counit") {
  WeakHopfStructure w = from_hopf(group_hopf(dihedral_group(3)));
  ProjectionData pd = projections(w);
  for (std::size_t j = 0; j < 6; ++j) {
    CHECK(pd.piL.col(j) == w.alg.unit);  // ε(g) = 1 for every g
    CHECK(pd.piR.col(j) == w.alg.unit);
  }
  CHECK(pd.WL.dim() == 1);
  CHECK(pd.WR.dim() == 1);
}

TEST_CASE("the dual of a weak Hopf algebra is one, and double dual returns") {
  WeakHopfStructure w = matrix_groupoid(2);
  WeakHopfStructure d = dual_weak_hopf(w);
  CHECK(audit_weak_hopf(d).ok());
  WeakHopfStructure dd = dual_weak_hopf(d);
  CHECK(dd.alg.sc == w.alg.sc);
  CHECK(dd.alg.unit == w.alg.unit);
  CHECK(dd.comult == w.comult);
  CHECK(dd.counit == w.counit);
  CHECK(dd.antipode == w.antipode);
}

TEST_CASE("Haar integral of a matrix groupoid is the normalized all-ones matrix") {
  WeakHopfStructure w = matrix_groupoid(2);
  WeakIntegralData ints = find_integrals_weak(w);
  // integrals have constant rows resp. columns
  CHECK(ints.left.dim() == 2);
  CHECK(ints.right.dim() == 2);
  REQUIRE(ints.haar.has_value());
  CHECK(*ints.haar == Vec(4, rat(1, 2)));
  REQUIRE(ints.dual_left.has_value());
  CHECK(*ints.dual_left == Vec{Rat(2), Rat(0), Rat(0), Rat(2)});  // n·tr
  CHECK(ints.dual_bases_ok);

  WeakIntegralData one = find_integrals_weak(matrix_groupoid(1));
  REQUIRE(one.haar.has_value());
  CHECK(*one.haar == Vec{Rat(1)});
  CHECK(one.dual_bases_ok);
}

TEST_CASE("Haar integral of Q[G] is the group average") {
  GroupTable g = dihedral_group(3);
  WeakIntegralData ints = find_integrals_weak(from_hopf(group_hopf(g)));
  CHECK(ints.left.dim() == 1);
  CHECK(ints.right.dim() == 1);
  REQUIRE(ints.haar.has_value());
  CHECK(*ints.haar == Vec(6, rat(1, 6)));
  REQUIRE(ints.dual_left.has_value());
  Vec lambda(6, Rat(0));
  lambda[0] = 6;  // |G|·(coefficient of e)
  CHECK(*ints.dual_left == lambda);
  CHECK(ints.dual_bases_ok);
}

TEST_CASE("sweedler_hopf has distinct integral lines and no Haar element") {
  WeakIntegralData ints = find_integrals_weak(from_hopf(sweedler_hopf()));
  CHECK(ints.left.dim() == 1);
  CHECK(ints.right.dim() == 1);
  CHECK(ints.left.contains(Vec{Rat(0), Rat(0), Rat(1), Rat(1)}));    // x + gx
  CHECK(ints.right.contains(Vec{Rat(0), Rat(0), Rat(1), Rat(-1)}));  // x - gx
  CHECK(subspace_intersect(ints.left, ints.right).dim() == 0);
  CHECK_FALSE(ints.haar.has_value());
}

TEST_CASE("the standard actions are weak module algebras") {
  CHECK(check_module_algebra(pair_groupoid_action(2)).ok());
  CHECK(check_module_algebra(pair_groupoid_action(3)).ok());
  CHECK(check_module_algebra(group_translation_action(dihedral_group(3))).ok());
  HopfStructure c2 = group_hopf(cyclic_group(2));
  CHECK(check_module_algebra(trivial_action(from_hopf(c2), c2.alg)).ok());

  WeakAction bad = pair_groupoid_action(2);
  bad.mats[1].at(0, 0) += 1;
  AuditReport rep = check_module_algebra(bad);
  CHECK_FALSE(rep.ok());
  CHECK_FALSE(rep.first_failure().empty());
}

TEST_CASE("actions and coactions convert back and forth exactly") {
  for (WeakAction act : {pair_groupoid_action(2),
                         group_translation_action(cyclic_group(4))}) {
    WeakCoaction co = action_to_coaction(act);
    CHECK(check_comodule_algebra(co).ok());
    WeakAction back = coaction_to_action(co);
    REQUIRE(back.mats.size() == act.mats.size());
    for (std::size_t i = 0; i < act.mats.size(); ++i) CHECK(back.mats[i] == act.mats[i]);
    CHECK(subspace_equal(action_invariants(act), coaction_coinvariants(co)));
  }
}

TEST_CASE("invariants of the standard actions are the scalars") {
  WeakAction pg = pair_groupoid_action(3);
  Subspace inv = action_invariants(pg);
  CHECK(inv.dim() == 1);
  CHECK(inv.contains(pg.a.unit));

  WeakAction tr = group_translation_action(dihedral_group(3));
  Subspace tinv = action_invariants(tr);
  CHECK(tinv.dim() == 1);
  CHECK(tinv.contains(Vec(6, Rat(1))));  // constant functions
}

TEST_CASE("smash product over a Hopf algebra is the classical one") {
  GroupTable g = cyclic_group(2);
  WeakAction act = group_translation_action(g);
  SmashProduct sp = smash_product(act);
  CHECK(sp.quot.dim == 4);  // no ⊗_{W^L} relations when W^L = Q·1
  CHECK(sp.alg.dim == 4);

  // (p_0 # g)(p_1 # e) = p_0(g·p_1) # g = p_0 p_{1·g} # g = p_0 # g
  auto idx = [](std::size_t a, std::size_t w) { return a * 2 + w; };
  CHECK(sp.alg.basis_mul(idx(0, 1), idx(1, 0)) == unit_vec(4, idx(0, 1)));
  // (p_0 # g)(p_0 # e) = p_0 p_1 # g = 0
  CHECK(sp.alg.basis_mul(idx(0, 1), idx(0, 0)) == Vec(4, Rat(0)));
}

TEST_CASE("smash product of the pair groupoid action has dimension n²") {
  for (std::size_t n : {2, 3}) {
    SmashProduct sp = smash_product(pair_groupoid_action(n));
    CAPTURE(n);
    CHECK(sp.quot.ambient == n * n * n);
    CHECK(sp.alg.dim == n * n);
  }
}

TEST_CASE("the pair groupoid and translation extensions are weak Hopf Galois") {
  for (std::size_t n : {2, 3}) {
    WeakAction act = pair_groupoid_action(n);
    WeakCoaction co = action_to_coaction(act);
    GaloisData gd = galois_beta(co, coaction_coinvariants(co));
    CAPTURE(n);
    CHECK(gd.bijective);
    CHECK(gd.image_ok);
    CHECK(pi_map(act, action_invariants(act)).iso);
  }
  WeakAction act = group_translation_action(cyclic_group(4));
  WeakCoaction co = action_to_coaction(act);
  GaloisData gd = galois_beta(co, coaction_coinvariants(co));
  CHECK(gd.bijective);
  CHECK(gd.image_ok);
  CHECK(pi_map(act, action_invariants(act)).iso);
}

TEST_CASE("the trivial action is not Galois and π is not onto") {
  HopfStructure c2 = group_hopf(cyclic_group(2));
  WeakAction act = trivial_action(from_hopf(c2), c2.alg);
  Subspace inv = action_invariants(act);
  CHECK(inv.dim() == 2);  // every element is invariant

  WeakCoaction co = action_to_coaction(act);
  GaloisData gd = galois_beta(co, coaction_coinvariants(co));
  CHECK(gd.bijective);  // A⊗_A A ≅ A injects as A⊗1
  CHECK_FALSE(gd.image_ok);
  CHECK_FALSE(pi_map(act, inv).iso);
}

TEST_CASE("module projectivity: free and scalar extensions pass, B/xB summand fails") {
  CHECK(module_projective(group_algebra_pair(dihedral_group(3), {0, 1, 2})));
  CHECK(module_projective(scalar_pair(group_hopf(dihedral_group(3)).alg)));
  CHECK_FALSE(module_projective(dual_number_overring()));
}

TEST_CASE("theorem42_report holds on Galois and non-Galois instances") {
  CHECK(theorem42_report(pair_groupoid_action(2)).ok());
  CHECK(theorem42_report(pair_groupoid_action(3)).ok());
  CHECK(theorem42_report(group_translation_action(cyclic_group(4))).ok());
  CHECK(theorem42_report(
            group_translation_action(direct_product(cyclic_group(2), cyclic_group(2))))
            .ok());

  // trivial action: both sides of the biconditional are false
  HopfStructure c2 = group_hopf(cyclic_group(2));
  AuditReport rep = theorem42_report(trivial_action(from_hopf(c2), c2.alg));
  CHECK(rep.ok());
  const AuditClause* bic = rep.find("galois_iff_smash_endos");
  REQUIRE(bic != nullptr);
  CHECK(bic->pass);
  CHECK(bic->witness.find("image_ok=0") != std::string::npos);
}
