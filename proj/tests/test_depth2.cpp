#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "hopfkit/depth2.hpp"
#include "hopfkit/groups.hpp"
#include "hopfkit/hopf.hpp"

using namespace hopfkit;

namespace {

ExtensionPair s3_a3() { return group_algebra_pair(dihedral_group(3), {0, 1, 2}); }

// Frobenius system for Q[C2] over the scalars: E = coefficient of e,
// dual tensor e⊗e + g⊗g, index 2.
FrobeniusSystem c2_scalar_system() {
  FrobeniusSystem fs;
  fs.pair = scalar_pair(build_group_algebra(cyclic_group(2)));
  fs.expectation = Matrix(1, 2);
  fs.expectation.at(0, 0) = 1;
  fs.dual_tensor = Vec(4, Rat(0));
  fs.dual_tensor[0] = 1;
  fs.dual_tensor[3] = 1;
  fs.index = 2;
  return fs;
}

}  // namespace

TEST_CASE("depth two holds for Q[S3] | Q[A3] and fails for a non-normal subgroup") {
  ExtensionPair good = s3_a3();
  auto l = decide_depth2(good, "left");
  auto r = decide_depth2(good, "right");
  REQUIRE(l);
  REQUIRE(r);
  CHECK(validate_certificate(*l, good).ok());
  CHECK(validate_certificate(*r, good).ok());
  CHECK(l->side == "left");
  CHECK(r->side == "right");

  ExtensionPair bad = group_algebra_pair(dihedral_group(3), {0, 3});
  CHECK(!decide_depth2(bad, "left"));
  CHECK(!decide_depth2(bad, "right"));

  CHECK_THROWS_AS(decide_depth2(good, "both"), std::invalid_argument);
}

TEST_CASE("hand-built coset certificate for Q[S3] | Q[A3] validates") {
  ExtensionPair p = s3_a3();
  // coset representatives e (element 0) and s (element 3, an involution):
  // t_i = g_i ⊗ g_i⁻¹, β_i = projection onto the coset g_i·A3
  QuasibaseCertificate cert{"left", {}};
  {
    QuasibasePair q0;
    q0.t = Vec(36, Rat(0));
    q0.t[0 * 6 + 0] = 1;
    q0.beta = Matrix(6, 6);
    for (std::size_t j = 0; j < 3; ++j) q0.beta.at(j, j) = 1;
    cert.pairs.push_back(q0);
    QuasibasePair q1;
    q1.t = Vec(36, Rat(0));
    q1.t[3 * 6 + 3] = 1;
    q1.beta = Matrix(6, 6);
    for (std::size_t j = 3; j < 6; ++j) q1.beta.at(j, j) = 1;
    cert.pairs.push_back(q1);
  }
  AuditReport rep = validate_certificate(cert, p);
  CHECK(rep.ok());

  // perturbing one tensor entry breaks reconstruction with a witness
  cert.pairs[1].t[3 * 6 + 3] = 2;
  AuditReport broken = validate_certificate(cert, p);
  CHECK(!broken.ok());
  CHECK(broken.first_failure() != "");
  const AuditClause* rc = broken.find("reconstruction");
  REQUIRE(rc != nullptr);
  CHECK(!rc->pass);
  CHECK(rc->witness != "");
}

TEST_CASE("every algebra is depth two over the scalars, with the explicit certificate") {
  ExtensionPair p = scalar_pair(build_group_algebra(dihedral_group(3)));
  auto l = decide_depth2(p, "left");
  auto r = decide_depth2(p, "right");
  REQUIRE(l);
  REQUIRE(r);
  CHECK(l->pairs.size() == 6);
  CHECK(r->pairs.size() == 6);
  // t_i = b_i⊗1 on the left, 1⊗b_i on the right
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(l->pairs[i].t[i * 6 + 0] == 1);
    CHECK(r->pairs[i].t[0 * 6 + i] == 1);
  }
}

TEST_CASE("the full pair A | A is depth two on both sides") {
  ExtensionPair p = group_algebra_pair(dihedral_group(3), {0, 1, 2, 3, 4, 5});
  CHECK(decide_depth2(p, "left"));
  CHECK(decide_depth2(p, "right"));
}

TEST_CASE("a left certificate reconstructs random tensors, not just basis slices") {
  ExtensionPair p = s3_a3();
  auto cert = decide_depth2(p, "left");
  REQUIRE(cert);
  TensorSquare t2 = tensor_square(p);

  std::mt19937 rng(1234);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int trial = 0; trial < 4; ++trial) {
    Vec x(6), y(6);
    for (std::size_t i = 0; i < 6; ++i) {
      x[i] = coeff(rng);
      y[i] = coeff(rng);
    }
    Vec ambient(36, Rat(0));
    for (std::size_t a = 0; a < 6; ++a)
      for (std::size_t b = 0; b < 6; ++b) ambient[a * 6 + b] = x[a] * y[b];
    Vec lhs = t2.project_vec(ambient);

    Vec rhs(t2.dim, Rat(0));
    for (const QuasibasePair& qp : cert->pairs) {
      Vec w = p.big.mul(qp.beta.apply(x), y);
      vec_add_to(rhs, second_leg_right_action(p, t2, w).apply(t2.project_vec(qp.t)));
    }
    CHECK(lhs == rhs);
  }
}

TEST_CASE("tower of Q[S3] | Q[A3]: algebra axioms, e1 relations, iota, and A1^B") {
  HopfPair hp = group_hopf_pair(dihedral_group(3), {0, 1, 2});
  FrobeniusSystem fs = build_frobenius_system(hp, find_integrals(hp));
  TowerAlgebra tw = build_tower(fs);
  const FinAlgebra& a = hp.big.alg;

  CHECK(tw.a1.dim == 12);
  CHECK(validate_algebra(tw.a1).ok());

  CHECK(tw.a1.mul(tw.e1, tw.e1) == tw.e1);
  CHECK(tw.mu.apply(tw.e1) == a.unit);
  CHECK(tw.iota.apply(a.unit) == tw.a1.unit);

  // iota is multiplicative and mu undoes it
  for (std::size_t i : {std::size_t{1}, std::size_t{4}})
    for (std::size_t j : {std::size_t{2}, std::size_t{5}}) {
      Vec prod = tw.iota.apply(a.basis_mul(i, j));
      CHECK(prod == tw.a1.mul(tw.iota.col(i), tw.iota.col(j)));
      // μ∘ι₁ multiplies by the index: μ(Σ a xᵢ⊗yᵢ) = a·μ(dual tensor) = 2a
      CHECK(tw.mu.apply(tw.iota.col(i)) == vec_scale(fs.index, unit_vec(6, i)));
    }

  // A1^B: 8-dimensional, matching End_B A_B computed independently
  CHECK(tw.t_space.dim() == 8);
  CHECK(tw.t_space.dim() == bimodule_endos(fs.pair).basis.size());
  // e1 and every iota-image of A3 lie in A1^B
  CHECK(tw.t_space.contains(tw.e1));
  CHECK(tw.t_space.contains(tw.a1.unit));
}

TEST_CASE("tower over the scalars and tower of the full pair") {
  FrobeniusSystem fs = c2_scalar_system();
  REQUIRE(verify_frobenius_identities(fs).ok());
  TowerAlgebra tw = build_tower(fs);
  CHECK(tw.a1.dim == 4);  // trivial quotient: A⊗A
  CHECK(validate_algebra(tw.a1).ok());
  CHECK(tw.t_space.dim() == 4);  // everything commutes with the scalars

  HopfPair full = group_hopf_pair(dihedral_group(3), {0, 1, 2, 3, 4, 5});
  FrobeniusSystem ffs = build_frobenius_system(full, find_integrals(full));
  TowerAlgebra ftw = build_tower(ffs);
  CHECK(ftw.a1.dim == 6);
  CHECK(ftw.e1 == ftw.a1.unit);  // dual tensor of the identity expectation is 1⊗1
  CHECK(ftw.mu.mul(ftw.iota).is_identity());
}

TEST_CASE("theorem 3.5 round trip: quasibases to dual bases and back") {
  HopfPair hp = group_hopf_pair(dihedral_group(3), {0, 1, 2});
  FrobeniusSystem fs = build_frobenius_system(hp, find_integrals(hp));
  AuditReport rep = crosscheck_theorem35(hp.pair, fs, true);
  CHECK(rep.ok());
  if (!rep.ok()) MESSAGE(rep.first_failure());

  FrobeniusSystem sc = c2_scalar_system();
  CHECK(crosscheck_theorem35(sc.pair, sc, true).ok());

  HopfPair c4 = group_hopf_pair(cyclic_group(4), {0, 2});
  FrobeniusSystem fs4 = build_frobenius_system(c4, find_integrals(c4));
  CHECK(crosscheck_theorem35(c4.pair, fs4, true).ok());
  CHECK(crosscheck_theorem35(c4.pair, fs4, false).ok());

  HopfPair bad = group_hopf_pair(dihedral_group(3), {0, 3});
  FrobeniusSystem bfs = build_frobenius_system(bad, find_integrals(bad));
  CHECK_THROWS_AS(crosscheck_theorem35(bad.pair, bfs, true), std::invalid_argument);
}

TEST_CASE("depth two makes A⊗_B A a direct summand of a free module") {
  ExtensionPair p = s3_a3();
  auto data = projective_split_data(p);
  REQUIRE(data);
  CHECK(data->epi.mul(data->section).is_identity());

  ExtensionPair sc = scalar_pair(build_group_algebra(cyclic_group(2)));
  auto sdata = projective_split_data(sc);
  REQUIRE(sdata);
  CHECK(sdata->epi.mul(sdata->section).is_identity());

  // A | A for A = Q[x]/(x²): depth two (via the product-basis fallback,
  // B is not separable) but no split data without a separability idempotent
  FinAlgebra dual = dual_number_algebra();
  ExtensionPair self = make_extension_pair(dual, dual, Matrix::identity(2));
  auto cert = decide_depth2(self, "left");
  REQUIRE(cert);
  CHECK(validate_certificate(*cert, self).ok());
  CHECK(!separability_idempotent(dual));
  CHECK(!projective_split_data(self));
}

TEST_CASE("depth two agrees with normality across all subgroups of D8 and Q8") {
  GroupTable d8 = dihedral_group(4);
  std::size_t normal = 0, abnormal = 0;
  for (const auto& sub : all_subgroups(d8)) {
    ExtensionPair p = group_algebra_pair(d8, sub);
    bool l = decide_depth2(p, "left").has_value();
    bool r = decide_depth2(p, "right").has_value();
    bool n = is_normal_subgroup(d8, sub);
    CHECK(l == n);
    CHECK(r == n);
    (n ? normal : abnormal)++;
  }
  CHECK(normal == 6);    // {e}, Z, ⟨r⟩, two Klein fours, D8 itself
  CHECK(abnormal == 4);  // the four reflection C2 subgroups

  GroupTable q8 = dicyclic_group(2);  // quaternions: every subgroup is normal
  for (const auto& sub : all_subgroups(q8)) {
    ExtensionPair p = group_algebra_pair(q8, sub);
    CHECK(decide_depth2(p, "left").has_value());
    CHECK(decide_depth2(p, "right").has_value());
  }
}
