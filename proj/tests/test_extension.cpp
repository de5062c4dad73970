#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfkit/extension.hpp"

using namespace hopfkit;

namespace {

ExtensionPair s3_a3() { return group_algebra_pair(dihedral_group(3), {0, 1, 2}); }

}  // namespace

TEST_CASE("pair validation rejects a broken embedding") {
  FinAlgebra big = build_group_algebra(cyclic_group(4));
  FinAlgebra small = build_group_algebra(cyclic_group(2));
  Matrix e(4, 2);
  e.at(0, 0) = 1;
  e.at(1, 1) = 1;  // sends g to an order-4 element: not multiplicative
  CHECK_THROWS_AS(make_extension_pair(big, small, e), std::invalid_argument);
  Matrix ok(4, 2);
  ok.at(0, 0) = 1;
  ok.at(2, 1) = 1;  // g -> r^2
  make_extension_pair(big, small, ok);

  CHECK_THROWS_AS(group_algebra_pair(cyclic_group(4), {0, 1}), std::invalid_argument);
}

TEST_CASE("centralizer: scalars, full algebra, and the S3|A3 oracle") {
  FinAlgebra s3 = build_group_algebra(dihedral_group(3));
  // C_A(k) = A
  CHECK(centralizer(scalar_pair(s3)).dim() == 6);
  // C_A(A) = Z(A); dim = number of conjugacy classes of S3 = 3
  ExtensionPair full = group_algebra_pair(dihedral_group(3), {0, 1, 2, 3, 4, 5});
  CHECK(centralizer(full).dim() == 3);
  // C_{QS3}(QA3): A3-conjugation orbits on S3 = {e},{r},{r^2},{reflections} -> 4
  CHECK(centralizer(s3_a3()).dim() == 4);
}

TEST_CASE("tensor square dimensions: B=k, B=A, and the free-extension count") {
  FinAlgebra s3 = build_group_algebra(dihedral_group(3));
  CHECK(tensor_square(scalar_pair(s3)).dim == 36);
  ExtensionPair full = group_algebra_pair(dihedral_group(3), {0, 1, 2, 3, 4, 5});
  CHECK(tensor_square(full).dim == 6);
  CHECK(tensor_square(s3_a3()).dim == 12);  // |G|·[G:N]
}

TEST_CASE("corpus spot check: dim(A⊗_B A) = |G|·[G:N]") {
  struct Probe {
    GroupTable g;
    std::vector<std::size_t> sub;
  };
  std::vector<Probe> probes;
  probes.push_back({dihedral_group(4), subgroup_closure(dihedral_group(4), {4})});
  probes.push_back({dicyclic_group(2), subgroup_closure(dicyclic_group(2), {2})});
  probes.push_back({symmetric_group_s4(), subgroup_closure(symmetric_group_s4(), {1})});
  for (const auto& pr : probes) {
    ExtensionPair p = group_algebra_pair(pr.g, pr.sub);
    CHECK(tensor_square(p).dim == pr.g.order * (pr.g.order / pr.sub.size()));
  }
}

TEST_CASE("project/section contract") {
  ExtensionPair p = s3_a3();
  TensorSquare t = tensor_square(p);
  CHECK((t.project * t.section).is_identity());
  // Relation vectors project to zero: xb⊗y - x⊗by for a sample of triples.
  const std::size_t d = p.big.dim;
  for (std::size_t b : {1UL, 2UL})
    for (std::size_t x : {0UL, 3UL, 5UL})
      for (std::size_t y : {0UL, 1UL, 4UL}) {
        Vec rel(t.ambient, Rat(0));
        Vec xb = p.big.basis_mul(x, b), by = p.big.basis_mul(b, y);
        for (std::size_t u = 0; u < d; ++u)
          if (sgn(xb[u]) != 0) rel[u * d + y] += xb[u];
        for (std::size_t v = 0; v < d; ++v)
          if (sgn(by[v]) != 0) rel[x * d + v] -= by[v];
        CHECK(vec_is_zero(t.project_vec(rel)));
      }
}

TEST_CASE("leg actions push multiplication to the quotient") {
  ExtensionPair p = s3_a3();
  TensorSquare t = tensor_square(p);
  const std::size_t d = p.big.dim;
  // x·(p⊗q)·y computed ambient-side then projected equals action-matrix route.
  Vec x = unit_vec(d, 4), y = unit_vec(d, 2);
  Matrix ax = first_leg_left_action(p, t, x);
  Matrix ay = second_leg_right_action(p, t, y);
  for (std::size_t pp = 0; pp < d; ++pp)
    for (std::size_t qq = 0; qq < d; ++qq) {
      Vec amb(t.ambient, Rat(0));
      amb[pp * d + qq] = 1;
      Vec cls = t.project_vec(amb);
      Vec xpq(t.ambient, Rat(0));
      Vec xp = p.big.mul(x, unit_vec(d, pp)), qy = p.big.mul(unit_vec(d, qq), y);
      for (std::size_t u = 0; u < d; ++u)
        for (std::size_t v = 0; v < d; ++v)
          if (sgn(xp[u]) != 0 && sgn(qy[v]) != 0) xpq[u * d + v] = xp[u] * qy[v];
      CHECK(ay.apply(ax.apply(cls)) == t.project_vec(xpq));
    }
  // The two leg actions commute.
  CHECK(ax * ay == ay * ax);
}

TEST_CASE("B-central tensors and bimodule endos: the isomorphic dimensions") {
  ExtensionPair p = s3_a3();
  TensorSquare t = tensor_square(p);
  Subspace tcent = b_central_tensors(p, t);
  BimoduleHomSpace endos = bimodule_endos(p);
  // Burnside: orbits of A3 acting by n(g⊗h)n^-1 on the 12 classes -> 8.
  CHECK(tcent.dim() == 8);
  CHECK(endos.basis.size() == 8);

  // Each endo really is B-bilinear, against all of B, not just generators.
  for (const Matrix& m : endos.basis)
    for (std::size_t j = 0; j < p.small.dim; ++j) {
      Matrix lb = p.big.left_mult(p.embed.col(j)), rb = p.big.right_mult(p.embed.col(j));
      CHECK(m * lb == lb * m);
      CHECK(m * rb == rb * m);
    }
}

TEST_CASE("B=k and B=A extremes for central tensors and endos") {
  FinAlgebra c2 = build_group_algebra(cyclic_group(2));
  ExtensionPair triv = scalar_pair(c2);
  TensorSquare tt = tensor_square(triv);
  CHECK(b_central_tensors(triv, tt).dim() == 4);
  CHECK(bimodule_endos(triv).basis.size() == 4);

  ExtensionPair full = group_algebra_pair(cyclic_group(2), {0, 1});
  TensorSquare tf = tensor_square(full);
  CHECK(tf.dim == 2);
  CHECK(b_central_tensors(full, tf).dim() == 2);   // solve in the 2-dim quotient
  CHECK(bimodule_endos(full).basis.size() == 2);   // Z(A)-multiplications
}
