#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfkit/finalg.hpp"

using namespace hopfkit;

TEST_CASE("group algebras validate; trivial group is the field") {
  FinAlgebra k = build_group_algebra(cyclic_group(1));
  CHECK(k.dim == 1);
  CHECK(validate_algebra(k).ok());

  FinAlgebra c2 = build_group_algebra(cyclic_group(2));
  CHECK(c2.mul(unit_vec(2, 1), unit_vec(2, 1)) == unit_vec(2, 0));  // g^2 = 1

  FinAlgebra s3 = build_group_algebra(dihedral_group(3));
  CHECK(validate_algebra(s3).ok());  // all 216 triples
}

TEST_CASE("a perturbed constant breaks associativity with witnesses") {
  FinAlgebra s3 = build_group_algebra(dihedral_group(3));
  s3.c(1, 2, 4) = rat(1, 3);
  AlgebraReport rep = validate_algebra(s3);
  CHECK(!rep.ok());
  for (const std::string& f : rep.failures) CHECK(f.find("associativity") != std::string::npos);
}

TEST_CASE("dual numbers: valid, not semisimple, Gram matrix frozen") {
  FinAlgebra d = dual_number_algebra();
  CHECK(validate_algebra(d).ok());
  CHECK(!is_semisimple(d));
  Matrix g = regular_trace_gram(d);
  CHECK(g.at(0, 0) == 2);
  CHECK(g.at(0, 1) == 0);
  CHECK(g.at(1, 0) == 0);
  CHECK(g.at(1, 1) == 0);
}

TEST_CASE("left and right multiplication operators") {
  FinAlgebra s3 = build_group_algebra(dihedral_group(3));
  Vec x = unit_vec(6, 1), y = unit_vec(6, 3);
  CHECK(s3.left_mult(x).apply(y) == s3.mul(x, y));
  CHECK(s3.right_mult(y).apply(x) == s3.mul(x, y));
  // L is a homomorphism, R an antihomomorphism.
  Vec xy = s3.mul(x, y);
  CHECK(s3.left_mult(xy) == s3.left_mult(x) * s3.left_mult(y));
  CHECK(s3.right_mult(xy) == s3.right_mult(y) * s3.right_mult(x));
}

TEST_CASE("every corpus group algebra is semisimple") {
  for (const GroupTable& g : corpus_groups()) {
    FinAlgebra a = build_group_algebra(g);
    CHECK_MESSAGE(is_semisimple(a), a.name);
  }
}

TEST_CASE("algebra generators are few and generate") {
  FinAlgebra c6 = build_group_algebra(cyclic_group(6));
  CHECK(algebra_generators(c6).size() == 1);
  FinAlgebra s3 = build_group_algebra(dihedral_group(3));
  auto gens = algebra_generators(s3);
  CHECK(gens.size() == 2);
  FinAlgebra k = build_group_algebra(cyclic_group(1));
  CHECK(algebra_generators(k).empty());
}

TEST_CASE("separability idempotent: field, Q[C2] frozen, dual numbers absent") {
  auto ek = separability_idempotent(build_group_algebra(cyclic_group(1)));
  REQUIRE(ek.has_value());
  CHECK(*ek == Vec{Rat(1)});  // 1⊗1

  auto e2 = separability_idempotent(build_group_algebra(cyclic_group(2)));
  REQUIRE(e2.has_value());
  CHECK(*e2 == Vec{rat(1, 2), Rat(0), Rat(0), rat(1, 2)});  // (1⊗1 + g⊗g)/2

  CHECK(!separability_idempotent(dual_number_algebra()).has_value());
}

TEST_CASE("separability idempotent satisfies its equations on nonabelian samples") {
  for (auto build : {dihedral_group(3), dihedral_group(4), dicyclic_group(2)}) {
    FinAlgebra a = build_group_algebra(build);
    auto e = separability_idempotent(a);
    REQUIRE(e.has_value());
    const std::size_t d = a.dim;
    // mu(e) = 1
    Vec mu(d, Rat(0));
    for (std::size_t p = 0; p < d; ++p)
      for (std::size_t q = 0; q < d; ++q)
        if (sgn((*e)[p * d + q]) != 0)
          vec_axpy(mu, (*e)[p * d + q], a.basis_mul(p, q));
    CHECK(mu == a.unit);
    // (x⊗1)e = e(1⊗x) for every basis x, not just generators
    for (std::size_t x = 0; x < d; ++x) {
      Matrix lx = a.left_mult(unit_vec(d, x)), rx = a.right_mult(unit_vec(d, x));
      Vec lhs(d * d, Rat(0)), rhs(d * d, Rat(0));
      for (std::size_t p = 0; p < d; ++p)
        for (std::size_t q = 0; q < d; ++q) {
          const Rat& c = (*e)[p * d + q];
          if (sgn(c) == 0) continue;
          for (std::size_t u = 0; u < d; ++u)
            if (sgn(lx.at(u, p)) != 0) lhs[u * d + q] += c * lx.at(u, p);
          for (std::size_t v = 0; v < d; ++v)
            if (sgn(rx.at(v, q)) != 0) rhs[p * d + v] += c * rx.at(v, q);
        }
      CHECK(lhs == rhs);
    }
  }
}
