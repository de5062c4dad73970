#pragma once

// Finite-dimensional unital algebras over Q, given by structure constants:
// b_i * b_j = sum_k c[i][j][k] b_k.  The constants are the single source of
// truth; products of coordinate vectors are contractions against them, so
// group algebras, duals, quotients and smash products all go through the
// same code paths.
//
// Base-change note: the decisions made here (solvability, rank, subspace
// equality, nondegeneracy of the trace form) are rank computations over Q.
// Rank is invariant under field extension, so every verdict holds verbatim
// over any extension field of characteristic zero, in particular over an
// algebraically closed one.  Semisimplicity-by-trace-Gram is a
// characteristic-zero test only.

#include "hopfkit/groups.hpp"
#include "hopfkit/linalg.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace hopfkit {

struct FinAlgebra {
  std::string name;
  std::size_t dim = 0;
  Vec unit;             // coordinates of 1
  std::vector<Rat> sc;  // dim^3 entries, sc[(i*dim + j)*dim + k]

  FinAlgebra() = default;
  FinAlgebra(std::string nm, std::size_t d)
      : name(std::move(nm)), dim(d), unit(d, Rat(0)), sc(d * d * d, Rat(0)) {}

  Rat& c(std::size_t i, std::size_t j, std::size_t k) { return sc[(i * dim + j) * dim + k]; }
  const Rat& c(std::size_t i, std::size_t j, std::size_t k) const {
    return sc[(i * dim + j) * dim + k];
  }

  // b_i * b_j as a coordinate vector (a copy of the constants slice).
  Vec basis_mul(std::size_t i, std::size_t j) const {
    return Vec(sc.begin() + (i * dim + j) * dim, sc.begin() + (i * dim + j + 1) * dim);
  }

  Vec mul(const Vec& x, const Vec& y) const;
  Matrix left_mult(const Vec& x) const;   // L_x: v -> x*v
  Matrix right_mult(const Vec& y) const;  // R_y: v -> v*y
};

struct AlgebraReport {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Checks the unit laws and associativity on all basis triples; every failure
// is listed with its witnessing indices.
AlgebraReport validate_algebra(const FinAlgebra& a);

// Q[G] with 0/1 permutation structure constants.  Validates the table.
FinAlgebra build_group_algebra(const GroupTable& g);

// Q[x]/(x^2), basis {1, x} — the stock non-semisimple example.
FinAlgebra dual_number_algebra();

// X⊗Y with componentwise product; basis pair (i,a) sits at i*Y.dim + a.
FinAlgebra tensor_product_algebra(const FinAlgebra& x, const FinAlgebra& y);

// Gram matrix of (x,y) -> trace(L_{x*y}) on the basis.
Matrix regular_trace_gram(const FinAlgebra& a);

// Nondegeneracy of the regular trace form (characteristic zero only).
bool is_semisimple(const FinAlgebra& a);

// Greedy unital generating set: repeatedly adjoin the first basis vector
// outside the subalgebra generated so far.  Small for group algebras.
std::vector<Vec> algebra_generators(const FinAlgebra& a);

// Separability idempotent e in A⊗A: mu(e) = 1 and (x⊗1)e = e(1⊗x) for all
// x.  The commutation constraint is imposed for x in a generating set only
// (it is multiplicative: if x and y commute past e, so does xy).  Returned
// as a dim^2 vector with e[p*dim+q] the coefficient of b_p⊗b_q, the first
// solution under the fixed pivoting rule; nullopt iff A is not separable.
// With symmetric = true the flip-invariance rows e[p,q] = e[q,p] are added,
// so a solution witnesses strong separability in the Kanzaki sense.
std::optional<Vec> separability_idempotent(const FinAlgebra& a, bool symmetric = false);

}  // namespace hopfkit
