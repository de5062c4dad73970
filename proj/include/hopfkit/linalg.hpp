#pragma once

// Exact linear algebra: reduced row echelon form, linear solving, kernels,
// and subspace arithmetic.  Everything here is deterministic; downstream
// modules rely on byte-identical output for identical input.
//
// Pivoting rule: columns are scanned left to right, and the pivot for a
// column is the first remaining row with a nonzero entry there.  Rank, spans
// and solvability are of course basis-independent; the fixed rule only pins
// down *which* representative solutions and bases are produced.
//
// rref() eliminates with OpenMP across rows; rref_serial() is the reference
// implementation kept for testing.  Inner loops skip zeros in the pivot row,
// so sparse systems (permutation-shaped group-algebra constraints) reduce in
// roughly nnz time rather than rows*cols.

#include "hopfkit/matrix.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace hopfkit {

struct Rref {
  Matrix m;                         // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of row r, for r < rank
  std::size_t rank() const { return pivots.size(); }
};

Rref rref(const Matrix& m);
Rref rref_serial(const Matrix& m);

std::size_t rank(const Matrix& m);

// Solves A x = b exactly.  Free variables are set to zero, which makes the
// returned representative deterministic.  nullopt iff the system is
// inconsistent.
std::optional<Vec> solve_linear(const Matrix& A, const Vec& b);

// Simultaneous right-hand sides: returns the matrix X with A X = B, same
// free-variables-zero convention, or nullopt if any column is inconsistent.
std::optional<Matrix> solve_linear_many(const Matrix& A, const Matrix& B);

// Deterministic basis of { x : A x = 0 }: one vector per free column, that
// free variable set to 1, later free variables 0, ordered by free column.
std::vector<Vec> nullspace(const Matrix& A);

// A list of vectors spanning a subspace of Q^ambient.  The stored basis is
// exactly what the caller supplied (so membership coordinates refer to it);
// canonical() derives the RREF-row basis used for structural comparison.
struct Subspace {
  std::size_t ambient = 0;
  std::vector<Vec> basis;

  static Subspace from_vectors(std::size_t ambient, std::vector<Vec> gens);

  std::size_t dim() const { return basis.size(); }
  std::vector<Vec> canonical() const;
  bool contains(const Vec& v) const;
};

// Coordinates of v in the given spanning family (first solution under the
// fixed pivoting rule), or nullopt if v is outside the span.  The family
// need not be independent.
std::optional<Vec> span_membership(const std::vector<Vec>& family, const Vec& v);

Subspace subspace_sum(const Subspace& x, const Subspace& y);
Subspace subspace_intersect(const Subspace& x, const Subspace& y);
bool subspace_equal(const Subspace& x, const Subspace& y);

// The span of a (possibly dependent, possibly empty) family, stored on its
// canonical RREF basis.
Subspace subspace_span(std::size_t ambient, const std::vector<Vec>& gens);

// Quotient of Q^ambient by the span of `killed`, convention
// "rref-complement/v1": the relation rows are put in RREF; the non-pivot
// (free) coordinates, in increasing order, index the quotient basis; the
// section lifts class t to the single ambient coordinate free_cols[t].
// project*section = I.
struct QuotientSpace {
  std::size_t ambient = 0;
  std::size_t dim = 0;
  Matrix project;  // dim x ambient
  Matrix section;  // ambient x dim
  std::vector<std::size_t> free_cols;

  Vec project_vec(const Vec& v) const { return project.apply(v); }
  Vec lift(const Vec& q) const { return section.apply(q); }
};
QuotientSpace quotient_by_span(std::size_t ambient, const std::vector<Vec>& killed);

}  // namespace hopfkit
