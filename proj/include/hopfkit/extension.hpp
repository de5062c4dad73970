#pragma once

// Ring extensions A | B carried as an explicit embedding matrix (duals and
// quotients have no canonical sub-basis, so basis-subset conventions are
// never assumed).  Provides centralizers, the tensor square A⊗_B A with a
// deterministic section, B-central tensors, and B-bimodule endomorphisms of
// A — the raw material for quasibases.
//
// All B-linearity constraints are imposed over a generating set of B only:
// the conditions are linear in b and stable under products (e.g. if x
// commutes past e for b and b', it does for bb'), so generators span the
// same constraint space at a fraction of the system size.

#include "hopfkit/finalg.hpp"

#include <cstddef>
#include <vector>

namespace hopfkit {

struct ExtensionPair {
  FinAlgebra big;    // A
  FinAlgebra small;  // B
  Matrix embed;      // big.dim x small.dim; columns are the images of B's basis

  Vec embed_vec(const Vec& b) const { return embed.apply(b); }
};

// Validates the embedding: injective, unital, multiplicative on all basis
// pairs.  Throws std::invalid_argument with a witness.
ExtensionPair make_extension_pair(FinAlgebra big, FinAlgebra small, Matrix embed);

// (Q[G], Q[N]) with the basis-subset embedding; sub must pass check_subgroup.
ExtensionPair group_algebra_pair(const GroupTable& g, const std::vector<std::size_t>& sub);

// B = Q·1 inside A.
ExtensionPair scalar_pair(FinAlgebra a);

// Images in A of an algebra generating set of B.
std::vector<Vec> small_generator_images(const ExtensionPair& p);

// R = C_A(B) = A^B; the result is checked to be closed under multiplication.
Subspace centralizer(const ExtensionPair& p);

// The algebra structure carried by a multiplicatively closed subspace of A,
// on the given basis.  Throws std::invalid_argument if a basis product or 1
// falls outside the span.
FinAlgebra subalgebra_on_basis(const FinAlgebra& a, const std::vector<Vec>& basis,
                               std::string name);

// A free left-B-module basis a_1..a_n of A (so {ι(b_u)·a_i} is a vector
// space basis of A), found greedily over A's basis elements — left coset
// representatives in the group case.  Throws std::logic_error if dim A is
// not a multiple of dim B or the greedy search cannot complete; both are
// impossible for the Hopf pairs this is used on (Nichols–Zoeller freeness).
std::vector<Vec> free_module_basis(const ExtensionPair& p);

// A⊗_B A presented as a quotient of A⊗A (ambient index p*dimA + q for
// b_p⊗b_q).  Section convention "rref-complement/v1": the relation rows
// {xb⊗y - x⊗by} are put in RREF; the non-pivot ambient coordinates, in
// increasing order, index the quotient basis; the section lifts quotient
// class t to the single ambient coordinate free_cols[t].
struct TensorSquare {
  std::size_t big_dim = 0;  // dim A
  std::size_t ambient = 0;  // (dim A)^2
  std::size_t dim = 0;      // dim A⊗_B A
  Matrix project;           // dim x ambient
  Matrix section;           // ambient x dim;  project * section = I
  std::vector<std::size_t> free_cols;

  Vec project_vec(const Vec& v) const { return project.apply(v); }
  Vec lift(const Vec& q) const { return section.apply(q); }
};

TensorSquare tensor_square(const ExtensionPair& p);

// x·(−) on the first leg / (−)·y on the second leg, as quotient matrices
// (well-defined: both actions preserve the relation span).
Matrix first_leg_left_action(const ExtensionPair& p, const TensorSquare& t, const Vec& x);
Matrix second_leg_right_action(const ExtensionPair& p, const TensorSquare& t, const Vec& y);

// (A⊗_B A)^B in quotient coordinates: b·t = t·b for all b, imposed over
// generators of B.
Subspace b_central_tensors(const ExtensionPair& p, const TensorSquare& t);

// Basis of End of A as a B-B-bimodule: M with M L_b = L_b M and
// M R_b = R_b M for all (generator) b-images.
struct BimoduleHomSpace {
  std::vector<Matrix> basis;
};
BimoduleHomSpace bimodule_endos(const ExtensionPair& p);

}  // namespace hopfkit
