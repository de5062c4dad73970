#pragma once

// The Frobenius system of a Hopf subalgebra pair H | K and everything built
// on top of it: the conditional expectation E(a) = t_H(a₍₁₎ι(Λ_K))a₍₂₎ with
// dual-bases tensor S(Λ₍₂₎)⊗Λ₍₁₎, the symmetric-Markov audit, the smash
// product H#K with its untwisting isomorphism onto H⊗K, the Morita
// pairings through the adjoint action, and the flipped expectation
// Ē = S∘E∘S.
//
// E is stored in K coordinates (small.dim × big.dim).  The dual tensor is
// stored as one chosen lift in H⊗H of the class in H⊗_K H; every identity
// evaluated from it is lift-independent because E is K-bilinear, so kernel
// elements xb⊗y − x⊗by evaluate equally on both sides.

#include "hopfkit/hopf.hpp"

#include <utility>
#include <vector>

namespace hopfkit {

struct FrobeniusSystem {
  ExtensionPair pair;
  Matrix expectation;  // E: big → small, in K coordinates
  Vec dual_tensor;     // lift of Σᵢ xᵢ⊗yᵢ, length big.dim², index p*dim+q
  Rat index;           // ε(Λ) = dim H / dim K
};

// Builds E and the dual tensor from the integrals and verifies the whole
// contract: E lands in ι(K), is K-bilinear (over generators of K), both
// Frobenius identities hold, and μ(dual_tensor) = index·1.  Throws
// std::logic_error on any violation (signals inconsistent integral data).
FrobeniusSystem build_frobenius_system(const HopfPair& p, const IntegralData& ints);

// a = Σᵢ xᵢE(yᵢa) and a = Σᵢ E(axᵢ)yᵢ on every basis element, clauses
// "left_identity" / "right_identity" with the first failing basis index.
AuditReport verify_frobenius_identities(const FrobeniusSystem& fs);

// Deterministic Σᵢ xᵢ⊗yᵢ decomposition of the dual tensor: rank
// factorization of its dim×dim coefficient matrix (pivot columns give the
// xᵢ, rref rows the yᵢ).
std::pair<std::vector<Vec>, std::vector<Vec>> dual_bases_lists(const FrobeniusSystem& fs);

// Symmetric-Markov audit, one clause per condition in the definition:
// E(1)=1, μ and flip∘μ of the dual tensor both equal index·1, H free over
// K, R = C_H(K) strongly separable (semisimplicity plus a symmetric
// idempotent; if only a non-symmetric idempotent exists the strong clause
// fails with a witness saying so), E commutes with R, t_K∘E = t_H with t_H
// a normalized nondegenerate trace, t_H nondegenerate on R, and R equal to
// the left-adjoint fixed space.
struct MarkovAudit {
  AuditReport report;
  Rat index;
  bool ok() const { return report.ok(); }
};
MarkovAudit markov_audit(const HopfPair& p, const IntegralData& ints, const FrobeniusSystem& fs);

// Smash product H#K on H⊗K for the left adjoint action:
// (a⊗x)(b⊗y) = a x₍₁₎ b S(x₍₂₎) ⊗ x₍₃₎y.  Basis pair (a,x) at a*dimK + x.
FinAlgebra smash_product_hk(const HopfPair& p);

// The untwisting isomorphism H#K → H⊗K, a#x ↦ a x₍₁₎ ⊗ x₍₂₎, with inverse
// a⊗x ↦ a S(x₍₁₎) # x₍₂₎.  Both composites and multiplicativity on every
// basis pair are checked; throws std::logic_error on failure.
struct SmashUntwist {
  Matrix forward;
  Matrix inverse;
};
SmashUntwist untwist_smash(const HopfPair& p);

// The Morita pairings through Λ_K: [a,b] = a(Λ₍₁₎▷b)⊗Λ₍₂₎ into H#K and
// (a,b) = Λ_K ▷ (ab) into R, as matrices on basis pairs (column i*dim+j).
// paren_onto_r records that every (a,b) lands in R and they span it;
// paren_of_units is (1,1) = (dim K)·1.
struct MoritaPairings {
  Matrix bracket;  // (dimH·dimK) × dimH²
  Matrix paren;    // dimH × dimH²
  Vec paren_of_units;
  bool paren_onto_r = false;
};
MoritaPairings morita_pairings(const HopfPair& p, const IntegralData& ints);

// Ē = S∘E∘S as a dim H × dim H matrix (values inside ι(K)), computed both
// as the matrix product and from Ē(a) = a₍₁₎t_H(ι(Λ_K)a₍₂₎).  If the two
// disagree, throws std::logic_error naming which precondition broke
// (S(Λ_K) ≠ Λ_K or t_H∘S ≠ t_H); also throws if the image leaves ι(K).
Matrix ebar(const HopfPair& p, const IntegralData& ints, const FrobeniusSystem& fs);

}  // namespace hopfkit
