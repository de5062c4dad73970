#pragma once

// Depth two for an extension A | B, decided by linear solvability of the
// quasibase equation and witnessed by independently re-checkable
// certificates.
//
// Left depth two: there are B-central tensors t_i in (A⊗_B A)^B and
// B-bimodule maps β_i in End_B A_B with
//
//     x ⊗_B y  =  Σ_i t_i · β_i(x) y        for all x, y in A,
//
// the dot being the right A-action on the second leg.  Setting y = 1
// reduces this to  x⊗1 = Σ_i t_i · β_i(x);  the full equation is restored
// by applying the right action of y to both sides, which are A-linear in y
// (the restoration lemma — validation nevertheless re-checks every basis
// pair).  The right-handed variant  x ⊗ y = Σ_j x γ_j(y) · u_j  mirrors
// this with the left action on the first leg and the x = 1 slice.
//
// The decision runs in two stages.  First, solvability of
// x⊗1 ∈ span{ t · a : t B-central, a in A } is tested — necessary, since
// β_i(x) is just some element of A.  When B is separable this is also
// sufficient: any solution x ↦ φ_a(x) can be averaged through a
// separability idempotent e = Σ b_p⊗c_p of B,
//
//     β_a(x) := Σ_{p,q} b_p φ_a(c_p x b_q) c_q ,
//
// which is a B-bimodule map (Casimir property of e) and still satisfies
// the y = 1 slice (B-centrality of t_a moves the b_p to the first leg and
// Σ_q b_q ⊗_B c_q = 1⊗1 collapses the q-sum).  Scalar B short-circuits to
// the explicit certificate t_i = b_i⊗1, β_i(x) = x_i·1.  For a
// non-separable B the averaging argument is unavailable and the decision
// falls back to literal solvability over the product basis of
// (A⊗_B A)^B × End_B A_B — exact but far larger, fine for the hand-built
// hosts where it occurs.

#include "hopfkit/frobenius.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace hopfkit {

// One quasibase pair.  t is an ambient (dim A)² lift of the B-central
// tensor under the "rref-complement/v1" section convention of
// TensorSquare; beta is the endomorphism matrix on A's basis.
struct QuasibasePair {
  Vec t;
  Matrix beta;
};

struct QuasibaseCertificate {
  std::string side;  // "left" or "right"
  std::vector<QuasibasePair> pairs;
};

// Decides one-sided depth two.  Absence of a certificate is the negative
// answer; every returned certificate has been validated.  Pair count is at
// most dim (A⊗_B A)^B on the separable path and at most
// dim (A⊗_B A)^B · dim End_B A_B on the fallback path.
std::optional<QuasibaseCertificate> decide_depth2(const ExtensionPair& p,
                                                  const std::string& side);

// Same decision over a precomputed presentation of A⊗_B A; callers deciding
// both sides of one pair reuse a single tensor_square this way.
std::optional<QuasibaseCertificate> decide_depth2(const ExtensionPair& p, const std::string& side,
                                                  const TensorSquare& t2);

// Re-checks a certificate from scratch: B-centrality of each t, B-bilinearity
// of each beta, and exact reconstruction of x ⊗_B y on all basis pairs.
// Clauses: "side", "shapes", "b_centrality", "b_bilinearity",
// "reconstruction", each with a witness on failure.
AuditReport validate_certificate(const QuasibaseCertificate& c, const ExtensionPair& p);

// The tower algebra A₁ = A⊗_B A with the E-multiplication
// (x e₁ y)(x' e₁ y') = x E(y x') e₁ y', its cyclic generator e₁ = 1⊗1, the
// Frobenius homomorphism E_A = μ back to A, the unital embedding
// ι₁: a ↦ Σ_i a x_i e₁ y_i (so ι₁(1) is the unit of A₁), and the
// centralizer T = A₁^B.  Coordinates on A₁ are quotient coordinates of the
// stored TensorSquare.
struct TowerAlgebra {
  TensorSquare square;
  FinAlgebra a1;
  Vec e1;
  Matrix mu;         // E_A: A₁ → A, dim A x dim A₁
  Matrix iota;       // ι₁: A → A₁, dim A₁ x dim A
  Subspace t_space;  // T = A₁^B
};

// Builds the tower from a verified Frobenius system (throws
// std::invalid_argument otherwise).  Checks that x⊗y ↦ λ_x∘E∘λ_y into
// End A is injective with image dimension dim A₁, and that
// e₁ a e₁ = E(a) e₁ = e₁ E(a) on a basis; violations throw
// std::logic_error.  Materializes dense structure constants — meant for
// small pairs; crosscheck_theorem35 below works with on-demand products
// instead.
TowerAlgebra build_tower(const FrobeniusSystem& fs);

// Theorem 3.5 round trip between quasibases and dual bases of E_A in T.
// Forward: left quasibases (t_i, β_i) yield the T-dual-bases
// c_i = t_i, d_i = Σ_j β_i(x_j) e₁ y_j, and right quasibases (γ_k, u_k)
// yield Σ_j x_j e₁ γ_k(y_j), u_k; membership in T and both dual-bases
// identities Σ c E_A(d w) = w = Σ E_A(w c) d are verified.  Converse:
// T-dual-bases are found directly — the canonical pair {x_i e₁}, {e₁ y_i}
// is used when it already lies in T, otherwise a linear system over
// T⊗T is solved (skipped with solve_converse = false on pairs where that
// system is too large; the forward-produced dual bases then feed the
// conversion) — and converted back to left quasibases c¹⊗c², d¹E(d²−) and
// right quasibases E(−c¹)c², d, each validated as a fresh certificate.
// Throws std::invalid_argument unless the pair is depth two on both sides.
AuditReport crosscheck_theorem35(const ExtensionPair& p, const FrobeniusSystem& fs,
                                 bool solve_converse = true);

// Same round trip over certificates and a presentation the caller has already
// computed (both sides), sparing a sweep over a corpus a second decision and
// a second quotient construction per pair.
AuditReport crosscheck_theorem35(const ExtensionPair& p, const FrobeniusSystem& fs,
                                 bool solve_converse, const QuasibaseCertificate& left,
                                 const QuasibaseCertificate& right, const TensorSquare& t2);

// Exhibits A⊗_B A as a retract of the free module (A⊗B)ⁿ, n the
// certificate pair count: epi (v_i) ↦ Σ t_i·μ(v_i) with section
// x⊗y ↦ (β_i(x) y e¹ ⊗ e²)_i through a separability idempotent e of B.
// epi * section = identity, checked exactly.  Absent when the pair is not
// left depth two or B has no separability idempotent.
struct SplitEpiData {
  Matrix epi;      // dim A⊗_B A  x  n·dim A·dim B
  Matrix section;  // n·dim A·dim B  x  dim A⊗_B A
};
std::optional<SplitEpiData> projective_split_data(const ExtensionPair& p);

}  // namespace hopfkit
