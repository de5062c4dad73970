#pragma once

// Weak bialgebras and weak Hopf algebras.  The comultiplication stays
// multiplicative but Δ(1) need not be 1⊗1 — instead
//
//     1₍₁₎⊗1₍₂₎⊗1₍₃₎ = (Δ(1)⊗1)(1⊗Δ(1)) = (1⊗Δ(1))(Δ(1)⊗1),
//
// and the counit is only weakly multiplicative,
// ε(abc) = ε(ab₍₁₎)ε(b₍₂₎c) = ε(ab₍₂₎)ε(b₍₁₎c).  Four projections
//
//     Π^L(x) = ε(1₍₁₎x)1₍₂₎        Π^R(x) = 1₍₁₎ε(x1₍₂₎)
//     Π̄^L(x) = 1₍₁₎ε(1₍₂₎x)        Π̄^R(x) = ε(x1₍₁₎)1₍₂₎
//
// carve out the counital subalgebras W^L = Im Π^L = Im Π̄^R and
// W^R = Im Π^R = Im Π̄^L.  An antipode satisfies S(x₍₁₎)x₍₂₎ = Π^R(x),
// x₍₁₎S(x₍₂₎) = Π^L(x), S(x₍₁₎)x₍₂₎S(x₍₃₎) = S(x), and is bijective with
// inverse S̄.  A Hopf algebra is the special case Δ(1) = 1⊗1, where every
// projection collapses to unit∘ε.
//
// The running non-Hopf example is the groupoid algebra of the pair groupoid
// on n objects, which is Mₙ(k) with Δ(e_ij) = e_ij⊗e_ij, ε(e_ij) = 1,
// S(e_ij) = e_ji, and Haar integral (1/n)Σ e_ij.
//
// Shape conventions follow HopfStructure: Δ is (d·d)×d with column j the
// expansion of Δ(b_j) over b_u⊗b_v at index u*d+v; ε is a length-d vector;
// S is d×d.

#include "hopfkit/hopf.hpp"
#include "hopfkit/report.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace hopfkit {

struct WeakHopfStructure {
  FinAlgebra alg;
  Matrix comult;  // d^2 x d
  Vec counit;     // length d
  Matrix antipode;

  std::size_t dim() const { return alg.dim; }
};

// A Hopf structure reused verbatim as a weak one.
WeakHopfStructure from_hopf(const HopfStructure& h);

// Groupoid algebra of the pair groupoid on n objects: Mₙ(Q) with basis
// e_ij at index i*n+j.
WeakHopfStructure matrix_groupoid(std::size_t n);

// Transpose construction: mult* = Δᵀ, Δ* = multᵀ, unit* = ε, counit* = unit,
// S* = Sᵀ.  The weak Hopf axioms are self-dual, so the dual of a valid
// structure is valid; dual of dual reproduces the input entry for entry.
WeakHopfStructure dual_weak_hopf(const WeakHopfStructure& w);

// Axioms and the derived identity suite, one clause each: algebra validity,
// coalgebra laws, Δ multiplicative, the weak Δ(1) and ε identities, the
// three antipode axioms, invertibility of S, then the standard consequences
//   Π^L = S∘Π̄^L,  Π^R = S∘Π̄^R,
//   S̄(a₍₂₎)a₍₁₎ = Π̄^R(a),  a₍₂₎S̄(a₍₁₎) = Π̄^L(a),
//   a₍₁₎⊗Π^L(a₍₂₎) = 1₍₁₎a⊗1₍₂₎,  Π^R(a₍₁₎)⊗a₍₂₎ = 1₍₁₎⊗a1₍₂₎,
//   Π^R(a)b = b₍₁₎ε(ab₍₂₎),  aΠ^L(b) = ε(a₍₁₎b)a₍₂₎,
// each checked on every basis element (or pair).  A failing consequence
// clause with passing axioms indicates an inconsistency worth a bug report.
AuditReport audit_weak_hopf(const WeakHopfStructure& w);

struct ProjectionData {
  Matrix piL, piR, piLbar, piRbar;
  Subspace WL, WR;
};
ProjectionData projections(const WeakHopfStructure& w);

// Left integrals solve aℓ = Π^L(a)ℓ, right integrals ra = rΠ^R(a).  The
// Haar element is the unique simultaneous left/right integral normalized by
// Π^L(h) = 1 = Π^R(h); uniqueness is re-checked by solving and a violation
// throws std::logic_error.  When h exists, dual_left is the functional λ
// with h₍₁₎λ(h₍₂₎) = 1, and dual_bases_ok records whether
// w = S̄(h₍₁₎)λ(wh₍₂₎) holds on the whole basis (the Frobenius dual-bases
// identity for λ); absence of λ is reported, not fabricated.
struct WeakIntegralData {
  Subspace left;
  Subspace right;
  std::optional<Vec> haar;
  std::optional<Vec> dual_left;
  bool dual_bases_ok = false;
};
WeakIntegralData find_integrals_weak(const WeakHopfStructure& w);

// Left W-module algebra: an associative unital action with
// w·(ab) = (w₍₁₎·a)(w₍₂₎·b) and w·1 = Π^L(w)·1.
struct WeakAction {
  WeakHopfStructure w;
  FinAlgebra a;
  std::vector<Matrix> mats;  // mats[i]: x ↦ b_i·x

  Vec act(const Vec& wv, const Vec& av) const;
};
AuditReport check_module_algebra(const WeakAction& act);

// matrix_groupoid(n) on the rank-n diagonal algebra, e_ij·f_k = δ_jk f_i.
WeakAction pair_groupoid_action(std::size_t n);
// Q[G] on its dual function algebra by translation, g·p_h = p_{hg⁻¹}.
WeakAction group_translation_action(const GroupTable& g);
// w·x = ε(w)x; a module algebra when the structure is Hopf.
WeakAction trivial_action(const WeakHopfStructure& w, FinAlgebra a);

// Right W*-comodule algebra: ρ is (dim b·dim w)×(dim b), with ρ(b_j)
// expanded over b_i⊗w_k at row i*dim(w)+k.  The field w holds the coacting
// structure itself (for converted actions, the materialized dual).
struct WeakCoaction {
  WeakHopfStructure w;
  FinAlgebra b;
  Matrix rho;
};
AuditReport check_comodule_algebra(const WeakCoaction& co);

// a ↦ Σ (b_i·a)⊗φ_i and back: mutually inverse on the nose, so
// coaction_to_action(action_to_coaction(act)) reproduces the action tensor.
WeakCoaction action_to_coaction(const WeakAction& act);
WeakAction coaction_to_action(const WeakCoaction& co);

// Invariants {x : w·x = Π^L(w)·x} and coinvariants
// {x : ρ(x) = (id⊗Π^L)ρ(x)}; equal subspaces for matched action/coaction.
Subspace action_invariants(const WeakAction& act);
Subspace coaction_coinvariants(const WeakCoaction& co);

// Smash product A#W on A⊗_{W^L}W, where w^L acts on A from the right by
// a·w^L = a(w^L·1) and on W by left multiplication; the product is
// (a#w)(b#v) = a(w₍₁₎·b)#w₍₂₎v with unit 1#1.  The unit law and
// associativity are re-verified on the constructed quotient (logic_error on
// failure).  quot maps ambient index a*dim(W)+w to the balanced class.
struct SmashProduct {
  FinAlgebra alg;
  QuotientSpace quot;
};
SmashProduct smash_product(const WeakAction& act);

// Galois map β(x⊗_B y) = xy₍₀₎⊗y₍₁₎ from A⊗_B A to A⊗W*, for B the
// coinvariants (checked; std::invalid_argument otherwise).  image_ok states
// im β = (A⊗W*)ρ(1), bijective states injectivity (hence bijectivity onto
// the image); the extension is weak Hopf-Galois iff both hold.
struct GaloisData {
  Matrix beta;
  bool image_ok = false;
  bool bijective = false;
};
GaloisData galois_beta(const WeakCoaction& co, const Subspace& bsub);

// π(a#w) = λ_a∘(w·−) from A#W to End(A_B), for B the invariants (checked).
// iso states that π is bijective onto the B-linear endomorphisms;
// multiplicativity is verified on all basis pairs (logic_error on failure).
struct PiData {
  Matrix pi;  // (dim A)² x dim A#W, columns are flattened endomorphisms
  bool iso = false;
};
PiData pi_map(const WeakAction& act, const Subspace& bsub);

// Whether A is finitely generated projective as a right module over the
// embedded subalgebra, by solving for a dual basis {a_i, f_i} with
// Σ a_i ι(f_i(x)) = x and each f_i right-B-linear.
bool module_projective(const ExtensionPair& p);

// One numeric instance of the Galois⇔smash equivalence: converts the action
// to its coaction, matches invariants with coinvariants, builds β and π,
// tests A_B projectivity, and reports whether
//   (β bijective onto the ρ(1)-corner) ⇔ (π iso and A_B f.g. projective).
AuditReport theorem42_report(const WeakAction& act);

}  // namespace hopfkit
