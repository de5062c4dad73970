#pragma once

// Hopf structures on finite-dimensional algebras: axiom audits, duals,
// integrals, adjoint actions, the three normality criteria, Schneider
// canonical maps, and the quotient H//K.
//
// Conventions.  Δ is a (d·d)×d matrix whose column j is Δ(b_j) in A⊗A
// coordinates (index u*d+v for b_u⊗b_v); ε is a length-d row vector; S is a
// d×d matrix with column j = S(b_j).

#include "hopfkit/extension.hpp"
#include "hopfkit/report.hpp"

#include <cstddef>
#include <vector>

namespace hopfkit {

struct HopfStructure {
  FinAlgebra alg;
  Matrix comult;  // d^2 x d
  Vec counit;     // length d
  Matrix antipode;

  std::size_t dim() const { return alg.dim; }
  Vec comult_vec(const Vec& x) const { return comult.apply(x); }
  Rat counit_of(const Vec& x) const { return vec_dot(counit, x); }
};

// Product in A⊗A: (a⊗b)(c⊗d) = ac⊗bd, extended bilinearly.
Vec tensor_alg_mul(const FinAlgebra& a, const Vec& s, const Vec& t);

// Checks: algebra validity, coassociativity, counit law, Δ and ε
// multiplicative and unital, both antipode laws.  The clause
// "antipode_involutive" (S² = id) is informational: semisimple Hopf algebras
// satisfy it, but a valid Hopf algebra need not, so validity is judged by
// audit_hopf_ok, which ignores that one clause.
AuditReport audit_hopf(const HopfStructure& h);
bool audit_hopf_ok(const AuditReport& r);

// Group Hopf structure: Δg = g⊗g, ε = 1, S(g) = g^{-1}.
HopfStructure group_hopf(const GroupTable& g);

// Dual Hopf algebra: mult = Δᵀ, comult = multᵀ, unit = ε, counit = unit,
// antipode = Sᵀ.  dual(dual(h)) reproduces h entry for entry.
HopfStructure dual_hopf(const HopfStructure& h);

// Sweedler's four-dimensional Hopf algebra over Q: basis {1, g, x, gx} with
// g² = 1, x² = 0, xg = -gx, Δg = g⊗g, Δx = x⊗1 + g⊗x, S(x) = -gx.  The
// smallest Hopf algebra that is neither commutative nor cocommutative; S has
// order 4, and the left and right integral spaces are distinct lines, so no
// two-sided (Haar) integral exists.
HopfStructure sweedler_hopf();

struct HopfPair {
  HopfStructure big;    // H
  HopfStructure small;  // K
  ExtensionPair pair;   // carries the embedding ι
};

// Validates that ι intertwines Δ, ε, S.  Throws with a witness.
HopfPair make_hopf_pair(HopfStructure big, HopfStructure small, Matrix embed);

// (Q[G], Q[N]) with the grouplike structures.
HopfPair group_hopf_pair(const GroupTable& g, const std::vector<std::size_t>& sub);

struct IntegralData {
  Vec lambda_big;    // Λ_H, normalized ε(Λ_H) = dim H
  Vec t_big;         // t_H ∈ H*, normalized t_H(1) = 1
  Vec lambda_small;  // Λ_K in K coordinates, ε(Λ_K) = dim K
  Vec t_small;       // t_K ∈ K*
  Vec lambda_rel;    // Λ with ι(Λ_K)·Λ = Λ_H (deterministic solution)
  Rat index;         // ε(Λ) = dim H / dim K
};

// Solves the two-sided integral systems in H, K and their duals, applies the
// paper normalizations, and factors Λ_H = ι(Λ_K)·Λ.  Throws if an integral
// space is not 1-dimensional or a normalization divides by zero (both signal
// non-semisimple or invalid input), if t_H(Λ_H) ≠ 1, or if the factorization
// fails or has ε(Λ) ≠ dim H / dim K.
IntegralData find_integrals(const HopfPair& p);

// Adjoint actions, one matrix per acting basis element.  The left action is
// by K (per K-basis k: a ↦ ι(k)₍₁₎ a S(ι(k)₍₂₎)) and feeds the fixed-space
// computation below.  The right action is by all of H (per H-basis h:
// a ↦ S(h₍₁₎) a h₍₂₎) and feeds the normality criterion "ι(K) stable under
// the right adjoint H-action" — stability under K alone would be vacuous.
std::vector<Matrix> left_adjoint_action(const HopfPair& p);
std::vector<Matrix> right_adjoint_action(const HopfPair& p);

// Fixed space H^K of the left adjoint K-action.
Subspace adjoint_fixed_space(const HopfPair& p);

struct NormalityVerdict {
  bool adjoint_right = false;    // ι(K) invariant under right adjoint H-action
  bool ideal_eq = false;         // HK⁺ = K⁺H
  bool central_integral = false; // ι(Λ_K) central in H
  bool all() const { return adjoint_right && ideal_eq && central_integral; }
  bool agree() const { return adjoint_right == ideal_eq && ideal_eq == central_integral; }
};
NormalityVerdict check_normality(const HopfPair& p, const IntegralData& ints);

// K⁺ = ker ε_H ∩ ι(K), and the one-sided ideals it generates.
Subspace k_plus(const HopfPair& p);
Subspace ideal_hk(const HopfPair& p);  // H·K⁺
Subspace ideal_kh(const HopfPair& p);  // K⁺·H

struct SchneiderMaps {
  Matrix right_map;  // H⊗_K H → H ⊗ H/K⁺H,  a⊗b ↦ ab₍₁₎ ⊗ class(b₍₂₎)
  Matrix left_map;   // H⊗_K H → H/HK⁺ ⊗ H,  a⊗b ↦ class(a₍₁₎) ⊗ a₍₂₎b
  std::size_t dim_h_mod_kh = 0;  // dim H/K⁺H
  std::size_t dim_h_mod_hk = 0;  // dim H/HK⁺
  bool right_bijective = false;
  bool left_bijective = false;
};
SchneiderMaps schneider_maps(const HopfPair& p, const TensorSquare& t);

// H//K = H/HK⁺ with the induced Hopf structure, for normal pairs only.
// The structure is audited before being returned.
HopfStructure hopf_quotient(const HopfPair& p, const IntegralData& ints);

}  // namespace hopfkit
