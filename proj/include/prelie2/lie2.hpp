#pragma once

#include "prelie2/graded.hpp"
#include "prelie2/lie.hpp"
#include "prelie2/report.hpp"

namespace prelie2 {

struct PreLie2Algebra;
struct PreLie2Hom;

// 2-term L∞-algebra g1 --dk--> g0.  l2_01(x, m) stores the bracket of
// x ∈ g0 with m ∈ g1; the bracket with arguments swapped is its negative.
struct Lie2Algebra {
  Space g0, g1;
  MultiMap dk;     // g1 → g0
  MultiMap l2_00;  // g0 ⊗ g0 → g0
  MultiMap l2_01;  // g0 ⊗ g1 → g1
  MultiMap l3;     // g0 ⊗ g0 ⊗ g0 → g1

  static Lie2Algebra zero(std::size_t d0, std::size_t d1);
  friend bool operator==(const Lie2Algebra& a, const Lie2Algebra& b) {
    return a.dk == b.dk && a.l2_00 == b.l2_00 && a.l2_01 == b.l2_01 && a.l3 == b.l3;
  }
};

struct Lie2Hom {
  MultiMap F0;  // g0 → g0'
  MultiMap F1;  // g1 → g1'
  MultiMap F2;  // g0 ⊗ g0 → g1', skew

  friend bool operator==(const Lie2Hom&, const Lie2Hom&) = default;
};

// Representation on a complex V, stored as operators on V-coordinates:
// ρ0(x) acts on both V0 and V1, ρ1(a): V0 → V1, ρ2(x,y): V0 → V1.
struct Lie2Rep {
  MultiMap rho0_V0;  // g0 ⊗ V0 → V0
  MultiMap rho0_V1;  // g0 ⊗ V1 → V1
  MultiMap rho1;     // g1 ⊗ V0 → V1
  MultiMap rho2;     // g0 ⊗ g0 ⊗ V0 → V1

  friend bool operator==(const Lie2Rep&, const Lie2Rep&) = default;
};

void check_shapes(const Lie2Algebra& G);
bool is_strict(const Lie2Algebra& G);
bool is_strict(const Lie2Rep& rep);

// Labels: "skew(l2)", "skew(l3)", "(i)", "(ii)", "(iii)", "(iv)".
ValidationReport validate(const Lie2Algebra& G);
// Labels: "skew(F2)", "(i)".."(iv)".
ValidationReport validate_hom(const Lie2Hom& F, const Lie2Algebra& G, const Lie2Algebra& H);
// Checks that (ρ0, ρ1, ρ2) is a homomorphism into End(V).  Labels:
// "End0" (ρ0(x) does not commute with dM) and "hom:..." from validate_hom.
ValidationReport validate_rep(const Lie2Algebra& G, const TwoTermComplex& V, const Lie2Rep& rep);

struct Lie2FromPreLie2 {
  Lie2Algebra lie2;
  TwoTermComplex complex;  // A1 --dM--> A0
  Lie2Rep rep;             // (L0, L1, L2)
};

// Commutator brackets, cyclic-sum Jacobiator and the left-multiplication
// representation.  Throws InvalidInput if A is not valid.
Lie2FromPreLie2 from_prelie2(const PreLie2Algebra& A);
// Same without validating A (used by validators and tests).
Lie2FromPreLie2 from_prelie2_unchecked(const PreLie2Algebra& A);

// (F0, F1, F2 − F2∘swap)
Lie2Hom hom_from_prelie2hom(const PreLie2Hom& F);

// G ⋉ V for strict G and strict ρ: degree 0 = g0 ⊕ V0, degree 1 = g1 ⊕ V1.
Lie2Algebra semidirect_strict(const Lie2Algebra& G, const TwoTermComplex& V, const Lie2Rep& rep);

// Lie algebra g0 ⋉ g1 of a strict Lie 2-algebra; basis g0 first, then g1.
LieAlgebra semidirect_lie_algebra(const Lie2Algebra& G);

// Dual of a strict representation on dual_complex(V): ρ0* = −ρ0ᵀ on
// each piece, ρ1*(a) = −ρ1(a)ᵀ : V1* → V0*.
Lie2Rep dual_rep(const Lie2Algebra& G, const TwoTermComplex& V, const Lie2Rep& rep);

// Bracket of x ∈ g0 and m ∈ g1 in either order, as Vector helpers.
Vector l2_xm(const Lie2Algebra& G, const Vector& x, const Vector& m);

}  // namespace prelie2
