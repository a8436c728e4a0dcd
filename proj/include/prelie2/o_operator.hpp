#pragma once

#include "prelie2/lie2.hpp"
#include "prelie2/prelie2.hpp"

namespace prelie2 {

// (T0, T1, T2) together with the Lie 2-algebra and representation it lives on.
struct OOperator {
  Lie2Algebra G;
  TwoTermComplex V;
  Lie2Rep rep;
  MultiMap T0;  // V0 → g0
  MultiMap T1;  // V1 → g1
  MultiMap T2;  // V0 ⊗ V0 → g1, skew
};

void check_shapes(const OOperator& O);

// Labels "G:..." and "rep:..." from validating the context.
ValidationReport validate_context(const OOperator& O);

// Labels: "chain", "skew(T2)", "(i)", "(ii)", "(iii)", and "(iii')" for the
// rewriting of (iii) through the induced products and l3.
ValidationReport validate_o(const OOperator& O);

// u·v = ρ0(T0u)v, u·m = ρ0(T0u)m, m·u = ρ1(T1m)u,
// l3(v1,v2,v3) = −ρ1(T2(v1,v2))v3 − ρ2(T0v1,T0v2)v3.
// Throws InvalidInput when the context or T is invalid.
PreLie2Algebra induced_prelie2(const OOperator& O);
PreLie2Algebra induced_prelie2_unchecked(const OOperator& O);

// (T0, T1, T2) as a map of Lie 2-algebras from the one induced on V to G.
Lie2Hom induced_hom(const OOperator& O);

// (id, id, 0) on the Lie 2-algebra of A with its left-multiplication rep.
OOperator identity_o_operator(const PreLie2Algebra& A);

// Strict case only (std::invalid_argument otherwise): T0 ⊕ T1 is an
// O-operator on g0 ⋉ g1 for ρ0 ⊕ ρ1, and T0∘dM = 𝔡∘T1.
bool flatten_check(const MultiMap& T0, const MultiMap& T1, const Lie2Algebra& G,
                   const TwoTermComplex& V, const Lie2Rep& rep);

// ρ0 ⊕ ρ1 on V0 ⊕ V1 as a representation of g0 ⋉ g1.
LieRep flattened_rep(const Lie2Algebra& G, const TwoTermComplex& V, const Lie2Rep& rep);
// T0 ⊕ T1 : V0 ⊕ V1 → g0 ⊕ g1.
MultiMap flattened_map(const MultiMap& T0, const MultiMap& T1);

}  // namespace prelie2
