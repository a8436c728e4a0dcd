#pragma once

#include "prelie2/lie.hpp"
#include "prelie2/prelie.hpp"
#include "prelie2/prelie2.hpp"

namespace prelie2 {

// ρ and μ both take the A0 argument first: μ(u)m = mu(u, m).
struct PreLieCrossedModule {
  PreLieAlgebra A0alg;
  PreLieAlgebra A1alg;
  MultiMap dM;  // A1 → A0
  MultiMap rho;  // A0 ⊗ A1 → A1
  MultiMap mu;   // A0 ⊗ A1 → A1

  friend bool operator==(const PreLieCrossedModule& a, const PreLieCrossedModule& b) {
    return a.A0alg == b.A0alg && a.A1alg == b.A1alg && a.dM == b.dM && a.rho == b.rho &&
           a.mu == b.mu;
  }
};

struct LieCrossedModule {
  LieAlgebra h0, h1;
  MultiMap dt;   // h1 → h0
  MultiMap phi;  // h0 ⊗ h1 → h1
};

void check_shapes(const PreLieCrossedModule& cm);

// Labels: "A0:...", "A1:..." (pre-Lie axioms), "dM hom", "action:rho",
// "action:mu", "(C1)-rho", "(C1)-mu", "(C2)-rho", "(C2)-mu", and the
// redundant consequences "derived:crossed1", "derived:crossed2".
ValidationReport validate(const PreLieCrossedModule& cm);

// Labels: "h0:...", "h1:...", "dt:hom", "phi:rep", "derivation",
// "equivariance" (dt φ_X A = [X, dt A]), "Peiffer" (φ_{dt A} B = [A, B]).
ValidationReport validate(const LieCrossedModule& cm);

// u·m = ρ(u)m, m·u = μ(u)m, l3 = 0.  Throws InvalidInput for an invalid cm.
PreLie2Algebra to_strict(const PreLieCrossedModule& cm);
// m·₁n = (dM m)·n.  Throws std::invalid_argument when l3 ≠ 0 and
// InvalidInput when A is not valid.
PreLieCrossedModule from_strict(const PreLie2Algebra& A);

// A0 ⊕ A1 with (u+m)·(v+n) = u·v + ρ(u)n + μ(v)m + m·₁n.
PreLieAlgebra direct_sum_prelie(const PreLieCrossedModule& cm);

// (g(A0), g(A1), dM, ρ − μ)
LieCrossedModule sub_adjacent_crossed(const PreLieCrossedModule& cm);

// h0 ⋉_φ h1 as a Lie algebra, basis h0 first.
LieAlgebra flatten(const LieCrossedModule& cm);

// The crossed module (A, B, inclusion, left/right products) of an ideal B
// spanned by the given basis vectors of A.  Throws std::invalid_argument
// if they do not span an ideal.
PreLieCrossedModule ideal_crossed_module(const PreLieAlgebra& A, const std::vector<std::size_t>& basis);

}  // namespace prelie2
