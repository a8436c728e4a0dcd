#pragma once

#include "prelie2/lie.hpp"
#include "prelie2/report.hpp"
#include "prelie2/tensor.hpp"

namespace prelie2 {

struct PreLieAlgebra {
  Space A;
  MultiMap mul;  // A ⊗ A → A

  friend bool operator==(const PreLieAlgebra& a, const PreLieAlgebra& b) {
    return a.A.dim == b.A.dim && a.mul == b.mul;
  }
};

// rho(x, v) = ρ(x)v, mu(x, v) = μ(x)v.
struct PreLieRep {
  Space V;
  MultiMap rho;  // A ⊗ V → V
  MultiMap mu;   // A ⊗ V → V

  friend bool operator==(const PreLieRep& a, const PreLieRep& b) {
    return a.V.dim == b.V.dim && a.rho == b.rho && a.mu == b.mu;
  }
};

// An element of C^n(A, V) = Hom(Λ^{n−1}A ⊗ A, V): n slots of A.
struct Cochain {
  std::size_t n = 0;
  MultiMap map;

  friend bool operator==(const Cochain& a, const Cochain& b) {
    return a.n == b.n && a.map == b.map;
  }
};

struct InvariantForm {
  MultiMap omega;  // A ⊗ A → ℚ (dim-1 output)
};

void check_shapes(const PreLieAlgebra& A);

// Label "associator": (x·y)·z − x·(y·z) − (y·x)·z + y·(x·z) ≠ 0.
ValidationReport validate_prelie(const PreLieAlgebra& A);

// [x, y] = x·y − y·x.  Throws InvalidInput for an invalid A.
LieAlgebra sub_adjacent(const PreLieAlgebra& A);
LieAlgebra sub_adjacent_unchecked(const PreLieAlgebra& A);

struct StandardReps {
  PreLieRep left;  // (A; L, R)
  PreLieRep dual;  // (A*; L* − R*, −R*)
};
StandardReps standard_reps(const PreLieAlgebra& A);

PreLieRep trivial_rep(const PreLieAlgebra& A, std::size_t dim);

// Labels: "rho" (ρ is a rep of g(A)), "mu" (the mixed ρ/μ identity).
ValidationReport validate_rep(const PreLieAlgebra& A, const PreLieRep& rep);

// Label "skew": skewness in the first n−1 slots.
ValidationReport validate_cochain(const PreLieAlgebra& A, const PreLieRep& rep, const Cochain& w);
Cochain coboundary(const Cochain& w, const PreLieAlgebra& A, const PreLieRep& rep);
// Label "cocycle" on nonzero entries of dw.
ValidationReport check_cocycle(const Cochain& w, const PreLieAlgebra& A, const PreLieRep& rep);
// Basis of the n-cocycles (n ≥ 1), via a nullspace over skew cochains.
std::vector<Cochain> cocycle_basis(const PreLieAlgebra& A, const PreLieRep& rep, std::size_t n);

// Labels: "skew", "invariant".
ValidationReport validate_invariant_form(const PreLieAlgebra& A, const InvariantForm& w);
// Basis of the skew invariant forms.
std::vector<InvariantForm> invariant_forms(const PreLieAlgebra& A);

// φ(u,v,w) = ω(u·v − v·u, w), with values in the trivial 1-dim rep.
// Throws InvalidInput if ω is not a skew invariant form.
Cochain cocycle_from_form(const PreLieAlgebra& A, const InvariantForm& w);

}  // namespace prelie2
