#pragma once

#include "prelie2/report.hpp"
#include "prelie2/tensor.hpp"

namespace prelie2 {

struct LieAlgebra {
  Space g;
  MultiMap bracket;  // g ⊗ g → g

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.g.dim == b.g.dim && a.bracket == b.bracket;
  }
};

// rho(x, v) = ρ(x)v
struct LieRep {
  Space V;
  MultiMap rho;  // g ⊗ V → V
};

// Labels: "skew", "Jacobi".
ValidationReport validate_lie(const LieAlgebra& g);
// Labels: "rep": ρ([x,y]) = [ρ(x), ρ(y)].
ValidationReport validate_lie_rep(const LieAlgebra& g, const LieRep& rep);

// ρ*(x) = −ρ(x)ᵀ on the dual space (dual basis).
LieRep dual_rep(const LieAlgebra& g, const LieRep& rep);
// g ⊕ V with [x+u, y+v] = [x,y] + ρ(x)v − ρ(y)u; basis g first, then V.
LieAlgebra semidirect(const LieAlgebra& g, const LieRep& rep);

// Lie-algebra O-operator identity [Tu,Tv] = T(ρ(Tu)v − ρ(Tv)u); label "O".
ValidationReport validate_lie_o_operator(const MultiMap& T, const LieAlgebra& g, const LieRep& rep);

// Label "hom": f[x,y] = [fx, fy].
ValidationReport validate_lie_hom(const MultiMap& f, const LieAlgebra& g, const LieAlgebra& h);

// Operator ρ(x) as a linear map V → V.
MultiMap action_of(const MultiMap& rho, const Vector& x);

}  // namespace prelie2
