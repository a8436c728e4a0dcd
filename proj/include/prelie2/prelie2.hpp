#pragma once

#include "prelie2/prelie.hpp"
#include "prelie2/report.hpp"

namespace prelie2 {

// 2-term pre-Lie∞-algebra A1 --dM--> A0 with degree-0 products and the
// homotopy l3.  mul10(m, u) is the product m·u.
struct PreLie2Algebra {
  Space A0, A1;
  MultiMap dM;     // A1 → A0
  MultiMap mul00;  // A0 ⊗ A0 → A0
  MultiMap mul01;  // A0 ⊗ A1 → A1
  MultiMap mul10;  // A1 ⊗ A0 → A1
  MultiMap l3;     // A0 ⊗ A0 ⊗ A0 → A1, skew in the first two slots

  static PreLie2Algebra zero(std::size_t d0, std::size_t d1);
  friend bool operator==(const PreLie2Algebra& a, const PreLie2Algebra& b) {
    return a.dM == b.dM && a.mul00 == b.mul00 && a.mul01 == b.mul01 && a.mul10 == b.mul10 &&
           a.l3 == b.l3;
  }
};

struct PreLie2Hom {
  MultiMap F0;  // A0 → A0'
  MultiMap F1;  // A1 → A1'
  MultiMap F2;  // A0 ⊗ A0 → A1'

  friend bool operator==(const PreLie2Hom&, const PreLie2Hom&) = default;
};

void check_shapes(const PreLie2Algebra& A);

// Labels "skew(l3)", "(a1)", "(a2)", "(a3)", "(b1)", "(b2)", "(b3)", "(c)".
ValidationReport validate(const PreLie2Algebra& A);

// Labels "(i)", "(ii)", "(iii-left)", "(iii-right)", "(iv)".
ValidationReport validate_hom(const PreLie2Hom& F, const PreLie2Algebra& A,
                              const PreLie2Algebra& B);

// G∘F with (GF)2(u,v) = G2(F0u, F0v) + G1(F2(u,v)).
PreLie2Hom compose_hom(const PreLie2Hom& G, const PreLie2Hom& F);
PreLie2Hom identity_hom(const PreLie2Algebra& A);

bool is_skeletal(const PreLie2Algebra& A);
bool is_strict(const PreLie2Algebra& A);

// dM = 0, u·m = ρ(u)m, m·u = μ(u)m, l3 given.  Rejects invalid A or rep,
// and a non-closed l3 (report labels "cocycle").
PreLie2Algebra build_skeletal(const PreLieAlgebra& A, const PreLieRep& rep, const Cochain& l3);

struct SkeletalData {
  PreLieAlgebra algebra;
  PreLieRep rep;
  Cochain l3;
};
SkeletalData classify_skeletal(const PreLie2Algebra& A);

// A1 = ℚ, dM = 0, mixed products zero, l3 = ω([u,v], w).
PreLie2Algebra skeletal_from_form(const PreLieAlgebra& A, const InvariantForm& w);

// A concentrated in degree 0 (A1 = 0).
PreLie2Algebra lift(const PreLieAlgebra& A);

// The degree-0 pre-Lie algebra (A0, ·).
PreLieAlgebra degree_zero(const PreLie2Algebra& A);

}  // namespace prelie2
