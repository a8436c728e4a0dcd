#pragma once

#include "prelie2/prelie2.hpp"
#include "prelie2/report.hpp"

namespace prelie2 {

// A 2-vector space given by its object space C0 and morphism space C1 with
// linear source, target and identity maps.  The kernel of the source map
// comes with an explicit basis (kernel_incl), so no kernel is ever computed.
// A morphism f : x → y composes with g : y → z as f + g − 1_y.
struct TwoVectorSpace {
  Space objects;    // C0
  Space morphisms;  // C1
  Space kernel;     // Ker(s)
  MultiMap source;       // C1 → C0
  MultiMap target;       // C1 → C0
  MultiMap unit;         // C0 → C1
  MultiMap kernel_incl;  // Ker(s) → C1

  friend bool operator==(const TwoVectorSpace& a, const TwoVectorSpace& b) {
    return a.source == b.source && a.target == b.target && a.unit == b.unit &&
           a.kernel_incl == b.kernel_incl;
  }
};

// Split form: C1 = C0 ⊕ K with s(u+m) = u and t(u+m) = u + dM m.
TwoVectorSpace split_space(const Space& objects, const Space& kernel, const MultiMap& dM);

struct CatPreLie2 {
  TwoVectorSpace space;
  MultiMap star_obj;  // C0 ⊗ C0 → C0
  MultiMap star_mor;  // C1 ⊗ C1 → C1
  MultiMap J;         // C0 ⊗ C0 ⊗ C0 → C1, the Jacobiator morphisms

  friend bool operator==(const CatPreLie2&, const CatPreLie2&) = default;
};

struct CatPreLie2Hom {
  MultiMap Phi0;  // C0 → C0'
  MultiMap Phi1;  // C1 → C1'
  MultiMap Phi2;  // C0 ⊗ C0 → C1', Φ2(u,v) : Φ0u ⋆ Φ0v → Φ0(u ⋆ v)

  friend bool operator==(const CatPreLie2Hom&, const CatPreLie2Hom&) = default;
};

// Composite of composable morphisms, f first.  Throws if t(f) ≠ s(g).
Vector compose_morphisms(const TwoVectorSpace& S, const Vector& f, const Vector& g);
// Ker(s)-coordinates of f − 1_{s(f)}.
Vector kernel_part(const TwoVectorSpace& S, const Vector& f);

// Labels: "space", "functor:unit", "functor:source", "functor:target",
// "functor:compose", "J:source", "J:target", and "S:..." from validating S(C).
ValidationReport validate_cat(const CatPreLie2& C);
// Labels: "functor:source", "functor:target", "functor:unit", "Phi2:source",
// "Phi2:target", and "S:..." from the pre-Lie 2-algebra hom check of S(Φ).
ValidationReport validate_cat_hom(const CatPreLie2Hom& F, const CatPreLie2& C,
                                  const CatPreLie2& D);

// Throws InvalidInput for invalid input.
CatPreLie2 functor_T(const PreLie2Algebra& A);
CatPreLie2Hom functor_T(const PreLie2Hom& F, const PreLie2Algebra& A, const PreLie2Algebra& B);
// Reads the split pieces back; only requires the space maps to be well formed.
PreLie2Algebra functor_S(const CatPreLie2& C);
PreLie2Hom functor_S(const CatPreLie2Hom& F, const CatPreLie2& C, const CatPreLie2& D);

// α : T(S(C)) → C with α0 = id, α1(u+m) = 1_u + m and α2(u,v) = 1_{u⋆v}.
CatPreLie2Hom alpha_iso(const CatPreLie2& C);
// Labels: "iso" (α1 not invertible) plus those of validate_cat_hom.
ValidationReport check_alpha(const CatPreLie2& C);

// Ψ∘Φ with (ΨΦ)2(u,v) = Ψ2(Φ0u, Φ0v) composed after Ψ1(Φ2(u,v)).
// E is the codomain of Ψ.  Throws std::invalid_argument when the two
// morphisms are not composable (only possible for invalid homs).
CatPreLie2Hom compose_cat_hom(const CatPreLie2Hom& Psi, const CatPreLie2Hom& Phi,
                              const CatPreLie2& E);
CatPreLie2Hom identity_cat_hom(const CatPreLie2& C);

// Transports C along an invertible change of morphism coordinates P : C1 → C1.
CatPreLie2 rebase(const CatPreLie2& C, const MultiMap& P);

}  // namespace prelie2
