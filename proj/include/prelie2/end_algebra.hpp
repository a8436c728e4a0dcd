#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "prelie2/graded.hpp"
#include "prelie2/lie2.hpp"

namespace prelie2 {

// An element of End⁰: A0 on V0 and A1 on V1 with A0∘dM = dM∘A1.
using EndPair = std::pair<MultiMap, MultiMap>;

// The strict Lie 2-algebra End(V) with its basis made explicit.
//
// Degree 0 coordinates come from a nullspace basis of the flattened
// condition A0∘dM − dM∘A1 = 0, where (A0, A1) is flattened as A0's
// coefficients followed by A1's.  Degree 1 is Hom(V0, V1) with coordinate
// a·dim(V1) + b for the coefficient of V1-basis vector b in φ(e_a).
struct EndAlgebra {
  TwoTermComplex complex;
  Lie2Algebra lie2;
  std::vector<EndPair> basis0;
  std::vector<std::size_t> free_columns;

  // nullopt when the pair does not commute with dM.
  std::optional<Vector> coordinates0(const EndPair& A) const;
  Vector coordinates1(const MultiMap& phi) const;
  EndPair element0(const Vector& coords) const;
  MultiMap element1(const Vector& coords) const;
};

EndAlgebra end_algebra(const TwoTermComplex& V);

// δφ = (dM∘φ, φ∘dM)
EndPair end_differential(const TwoTermComplex& V, const MultiMap& phi);

}  // namespace prelie2
