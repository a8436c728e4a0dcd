#pragma once

#include "prelie2/lie.hpp"
#include "prelie2/lie2.hpp"
#include "prelie2/prelie.hpp"
#include "prelie2/prelie2.hpp"

namespace prelie2 {

// Σ r_ij b_i ⊗ b_j, stored row-major.
struct Tensor2 {
  std::size_t dim = 0;
  std::vector<Rational> coeffs;

  Tensor2() = default;
  explicit Tensor2(std::size_t n) : dim(n), coeffs(n * n) {}
  Tensor2(std::size_t n, std::vector<Rational> c);

  Rational& at(std::size_t i, std::size_t j) { return coeffs[i * dim + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return coeffs[i * dim + j]; }
  bool is_zero() const;

  friend bool operator==(const Tensor2&, const Tensor2&) = default;
  friend Tensor2 operator+(const Tensor2& a, const Tensor2& b);
  friend Tensor2 operator-(const Tensor2& a, const Tensor2& b);
  Tensor2 operator-() const;
};

// The exchange operator: σ(a ⊗ b) = b ⊗ a.
Tensor2 sigma(const Tensor2& r);
bool is_skew(const Tensor2& r);

// [r12,r13] + [r13,r23] + [r12,r23] in g⊗g⊗g.  Label "CYBE" with indices
// (a, b, c) and the single coefficient as difference.
ValidationReport cybe_check(const Tensor2& r, const LieAlgebra& g);
// The triple bracket itself, row-major over (a, b, c).
std::vector<Rational> cybe_value(const Tensor2& r, const LieAlgebra& g);

// T̄ − σ(T̄) in g ⋉_{ρ*} V* (basis g, then V*), T̄ = Σ_u u* ⊗ T(u).
Tensor2 o_operator_to_r(const MultiMap& T, const LieAlgebra& g, const LieRep& rep);
// The Lie algebra g ⋉_{ρ*} V* that o_operator_to_r lives in.
LieAlgebra dual_semidirect(const LieAlgebra& g, const LieRep& rep);

// Σ e_i ⊗ e_i* − e_i* ⊗ e_i on A ⊕ A*.
Tensor2 rrr(std::size_t n);

struct GradedCybeReport {
  bool skew_ok = true;    // (a)
  bool cybe_ok = true;    // (b)
  bool closed_ok = true;  // (c)
  ValidationReport witnesses;  // labels "(a)", "(b)", "(c)"
  bool ok() const { return skew_ok && cybe_ok && closed_ok; }
};

// r lives on g0 ⊕ g1 (basis g0 first) supported on g0⊗g1 ⊕ g1⊗g0; frkr
// lives on g1.  R = r − (𝔡⊗1 + 1⊗𝔡)frkr.  Throws InvalidInput (label
// "support") when r or frkr has entries outside the allowed blocks, and
// std::invalid_argument when G is not strict.
GradedCybeReport graded_cybe_check(const Tensor2& r, const Tensor2& frkr, const Lie2Algebra& G);
// R = r − (𝔡⊗1 + 1⊗𝔡)frkr in flattened coordinates.
Tensor2 graded_R(const Tensor2& r, const Tensor2& frkr, const Lie2Algebra& G);

struct GradedSolution {
  Lie2Algebra G;  // the strict Lie 2-algebra the solution lives in
  Tensor2 r;      // on G.g0 ⊕ G.g1
  Tensor2 frkr;   // on G.g1, always zero here
};

// Ḡ = G ⋉ V* with Ḡ0 = g0 ⊕ V1*, Ḡ1 = g1 ⊕ V0*, and r = T̄0+T̄1 − σ(T̄0+T̄1).
// Requires a strict context (std::invalid_argument otherwise).
GradedSolution solution_from_o_operator(const MultiMap& T0, const MultiMap& T1, const Lie2Algebra& G,
                                        const TwoTermComplex& V, const Lie2Rep& rep);
// Σ(e_i⊗e_i* − e_i*⊗e_i) + Σ(f_j⊗f_j* − f_j*⊗f_j) in 𝒢(A) ⋉ A*.
// Throws std::invalid_argument for non-strict A, InvalidInput for invalid A.
GradedSolution canonical_solution(const PreLie2Algebra& A);

struct BridgeResult {
  PreLie2Algebra prelie2;  // (A, A*, dM, ·) with x·ξ = ad*_x ξ, ξ·x = −R*_x ξ
  Lie2Algebra lie2;        // (g(A), A*, dM, 𝔩2) with 𝔩2(x, ξ) = L*_x ξ
  bool prelie2_valid = false;
  bool lie2_valid = false;
  bool dM_skew = false;
  // (prelie2 valid ⇒ lie2 valid), and when dM is skew the converse too.
  bool equivalence = false;
};
BridgeResult a_astar_bridge(const PreLieAlgebra& A, const MultiMap& dM);

}  // namespace prelie2
