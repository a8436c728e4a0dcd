#pragma once

#include <cstdint>
#include <random>

#include "prelie2/io.hpp"

// Named example structures shared by the tests and the fixture generator.
namespace prelie2::fixtures {

// dim 2: e1·e1 = e1, e1·e2 = e2.
PreLieAlgebra algebra_A();
// dim 2: e1·e1 = e1, e2·e1 = e2; admits a nonzero skew invariant form.
PreLieAlgebra algebra_Omega();
// dim 3: e1·e_i = e_i.
PreLieAlgebra algebra_CM3();

// Strict: A0 = algebra_A, A1 = span{e2}, dM the inclusion.
PreLieCrossedModule cm_B();
PreLie2Algebra fix_B();
// Skeletal with A1 = ℚ and l3 = ω([u,v],w) for an invariant form of algebra_Omega.
InvariantForm form_Omega();
PreLie2Algebra fix_Omega();
// algebra_A in degree 0.
PreLie2Algebra fix_A_lifted();
// Skeletal with a trivial 1-dim rep and a 3-cocycle whose cyclic sum is nonzero.
PreLie2Algebra fix_S3();
// Strict from the ideal span{e2, e3} of algebra_CM3.
PreLieCrossedModule cm_CM3();
PreLie2Algebra fix_CM3();
// Neither strict nor skeletal: fix_B gauge-transformed by gauge_B().
MultiMap gauge_B();
PreLie2Algebra fix_G();
PreLie2Algebra fix_zero(std::size_t d0, std::size_t d1);

// Every valid pre-Lie 2-algebra fixture above, by name.
std::vector<std::pair<std::string, PreLie2Algebra>> prelie2_fixtures();

// The structure B making (id, id, θ) : A → B a homomorphism.
PreLie2Algebra gauge_transform(const PreLie2Algebra& A, const MultiMap& theta);
PreLie2Hom gauge_hom(const PreLie2Algebra& A, const MultiMap& theta);

// Transport along invertible P0 : A0 → A0', P1 : A1 → A1'; (P0, P1, 0) is an isomorphism.
PreLie2Algebra transport(const PreLie2Algebra& A, const MultiMap& P0, const MultiMap& P1);
PreLie2Hom transport_hom(const PreLie2Algebra& A, const MultiMap& P0, const MultiMap& P1);

// Small random data with entries in [-2, 2].
MultiMap random_map(std::vector<Space> inputs, const Space& out, std::mt19937_64& rng);
// Random invertible unitriangular-times-permutation map on s.
MultiMap random_invertible(const Space& s, std::mt19937_64& rng);

struct HomChain {
  std::vector<PreLie2Algebra> objects;  // 4 structures
  std::vector<PreLie2Hom> homs;         // homs[k] : objects[k] → objects[k+1]
};
// Three composable homs starting at A, mixing gauge and transport steps.
HomChain random_hom_chain(const PreLie2Algebra& A, std::mt19937_64& rng);

// O-operators on the Lie 2-algebra of fix_B with its left-multiplication
// representation, found by exhaustive search over entries in {-1, 0, 1}.
// `strict_only` restricts to T2 = 0.  Results exclude zero and identity.
std::vector<OOperator> search_o_operators(bool strict_only);
// First nonzero non-identity hit, preferring T2 ≠ 0.
OOperator fix_O();
// First nonzero non-identity hit with T2 = 0.
OOperator fix_O_strict();

// dM : A* → A for the A ⊕ A* bridge on algebra_Omega; skew.
MultiMap bridge_dM();

struct Mutant {
  std::string field;
  std::size_t flat;  // index into the field's coefficient vector
  Payload payload;
};
// Every single-coefficient +1 perturbation of p.
std::vector<Mutant> plus_one_mutants(const Payload& p);

}  // namespace prelie2::fixtures
