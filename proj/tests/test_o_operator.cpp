#include <gtest/gtest.h>

#include "common.hpp"

using namespace prelie2;
namespace fx = prelie2::fixtures;

namespace {

// Candidate on the left-multiplication context of fix_B: T0 entries, T1, T2(e1,e2).
OOperator candidate(const std::array<int, 4>& t0, int t1, int t2) {
  OOperator O = identity_o_operator(fx::fix_B());
  for (std::size_t k = 0; k < 4; ++k) O.T0.at_flat(k) = t0[k];
  O.T1.at_flat(0) = t1;
  O.T2.at({0, 1}, 0) = t2;
  O.T2.at({1, 0}, 0) = -t2;
  return O;
}

template <class F>
void for_grid(bool strict, F f) {
  for (int a = -1; a <= 1; ++a)
    for (int b = -1; b <= 1; ++b)
      for (int c = -1; c <= 1; ++c)
        for (int d = -1; d <= 1; ++d)
          for (int e = -1; e <= 1; ++e)
            for (int t = strict ? 0 : -1; t <= (strict ? 0 : 1); ++t) f(candidate({a, b, c, d}, e, t));
}

std::set<std::string> core_labels(const ValidationReport& r) {
  std::set<std::string> out;
  for (const auto& c : r.conditions())
    if (c == "chain" || c == "skew(T2)" || c == "(i)" || c == "(ii)" || c == "(iii)") out.insert(c);
  return out;
}

}  // namespace

TEST(OOperator, ZeroAndIdentity) {
  OOperator Z = candidate({0, 0, 0, 0}, 0, 0);
  EXPECT_TRUE(validate_o(Z).ok());
  // products vanish; the differential of V survives
  PreLie2Algebra IZ = induced_prelie2(Z);
  EXPECT_EQ(IZ.dM, Z.V.dM);
  EXPECT_TRUE(IZ.mul00.is_zero() && IZ.mul01.is_zero() && IZ.mul10.is_zero() && IZ.l3.is_zero());
  OOperator I = identity_o_operator(fx::fix_B());
  EXPECT_TRUE(validate_o(I).ok());
  EXPECT_TRUE(validate_context(I).ok());
  EXPECT_TRUE(oracle::o_failures(I).empty());
}

// The conditions are homogeneous in T, so scalar multiples stay valid.
// Scaling T0 alone breaks the chain condition.
TEST(OOperator, ScalingPreservesValidity) {
  for (const auto& [name, A] : fx::prelie2_fixtures())
    for (const Rational c : {Rational(2), Rational(-1), Rational(1, 3)}) {
      OOperator O = identity_o_operator(A);
      O.T0 = c * O.T0;
      O.T1 = c * O.T1;
      EXPECT_TRUE(validate_o(O).ok()) << name << " " << c.str();
      EXPECT_TRUE(oracle::o_failures(O).empty()) << name;
    }
  OOperator O = identity_o_operator(fx::fix_B());
  O.T0 = 2 * O.T0;
  ValidationReport r = validate_o(O);
  EXPECT_TRUE(r.has("chain")) << r.summary();
  EXPECT_FALSE(r.violations().front().indices.empty());
}

TEST(OOperator, IdentityReproducesEveryFixture) {
  for (const auto& [name, A] : fx::prelie2_fixtures()) {
    OOperator O = identity_o_operator(A);
    EXPECT_TRUE(validate_o(O).ok()) << name << validate_o(O).summary();
    EXPECT_TRUE(oracle::o_failures(O).empty()) << name;
    EXPECT_EQ(induced_prelie2(O), A) << name;
    Lie2Hom h = induced_hom(O);
    EXPECT_EQ(h.F0, MultiMap::identity(A.A0));
    EXPECT_TRUE(h.F2.is_zero());
  }
}

// The library and the oracle agree on all 729 grid candidates.
TEST(OOperator, GridAgreesWithOracle) {
  int valid = 0;
  for_grid(false, [&](const OOperator& O) {
    ValidationReport r = validate_o(O);
    auto o = oracle::o_failures(O);
    EXPECT_EQ(r.ok(), o.empty());
    EXPECT_EQ(core_labels(r), o);
    valid += r.ok();
  });
  // zero, identity and the search hits
  EXPECT_EQ(static_cast<std::size_t>(valid), fx::search_o_operators(false).size() + 2);
}

TEST(OOperator, PerturbationsOnNonStrictContextAgreeWithOracle) {
  for (const auto& [name, A] : fx::prelie2_fixtures()) {
    OOperator base = identity_o_operator(A);
    for (MultiMap OOperator::*field : {&OOperator::T0, &OOperator::T1, &OOperator::T2})
      for (std::size_t k = 0; k < (base.*field).coeffs().size(); ++k) {
        OOperator O = base;
        (O.*field).at_flat(k) += 1;
        ValidationReport r = validate_o(O);
        EXPECT_EQ(core_labels(r), oracle::o_failures(O)) << name << " " << k;
      }
  }
}

TEST(OOperator, InducedStructureOfSearchHits) {
  auto hits = fx::search_o_operators(false);
  ASSERT_FALSE(hits.empty());
  for (const auto& O : hits) {
    PreLie2Algebra A = induced_prelie2(O);
    EXPECT_TRUE(validate(A).ok());
    EXPECT_TRUE(oracle::prelie2_failures(A).empty());
    EXPECT_TRUE(is_strict(A));
    Lie2Hom h = induced_hom(O);
    EXPECT_TRUE(validate_hom(h, from_prelie2(A).lie2, O.G).ok());
  }
  OOperator f = fx::fix_O();
  EXPECT_FALSE(f.T0 == MultiMap::identity(f.V.V0) && f.T1 == MultiMap::identity(f.V.V1));
  EXPECT_FALSE(f.T0.is_zero() && f.T1.is_zero() && f.T2.is_zero());
}

TEST(OOperator, InducedFormulas) {
  OOperator O = fx::fix_O();
  PreLie2Algebra A = induced_prelie2(O);
  for (std::size_t u = 0; u < 2; ++u)
    for (std::size_t v = 0; v < 2; ++v)
      EXPECT_EQ(A.mul00.image({u, v}), ml_apply(O.rep.rho0_V0, {O.T0.image({u}), unit_vector(2, v)}));
  for (std::size_t m = 0; m < 1; ++m)
    for (std::size_t u = 0; u < 2; ++u)
      EXPECT_EQ(A.mul10.image({m, u}), ml_apply(O.rep.rho1, {O.T1.image({m}), unit_vector(2, u)}));
}

TEST(OOperator, InvalidInputRejected) {
  OOperator O = identity_o_operator(fx::fix_B());
  O.T0 = 2 * O.T0;
  EXPECT_THROW(induced_prelie2(O), InvalidInput);
  EXPECT_THROW(induced_hom(O), InvalidInput);
}

// On a strict context, (T0, T1, 0) is an O-operator iff T0 ⊕ T1 is an
// O-operator on the flattened Lie algebra and a chain map.
TEST(Flatten, EquivalenceOnStrictGrid) {
  int pos = 0, neg = 0;
  for_grid(true, [&](const OOperator& O) {
    bool lhs = validate_o(O).ok();
    bool rhs = flatten_check(O.T0, O.T1, O.G, O.V, O.rep);
    EXPECT_EQ(lhs, rhs);
    // independent check of the flattened half
    LieAlgebra g = semidirect_lie_algebra(O.G);
    LieRep rho = flattened_rep(O.G, O.V, O.rep);
    bool chain = ml_compose_linear(O.G.dk, O.T1) == ml_compose_linear(O.T0, O.V.dM);
    EXPECT_EQ(rhs, chain && oracle::lie_o_operator(flattened_map(O.T0, O.T1), g.bracket, rho.rho));
    (lhs ? pos : neg)++;
  });
  EXPECT_GT(pos, 1);
  EXPECT_GT(neg, 1);
}

TEST(Flatten, ChainBreakingT1) {
  OOperator O = identity_o_operator(fx::fix_B());
  O.T1 = 2 * O.T1;
  EXPECT_FALSE(flatten_check(O.T0, O.T1, O.G, O.V, O.rep));
  EXPECT_TRUE(validate_o(O).has("chain"));
}

TEST(Flatten, NonStrictContextRejected) {
  OOperator O = identity_o_operator(fx::fix_G());
  EXPECT_THROW(flatten_check(O.T0, O.T1, O.G, O.V, O.rep), std::invalid_argument);
}
