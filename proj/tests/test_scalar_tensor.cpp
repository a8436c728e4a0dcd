#include <gtest/gtest.h>

#include "common.hpp"
#include "prelie2/linalg.hpp"

using namespace prelie2;
using testing_support::rng;

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(Rational(6, -4).str(), "-3/2");
  EXPECT_EQ(Rational::parse("10/4"), Rational(5, 2));
  EXPECT_EQ(Rational::parse("-7").str(), "-7");
  EXPECT_EQ(Rational::parse("0/5").str(), "0");
  EXPECT_EQ(Rational(2, 4).denominator(), "2");
}

TEST(Rational, RejectsMalformed) {
  for (const char* bad : {"1/0", "", "1/", "/2", "1.5", "1/-2", "--1", "abc", " 1"})
    EXPECT_THROW(Rational::parse(bad), ParseError) << bad;
}

TEST(Rational, BigValuesStayExact) {
  Rational x = 1;
  for (int i = 0; i < 40; ++i) x *= Rational(1000003, 7);
  for (int i = 0; i < 40; ++i) x /= Rational(1000003, 7);
  EXPECT_EQ(x, Rational(1));
}

TEST(MultiMap, ApplyBasics) {
  MultiMap z({Space{2, "V"}, Space{3, "W"}}, Space{2, "U"});
  EXPECT_TRUE(is_zero(ml_apply(z, {Vector{1, 2}, Vector{3, 4, 5}})));
  MultiMap id = MultiMap::identity(Space{2, "V"});
  EXPECT_EQ(ml_apply(id, {Vector{3, -5}}), (Vector{3, -5}));
  PreLieAlgebra A = fixtures::algebra_A();
  EXPECT_EQ(ml_apply(A.mul, {Vector{1, 0}, Vector{0, 1}}), (Vector{0, 1}));
}

TEST(MultiMap, ApplyNamesBadSlot) {
  MultiMap m({Space{2, "V"}, Space{3, "W"}}, Space{1, "Q"});
  try {
    ml_apply(m, {Vector{1, 2}, Vector{1, 2}});
    FAIL();
  } catch (const DimensionError& e) {
    EXPECT_EQ(e.slot(), 1u);
  }
  EXPECT_THROW(ml_apply(m, {Vector{1, 2}}), DimensionError);
}

TEST(MultiMap, ApplyIsMultilinear) {
  auto g = rng(1);
  Space V{3, "V"}, W{2, "W"};
  MultiMap m = fixtures::random_map({V, W, V}, W, g);
  std::uniform_int_distribution<int> d(-9, 9);
  auto rv = [&](std::size_t n) {
    Vector v(n);
    for (auto& x : v) x = Rational(d(g), 1 + (d(g) + 9) % 4);
    return v;
  };
  for (int trial = 0; trial < 20; ++trial) {
    Vector x = rv(3), y = rv(3), w = rv(2), z = rv(3);
    Rational a = d(g), b = Rational(d(g), 3);
    Vector lhs = ml_apply(m, {x, w, a * y + b * z});
    Vector rhs = a * ml_apply(m, {x, w, y}) + b * ml_apply(m, {x, w, z});
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(MultiMap, ComposeMatchesSchoolbook) {
  auto g = rng(2);
  Space V{2, "V"};
  EXPECT_EQ(ml_compose_linear(MultiMap::identity(V), fixtures::random_map({V}, V, g)).coeffs().size(), 4u);
  for (int trial = 0; trial < 10; ++trial) {
    MultiMap f = fixtures::random_map({V}, V, g), h = fixtures::random_map({V}, V, g);
    MultiMap fh = ml_compose_linear(f, h);
    // (f∘h)(e_i) = Σ_k h(e_i)_k f(e_k)
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        Rational s = 0;
        for (std::size_t k = 0; k < 2; ++k) s += h.coeffs()[i * 2 + k] * f.coeffs()[k * 2 + j];
        EXPECT_EQ(fh.coeffs()[i * 2 + j], s);
      }
    EXPECT_EQ(ml_compose_linear(MultiMap::identity(V), h), h);
    EXPECT_TRUE(ml_compose_linear(MultiMap({V}, V), h).is_zero());
  }
  EXPECT_THROW(ml_compose_linear(MultiMap::identity(V), MultiMap::identity(Space{3, "W"})), DimensionError);
}

TEST(MultiMap, SkewDetection) {
  Space V{2, "V"};
  MultiMap s({V, V}, V);
  s.at({0, 1}, 0) = 1;
  s.at({1, 0}, 0) = -1;
  EXPECT_TRUE(ml_skew_in(s, 0, 1));
  MultiMap sym({V, V}, V);
  sym.at({0, 1}, 1) = 1;
  sym.at({1, 0}, 1) = 1;
  EXPECT_FALSE(ml_skew_in(sym, 0, 1));
  EXPECT_TRUE(ml_skew_in(from_prelie2(fixtures::fix_A_lifted()).lie2.l2_00, 0, 1));
}

TEST(MultiMap, PermuteSlots) {
  auto g = rng(3);
  Space V{2, "V"};
  MultiMap m = fixtures::random_map({V, V, V}, V, g);
  MultiMap p = permute_slots(m, {2, 0, 1});
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t c = 0; c < 2; ++c) EXPECT_EQ(p.image({a, b, c}), m.image({b, c, a}));
  EXPECT_EQ(permute_slots(permute_slots(m, {1, 0, 2}), {1, 0, 2}), m);
}

TEST(Linalg, Nullspace) {
  Space V{2, "V"}, U{3, "U"};
  EXPECT_TRUE(nullspace(MultiMap::identity(V)).empty());
  EXPECT_EQ(nullspace(MultiMap({U}, U)).size(), 3u);
  // e1 ↦ e1, e2 ↦ e1: kernel spanned by e1 − e2
  MultiMap f = MultiMap::linear(V, V, {Vector{1, 0}, Vector{1, 0}});
  auto k = nullspace(f);
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0][0], -k[0][1]);
  EXPECT_FALSE(is_zero(k[0]));
}

TEST(Linalg, NullspaceCountsAndKills) {
  auto g = rng(4);
  Space V{4, "V"}, W{3, "W"};
  for (int trial = 0; trial < 10; ++trial) {
    MultiMap f = fixtures::random_map({V}, W, g);
    auto k = nullspace(f);
    EXPECT_EQ(k.size(), 4 - rank(f));
    for (const auto& v : k) EXPECT_TRUE(is_zero(ml_apply(f, {v})));
  }
}

TEST(Linalg, Inverse) {
  auto g = rng(5);
  Space V{3, "V"};
  for (int trial = 0; trial < 10; ++trial) {
    MultiMap P = fixtures::random_invertible(V, g);
    auto inv = inverse(P);
    ASSERT_TRUE(inv.has_value());
    EXPECT_EQ(ml_compose_linear(*inv, P), MultiMap::identity(V));
  }
  EXPECT_FALSE(inverse(MultiMap({V}, V)).has_value());
}
