#include "prelie2/prelie2.hpp"

namespace prelie2 {

PreLie2Algebra PreLie2Algebra::zero(std::size_t d0, std::size_t d1) {
  Space A0{d0, "A0"}, A1{d1, "A1"};
  return {A0,
          A1,
          MultiMap({A1}, A0),
          MultiMap({A0, A0}, A0),
          MultiMap({A0, A1}, A1),
          MultiMap({A1, A0}, A1),
          MultiMap({A0, A0, A0}, A1)};
}

namespace {

bool has_shape(const MultiMap& m, std::initializer_list<std::size_t> ins, std::size_t out) {
  if (m.arity() != ins.size() || m.output().dim != out) return false;
  std::size_t k = 0;
  for (auto d : ins)
    if (m.input(k++).dim != d) return false;
  return true;
}

// Vector-level view of the products, used by the validators.
struct Ops {
  const PreLie2Algebra& A;
  std::size_t n0, n1;
  explicit Ops(const PreLie2Algebra& a) : A(a), n0(a.A0.dim), n1(a.A1.dim) {}
  Vector e0(std::size_t i) const { return unit_vector(n0, i); }
  Vector e1(std::size_t i) const { return unit_vector(n1, i); }
  Vector uv(const Vector& u, const Vector& v) const { return ml_apply(A.mul00, {u, v}); }
  Vector um(const Vector& u, const Vector& m) const { return ml_apply(A.mul01, {u, m}); }
  Vector mu(const Vector& m, const Vector& u) const { return ml_apply(A.mul10, {m, u}); }
  Vector d(const Vector& m) const { return ml_apply(A.dM, {m}); }
  Vector l3(const Vector& u, const Vector& v, const Vector& w) const {
    return ml_apply(A.l3, {u, v, w});
  }
  Vector br(const Vector& u, const Vector& v) const { return uv(u, v) - uv(v, u); }
};

}  // namespace

void check_shapes(const PreLie2Algebra& A) {
  const std::size_t a = A.A0.dim, b = A.A1.dim;
  if (!has_shape(A.dM, {b}, a)) throw DimensionError("dM must map A1 to A0");
  if (!has_shape(A.mul00, {a, a}, a)) throw DimensionError("mul00 must be A0 ⊗ A0 → A0");
  if (!has_shape(A.mul01, {a, b}, b)) throw DimensionError("mul01 must be A0 ⊗ A1 → A1");
  if (!has_shape(A.mul10, {b, a}, b)) throw DimensionError("mul10 must be A1 ⊗ A0 → A1");
  if (!has_shape(A.l3, {a, a, a}, b)) throw DimensionError("l3 must be A0 ⊗ A0 ⊗ A0 → A1");
}

ValidationReport validate(const PreLie2Algebra& A) {
  check_shapes(A);
  const Ops o(A);
  const std::size_t n0 = o.n0, n1 = o.n1;

  std::vector<CheckFamily> families;
  families.push_back([&](ValidationReport& r) {
    for (std::size_t i = 0; i < n0; ++i)
      for (std::size_t j = i; j < n0; ++j)
        for (std::size_t k = 0; k < n0; ++k)
          r.expect_zero("skew(l3)", {i, j, k}, A.l3.image({i, j, k}) + A.l3.image({j, i, k}));
  });
  families.push_back([&](ValidationReport& r) {
    for (std::size_t v = 0; v < n0; ++v)
      for (std::size_t m = 0; m < n1; ++m) {
        Vector ev = o.e0(v), em = o.e1(m);
        r.expect_equal("(a1)", {v, m}, o.d(o.um(ev, em)), o.uv(ev, o.d(em)));
        r.expect_equal("(a2)", {m, v}, o.d(o.mu(em, ev)), o.uv(o.d(em), ev));
      }
    for (std::size_t m = 0; m < n1; ++m)
      for (std::size_t n = 0; n < n1; ++n)
        r.expect_equal("(a3)", {m, n}, o.um(o.d(o.e1(m)), o.e1(n)), o.mu(o.e1(m), o.d(o.e1(n))));
  });
  families.push_back([&](ValidationReport& r) {
    for (std::size_t a = 0; a < n0; ++a)
      for (std::size_t b = 0; b < n0; ++b)
        for (std::size_t c = 0; c < n0; ++c) {
          Vector v0 = o.e0(a), v1 = o.e0(b), v2 = o.e0(c);
          Vector lhs = o.uv(v0, o.uv(v1, v2)) - o.uv(o.uv(v0, v1), v2) - o.uv(v1, o.uv(v0, v2)) +
                       o.uv(o.uv(v1, v0), v2);
          r.expect_equal("(b1)", {a, b, c}, lhs, o.d(o.l3(v0, v1, v2)));
        }
  });
  families.push_back([&](ValidationReport& r) {
    for (std::size_t a = 0; a < n0; ++a)
      for (std::size_t b = 0; b < n0; ++b)
        for (std::size_t m = 0; m < n1; ++m) {
          Vector v0 = o.e0(a), v1 = o.e0(b), em = o.e1(m);
          Vector lhs = o.um(v0, o.um(v1, em)) - o.um(o.uv(v0, v1), em) - o.um(v1, o.um(v0, em)) +
                       o.um(o.uv(v1, v0), em);
          r.expect_equal("(b2)", {a, b, m}, lhs, o.l3(v0, v1, o.d(em)));
        }
  });
  families.push_back([&](ValidationReport& r) {
    for (std::size_t m = 0; m < n1; ++m)
      for (std::size_t b = 0; b < n0; ++b)
        for (std::size_t c = 0; c < n0; ++c) {
          Vector em = o.e1(m), v1 = o.e0(b), v2 = o.e0(c);
          Vector lhs = o.mu(em, o.uv(v1, v2)) - o.mu(o.mu(em, v1), v2) - o.um(v1, o.mu(em, v2)) +
                       o.mu(o.um(v1, em), v2);
          r.expect_equal("(b3)", {m, b, c}, lhs, o.l3(o.d(em), v1, v2));
        }
  });
  families.push_back([&](ValidationReport& r) {
    if (n1 == 0) return;
    for (std::size_t a = 0; a < n0; ++a)
      for (std::size_t b = 0; b < n0; ++b)
        for (std::size_t c = 0; c < n0; ++c)
          for (std::size_t e = 0; e < n0; ++e) {
            Vector v0 = o.e0(a), v1 = o.e0(b), v2 = o.e0(c), v3 = o.e0(e);
            Vector s = o.um(v0, o.l3(v1, v2, v3)) - o.um(v1, o.l3(v0, v2, v3)) +
                       o.um(v2, o.l3(v0, v1, v3));
            s += o.mu(o.l3(v1, v2, v0), v3) - o.mu(o.l3(v0, v2, v1), v3) +
                 o.mu(o.l3(v0, v1, v2), v3);
            s -= o.l3(v1, v2, o.uv(v0, v3));
            s += o.l3(v0, v2, o.uv(v1, v3));
            s -= o.l3(v0, v1, o.uv(v2, v3));
            s -= o.l3(o.br(v0, v1), v2, v3);
            s += o.l3(o.br(v0, v2), v1, v3);
            s -= o.l3(o.br(v1, v2), v0, v3);
            r.expect_zero("(c)", {a, b, c, e}, s);
          }
  });
  return run_families(families);
}

ValidationReport validate_hom(const PreLie2Hom& F, const PreLie2Algebra& A,
                              const PreLie2Algebra& B) {
  check_shapes(A);
  check_shapes(B);
  const std::size_t a0 = A.A0.dim, a1 = A.A1.dim, b0 = B.A0.dim, b1 = B.A1.dim;
  if (!has_shape(F.F0, {a0}, b0)) throw DimensionError("F0 must map A0 to A0'", 0);
  if (!has_shape(F.F1, {a1}, b1)) throw DimensionError("F1 must map A1 to A1'", 1);
  if (!has_shape(F.F2, {a0, a0}, b1)) throw DimensionError("F2 must map A0 ⊗ A0 to A1'", 2);
  const Ops s(A), t(B);
  auto F0 = [&](const Vector& u) { return ml_apply(F.F0, {u}); };
  auto F1 = [&](const Vector& m) { return ml_apply(F.F1, {m}); };
  auto F2 = [&](const Vector& u, const Vector& v) { return ml_apply(F.F2, {u, v}); };

  std::vector<CheckFamily> families;
  families.push_back([&](ValidationReport& r) {
    for (std::size_t m = 0; m < a1; ++m)
      r.expect_equal("(i)", {m}, F0(s.d(s.e1(m))), t.d(F1(s.e1(m))));
  });
  families.push_back([&](ValidationReport& r) {
    for (std::size_t i = 0; i < a0; ++i)
      for (std::size_t j = 0; j < a0; ++j) {
        Vector u = s.e0(i), v = s.e0(j);
        r.expect_equal("(ii)", {i, j}, F0(s.uv(u, v)) - t.uv(F0(u), F0(v)), t.d(F2(u, v)));
      }
  });
  families.push_back([&](ValidationReport& r) {
    for (std::size_t i = 0; i < a0; ++i)
      for (std::size_t m = 0; m < a1; ++m) {
        Vector u = s.e0(i), em = s.e1(m);
        r.expect_equal("(iii-left)", {i, m}, F1(s.um(u, em)) - t.um(F0(u), F1(em)),
                       F2(u, s.d(em)));
        r.expect_equal("(iii-right)", {m, i}, F1(s.mu(em, u)) - t.mu(F1(em), F0(u)),
                       F2(s.d(em), u));
      }
  });
  families.push_back([&](ValidationReport& r) {
    if (b1 == 0) return;
    for (std::size_t i = 0; i < a0; ++i)
      for (std::size_t j = 0; j < a0; ++j)
        for (std::size_t k = 0; k < a0; ++k) {
          Vector u = s.e0(i), v = s.e0(j), w = s.e0(k);
          Vector x = t.um(F0(u), F2(v, w)) - t.um(F0(v), F2(u, w)) + t.mu(F2(v, u), F0(w)) -
                     t.mu(F2(u, v), F0(w));
          x -= F2(v, s.uv(u, w));
          x += F2(u, s.uv(v, w));
          x -= F2(s.uv(u, v), w);
          x += F2(s.uv(v, u), w);
          x += t.l3(F0(u), F0(v), F0(w));
          x -= F1(s.l3(u, v, w));
          r.expect_zero("(iv)", {i, j, k}, x);
        }
  });
  return run_families(families);
}

PreLie2Hom compose_hom(const PreLie2Hom& G, const PreLie2Hom& F) {
  if (G.F0.arity() != 1 || F.F0.output().dim != G.F0.input(0).dim ||
      F.F1.output().dim != G.F1.input(0).dim || F.F2.output().dim != G.F1.input(0).dim)
    throw DimensionError("homomorphisms are not composable");
  MultiMap F2 = precompose(precompose(G.F2, 0, F.F0), 1, F.F0) + postcompose(G.F1, F.F2);
  return {ml_compose_linear(G.F0, F.F0), ml_compose_linear(G.F1, F.F1), F2};
}

PreLie2Hom identity_hom(const PreLie2Algebra& A) {
  return {MultiMap::identity(A.A0), MultiMap::identity(A.A1), MultiMap({A.A0, A.A0}, A.A1)};
}

bool is_skeletal(const PreLie2Algebra& A) { return A.dM.is_zero(); }
bool is_strict(const PreLie2Algebra& A) { return A.l3.is_zero(); }

PreLie2Algebra build_skeletal(const PreLieAlgebra& A, const PreLieRep& rep, const Cochain& l3) {
  require_valid(validate_prelie(A), "build_skeletal: not a pre-Lie algebra");
  require_valid(validate_rep(A, rep), "build_skeletal: not a representation");
  if (l3.n != 3) throw DimensionError("l3 must be a 3-cochain");
  require_valid(validate_cochain(A, rep, l3), "build_skeletal: l3 is not skew in its first two slots");
  require_valid(check_cocycle(l3, A, rep), "build_skeletal: l3 is not a cocycle");
  Space A0 = A.A, A1 = rep.V;
  return {A0,
          A1,
          MultiMap({A1}, A0),
          A.mul,
          rep.rho,
          permute_slots(rep.mu, {1, 0}),
          l3.map};
}

SkeletalData classify_skeletal(const PreLie2Algebra& A) {
  check_shapes(A);
  if (!is_skeletal(A)) throw std::invalid_argument("classify_skeletal: dM is not zero");
  require_valid(validate(A), "classify_skeletal: not a pre-Lie 2-algebra");
  return {PreLieAlgebra{A.A0, A.mul00}, PreLieRep{A.A1, A.mul01, permute_slots(A.mul10, {1, 0})},
          Cochain{3, A.l3}};
}

PreLie2Algebra skeletal_from_form(const PreLieAlgebra& A, const InvariantForm& w) {
  Cochain phi = cocycle_from_form(A, w);
  return build_skeletal(A, trivial_rep(A, 1), phi);
}

PreLie2Algebra lift(const PreLieAlgebra& A) {
  check_shapes(A);
  Space A1{0, "A1"};
  return {A.A,
          A1,
          MultiMap({A1}, A.A),
          A.mul,
          MultiMap({A.A, A1}, A1),
          MultiMap({A1, A.A}, A1),
          MultiMap({A.A, A.A, A.A}, A1)};
}

PreLieAlgebra degree_zero(const PreLie2Algebra& A) { return {A.A0, A.mul00}; }

}  // namespace prelie2
