#include "prelie2/lie2.hpp"

#include "prelie2/end_algebra.hpp"
#include "prelie2/prelie2.hpp"

namespace prelie2 {

Lie2Algebra Lie2Algebra::zero(std::size_t d0, std::size_t d1) {
  Space g0{d0, "g0"}, g1{d1, "g1"};
  return {g0, g1, MultiMap({g1}, g0), MultiMap({g0, g0}, g0), MultiMap({g0, g1}, g1),
          MultiMap({g0, g0, g0}, g1)};
}

namespace {

bool has_shape(const MultiMap& m, std::initializer_list<std::size_t> ins, std::size_t out) {
  if (m.arity() != ins.size() || m.output().dim != out) return false;
  std::size_t k = 0;
  for (auto d : ins)
    if (m.input(k++).dim != d) return false;
  return true;
}

struct Ops {
  const Lie2Algebra& G;
  std::size_t n0, n1;
  explicit Ops(const Lie2Algebra& g) : G(g), n0(g.g0.dim), n1(g.g1.dim) {}
  Vector e0(std::size_t i) const { return unit_vector(n0, i); }
  Vector e1(std::size_t i) const { return unit_vector(n1, i); }
  Vector xy(const Vector& x, const Vector& y) const { return ml_apply(G.l2_00, {x, y}); }
  Vector xm(const Vector& x, const Vector& m) const { return ml_apply(G.l2_01, {x, m}); }
  Vector mx(const Vector& m, const Vector& x) const { return -xm(x, m); }
  Vector d(const Vector& m) const { return ml_apply(G.dk, {m}); }
  Vector l3(const Vector& x, const Vector& y, const Vector& z) const {
    return ml_apply(G.l3, {x, y, z});
  }
};

}  // namespace

Vector l2_xm(const Lie2Algebra& G, const Vector& x, const Vector& m) {
  return ml_apply(G.l2_01, {x, m});
}

void check_shapes(const Lie2Algebra& G) {
  const std::size_t a = G.g0.dim, b = G.g1.dim;
  if (!has_shape(G.dk, {b}, a)) throw DimensionError("differential must map g1 to g0");
  if (!has_shape(G.l2_00, {a, a}, a)) throw DimensionError("l2_00 must be g0 ⊗ g0 → g0");
  if (!has_shape(G.l2_01, {a, b}, b)) throw DimensionError("l2_01 must be g0 ⊗ g1 → g1");
  if (!has_shape(G.l3, {a, a, a}, b)) throw DimensionError("l3 must be g0 ⊗ g0 ⊗ g0 → g1");
}

bool is_strict(const Lie2Algebra& G) { return G.l3.is_zero(); }
bool is_strict(const Lie2Rep& rep) { return rep.rho2.is_zero(); }

ValidationReport validate(const Lie2Algebra& G) {
  check_shapes(G);
  const Ops o(G);
  const std::size_t n0 = o.n0, n1 = o.n1;
  std::vector<CheckFamily> families;
  families.push_back([&](ValidationReport& r) {
    for (std::size_t i = 0; i < n0; ++i)
      for (std::size_t j = i; j < n0; ++j)
        r.expect_zero("skew(l2)", {i, j}, G.l2_00.image({i, j}) + G.l2_00.image({j, i}));
    for (std::size_t i = 0; i < n0; ++i)
      for (std::size_t j = 0; j < n0; ++j)
        for (std::size_t k = 0; k < n0; ++k) {
          if (i <= j)
            r.expect_zero("skew(l3)", {i, j, k}, G.l3.image({i, j, k}) + G.l3.image({j, i, k}));
          if (j <= k)
            r.expect_zero("skew(l3)", {i, j, k}, G.l3.image({i, j, k}) + G.l3.image({i, k, j}));
        }
  });
  families.push_back([&](ValidationReport& r) {
    for (std::size_t x = 0; x < n0; ++x)
      for (std::size_t m = 0; m < n1; ++m)
        r.expect_equal("(i)", {x, m}, o.d(o.xm(o.e0(x), o.e1(m))), o.xy(o.e0(x), o.d(o.e1(m))));
    for (std::size_t m = 0; m < n1; ++m)
      for (std::size_t n = 0; n < n1; ++n)
        r.expect_equal("(i)", {n0 + m, n0 + n}, o.xm(o.d(o.e1(m)), o.e1(n)),
                       o.mx(o.e1(m), o.d(o.e1(n))));
  });
  families.push_back([&](ValidationReport& r) {
    for (std::size_t a = 0; a < n0; ++a)
      for (std::size_t b = 0; b < n0; ++b)
        for (std::size_t c = 0; c < n0; ++c) {
          Vector x = o.e0(a), y = o.e0(b), z = o.e0(c);
          Vector rhs = o.xy(x, o.xy(y, z)) + o.xy(y, o.xy(z, x)) + o.xy(z, o.xy(x, y));
          r.expect_equal("(ii)", {a, b, c}, o.d(o.l3(x, y, z)), rhs);
        }
  });
  families.push_back([&](ValidationReport& r) {
    for (std::size_t a = 0; a < n0; ++a)
      for (std::size_t b = 0; b < n0; ++b)
        for (std::size_t m = 0; m < n1; ++m) {
          Vector x = o.e0(a), y = o.e0(b), em = o.e1(m);
          Vector rhs = o.xm(x, o.xm(y, em)) + o.xm(y, o.mx(em, x)) + o.mx(em, o.xy(x, y));
          r.expect_equal("(iii)", {a, b, m}, o.l3(x, y, o.d(em)), rhs);
        }
  });
  families.push_back([&](ValidationReport& r) {
    if (n1 == 0) return;
    std::size_t idx[4];
    for (idx[0] = 0; idx[0] < n0; ++idx[0])
      for (idx[1] = 0; idx[1] < n0; ++idx[1])
        for (idx[2] = 0; idx[2] < n0; ++idx[2])
          for (idx[3] = 0; idx[3] < n0; ++idx[3]) {
            Vector x[4] = {o.e0(idx[0]), o.e0(idx[1]), o.e0(idx[2]), o.e0(idx[3])};
            Vector s(n1);
            for (std::size_t i = 0; i < 4; ++i) {
              std::vector<const Vector*> rest;
              for (std::size_t k = 0; k < 4; ++k)
                if (k != i) rest.push_back(&x[k]);
              Vector t = o.xm(x[i], o.l3(*rest[0], *rest[1], *rest[2]));
              axpy(s, i % 2 == 0 ? 1 : -1, t);
            }
            for (std::size_t i = 0; i < 4; ++i)
              for (std::size_t j = i + 1; j < 4; ++j) {
                std::vector<const Vector*> rest;
                for (std::size_t k = 0; k < 4; ++k)
                  if (k != i && k != j) rest.push_back(&x[k]);
                Vector t = o.l3(o.xy(x[i], x[j]), *rest[0], *rest[1]);
                axpy(s, (i + j) % 2 == 0 ? 1 : -1, t);
              }
            r.expect_zero("(iv)", {idx[0], idx[1], idx[2], idx[3]}, s);
          }
  });
  return run_families(families);
}

ValidationReport validate_hom(const Lie2Hom& F, const Lie2Algebra& G, const Lie2Algebra& H) {
  check_shapes(G);
  check_shapes(H);
  const std::size_t a0 = G.g0.dim, a1 = G.g1.dim, b0 = H.g0.dim, b1 = H.g1.dim;
  if (!has_shape(F.F0, {a0}, b0)) throw DimensionError("F0 must map g0 to g0'", 0);
  if (!has_shape(F.F1, {a1}, b1)) throw DimensionError("F1 must map g1 to g1'", 1);
  if (!has_shape(F.F2, {a0, a0}, b1)) throw DimensionError("F2 must map g0 ⊗ g0 to g1'", 2);
  const Ops s(G), t(H);
  auto F0 = [&](const Vector& x) { return ml_apply(F.F0, {x}); };
  auto F1 = [&](const Vector& m) { return ml_apply(F.F1, {m}); };
  auto F2 = [&](const Vector& x, const Vector& y) { return ml_apply(F.F2, {x, y}); };

  ValidationReport r;
  for (std::size_t i = 0; i < a0; ++i)
    for (std::size_t j = i; j < a0; ++j)
      r.expect_zero("skew(F2)", {i, j}, F.F2.image({i, j}) + F.F2.image({j, i}));
  for (std::size_t m = 0; m < a1; ++m)
    r.expect_equal("(i)", {m}, F0(s.d(s.e1(m))), t.d(F1(s.e1(m))));
  for (std::size_t i = 0; i < a0; ++i)
    for (std::size_t j = 0; j < a0; ++j) {
      Vector x = s.e0(i), y = s.e0(j);
      r.expect_equal("(ii)", {i, j}, F0(s.xy(x, y)) - t.xy(F0(x), F0(y)), t.d(F2(x, y)));
    }
  for (std::size_t i = 0; i < a0; ++i)
    for (std::size_t m = 0; m < a1; ++m) {
      Vector x = s.e0(i), em = s.e1(m);
      r.expect_equal("(iii)", {i, m}, F1(s.xm(x, em)) - t.xm(F0(x), F1(em)), F2(x, s.d(em)));
    }
  if (b1 > 0)
    for (std::size_t i = 0; i < a0; ++i)
      for (std::size_t j = 0; j < a0; ++j)
        for (std::size_t k = 0; k < a0; ++k) {
          Vector v[3] = {s.e0(i), s.e0(j), s.e0(k)};
          Vector lhs = F1(s.l3(v[0], v[1], v[2]));
          Vector rhs = t.l3(F0(v[0]), F0(v[1]), F0(v[2]));
          for (std::size_t c = 0; c < 3; ++c) {
            const Vector &x = v[c], &y = v[(c + 1) % 3], &z = v[(c + 2) % 3];
            lhs += F2(s.xy(x, y), z);
            rhs += t.xm(F0(x), F2(y, z));
          }
          r.expect_equal("(iv)", {i, j, k}, lhs, rhs);
        }
  r.sort();
  return r;
}

ValidationReport validate_rep(const Lie2Algebra& G, const TwoTermComplex& V, const Lie2Rep& rep) {
  check_shapes(G);
  check_complex(V);
  const std::size_t n0 = G.g0.dim, n1 = G.g1.dim, v0 = V.V0.dim, v1 = V.V1.dim;
  if (!has_shape(rep.rho0_V0, {n0, v0}, v0)) throw DimensionError("rho0 on V0 has wrong shape");
  if (!has_shape(rep.rho0_V1, {n0, v1}, v1)) throw DimensionError("rho0 on V1 has wrong shape");
  if (!has_shape(rep.rho1, {n1, v0}, v1)) throw DimensionError("rho1 has wrong shape");
  if (!has_shape(rep.rho2, {n0, n0, v0}, v1)) throw DimensionError("rho2 has wrong shape");

  EndAlgebra E = end_algebra(V);
  ValidationReport r;
  std::vector<Vector> images0;
  for (std::size_t x = 0; x < n0; ++x) {
    Vector ex = unit_vector(n0, x);
    EndPair A{action_of(rep.rho0_V0, ex), action_of(rep.rho0_V1, ex)};
    if (auto c = E.coordinates0(A)) {
      images0.push_back(*c);
    } else {
      MultiMap defect = ml_compose_linear(A.first, V.dM) - ml_compose_linear(V.dM, A.second);
      r.add("End0", {x}, defect.coeffs());
    }
  }
  if (!r.ok()) return r;

  const Space& e0 = E.lie2.g0;
  const Space& e1 = E.lie2.g1;
  Lie2Hom F;
  F.F0 = MultiMap::linear(G.g0, e0, images0);
  F.F1 = MultiMap({G.g1}, e1, rep.rho1.coeffs());
  F.F2 = MultiMap({G.g0, G.g0}, e1, rep.rho2.coeffs());
  r.merge(validate_hom(F, G, E.lie2), "hom:");
  r.sort();
  return r;
}

Lie2FromPreLie2 from_prelie2_unchecked(const PreLie2Algebra& A) {
  check_shapes(A);
  Lie2FromPreLie2 out;
  Lie2Algebra& L = out.lie2;
  L.g0 = A.A0;
  L.g1 = A.A1;
  L.dk = A.dM;
  L.l2_00 = A.mul00 - permute_slots(A.mul00, {1, 0});
  L.l2_01 = A.mul01 - permute_slots(A.mul10, {1, 0});
  L.l3 = A.l3 + permute_slots(A.l3, {2, 0, 1}) + permute_slots(A.l3, {1, 2, 0});
  out.complex = {A.A0, A.A1, A.dM};
  out.rep = {A.mul00, A.mul01, A.mul10, -A.l3};
  return out;
}

Lie2FromPreLie2 from_prelie2(const PreLie2Algebra& A) {
  require_valid(validate(A), "from_prelie2: not a pre-Lie 2-algebra");
  return from_prelie2_unchecked(A);
}

Lie2Hom hom_from_prelie2hom(const PreLie2Hom& F) {
  return {F.F0, F.F1, F.F2 - permute_slots(F.F2, {1, 0})};
}

Lie2Algebra semidirect_strict(const Lie2Algebra& G, const TwoTermComplex& V, const Lie2Rep& rep) {
  check_shapes(G);
  check_complex(V);
  if (!is_strict(G)) throw std::invalid_argument("semidirect_strict: Lie 2-algebra is not strict");
  if (!is_strict(rep)) throw std::invalid_argument("semidirect_strict: representation is not strict");
  const std::size_t n0 = G.g0.dim, n1 = G.g1.dim, v0 = V.V0.dim, v1 = V.V1.dim;
  Space s0{n0 + v0, G.g0.label + "+" + V.V0.label}, s1{n1 + v1, G.g1.label + "+" + V.V1.label};
  auto split = [](std::size_t i, std::size_t a, std::size_t b) {
    return std::pair<Vector, Vector>{i < a ? unit_vector(a, i) : zero_vector(a),
                                     i < a ? zero_vector(b) : unit_vector(b, i - a)};
  };
  Lie2Algebra S;
  S.g0 = s0;
  S.g1 = s1;
  S.dk = MultiMap::from_basis({s1}, s0, [&](std::span<const std::size_t> idx) {
    auto [a, m] = split(idx[0], n1, v1);
    return concat(ml_apply(G.dk, {a}), ml_apply(V.dM, {m}));
  });
  S.l2_00 = MultiMap::from_basis({s0, s0}, s0, [&](std::span<const std::size_t> idx) {
    auto [x, u] = split(idx[0], n0, v0);
    auto [y, v] = split(idx[1], n0, v0);
    return concat(ml_apply(G.l2_00, {x, y}),
                  ml_apply(rep.rho0_V0, {x, v}) - ml_apply(rep.rho0_V0, {y, u}));
  });
  S.l2_01 = MultiMap::from_basis({s0, s1}, s1, [&](std::span<const std::size_t> idx) {
    auto [x, u] = split(idx[0], n0, v0);
    auto [a, m] = split(idx[1], n1, v1);
    return concat(ml_apply(G.l2_01, {x, a}),
                  ml_apply(rep.rho0_V1, {x, m}) - ml_apply(rep.rho1, {a, u}));
  });
  S.l3 = MultiMap({s0, s0, s0}, s1);
  return S;
}

LieAlgebra semidirect_lie_algebra(const Lie2Algebra& G) {
  check_shapes(G);
  if (!is_strict(G)) throw std::invalid_argument("semidirect_lie_algebra: Lie 2-algebra is not strict");
  const std::size_t n0 = G.g0.dim, n1 = G.g1.dim;
  Space s{n0 + n1, G.g0.label + "+" + G.g1.label};
  auto split = [&](std::size_t i) {
    return std::pair<Vector, Vector>{i < n0 ? unit_vector(n0, i) : zero_vector(n0),
                                     i < n0 ? zero_vector(n1) : unit_vector(n1, i - n0)};
  };
  MultiMap br = MultiMap::from_basis({s, s}, s, [&](std::span<const std::size_t> idx) {
    auto [x, m] = split(idx[0]);
    auto [y, n] = split(idx[1]);
    return concat(ml_apply(G.l2_00, {x, y}),
                  ml_apply(G.l2_01, {x, n}) - ml_apply(G.l2_01, {y, m}));
  });
  return {s, br};
}

Lie2Rep dual_rep(const Lie2Algebra& G, const TwoTermComplex& V, const Lie2Rep& rep) {
  check_shapes(G);
  if (!is_strict(rep)) throw std::invalid_argument("dual_rep: representation is not strict");
  TwoTermComplex D = dual_complex(V);
  // Entry (x, k, j) of a dual operator is minus entry (x, j, k) of the original.
  auto neg_transpose = [](const MultiMap& m, const Space& g, const Space& in, const Space& out) {
    return MultiMap::from_basis({g, in}, out, [&](std::span<const std::size_t> idx) {
      Vector v(out.dim);
      for (std::size_t j = 0; j < out.dim; ++j) v[j] = -m.at({idx[0], j}, idx[1]);
      return v;
    });
  };
  Lie2Rep d;
  d.rho0_V0 = neg_transpose(rep.rho0_V1, G.g0, D.V0, D.V0);
  d.rho0_V1 = neg_transpose(rep.rho0_V0, G.g0, D.V1, D.V1);
  d.rho1 = neg_transpose(rep.rho1, G.g1, D.V0, D.V1);
  d.rho2 = MultiMap({G.g0, G.g0, D.V0}, D.V1);
  return d;
}

}  // namespace prelie2
