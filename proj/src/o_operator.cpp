#include "prelie2/o_operator.hpp"

namespace prelie2 {

namespace {

Vector apply1(const MultiMap& f, const Vector& v) { return ml_apply(f, {v}); }

bool has_shape(const MultiMap& m, std::vector<std::size_t> ins, std::size_t out) {
  if (m.arity() != ins.size() || m.output().dim != out) return false;
  for (std::size_t k = 0; k < ins.size(); ++k)
    if (m.input(k).dim != ins[k]) return false;
  return true;
}

std::pair<Vector, Vector> split(std::size_t i, std::size_t a, std::size_t b) {
  return {i < a ? unit_vector(a, i) : zero_vector(a), i < a ? zero_vector(b) : unit_vector(b, i - a)};
}

}  // namespace

void check_shapes(const OOperator& O) {
  check_shapes(O.G);
  check_complex(O.V);
  const std::size_t n0 = O.G.g0.dim, n1 = O.G.g1.dim, v0 = O.V.V0.dim, v1 = O.V.V1.dim;
  if (!has_shape(O.rep.rho0_V0, {n0, v0}, v0) || !has_shape(O.rep.rho0_V1, {n0, v1}, v1) ||
      !has_shape(O.rep.rho1, {n1, v0}, v1) || !has_shape(O.rep.rho2, {n0, n0, v0}, v1))
    throw DimensionError("representation does not match the Lie 2-algebra and complex");
  if (!has_shape(O.T0, {v0}, n0)) throw DimensionError("T0 must map V0 to g0", 0);
  if (!has_shape(O.T1, {v1}, n1)) throw DimensionError("T1 must map V1 to g1", 1);
  if (!has_shape(O.T2, {v0, v0}, n1)) throw DimensionError("T2 must map V0 ⊗ V0 to g1", 2);
}

ValidationReport validate_context(const OOperator& O) {
  check_shapes(O);
  ValidationReport r;
  r.merge(validate(O.G), "G:");
  r.merge(validate_rep(O.G, O.V, O.rep), "rep:");
  return r;
}

ValidationReport validate_o(const OOperator& O) {
  check_shapes(O);
  const Lie2Algebra& G = O.G;
  const Lie2Rep& p = O.rep;
  const std::size_t v0 = O.V.V0.dim, v1 = O.V.V1.dim;
  auto T0 = [&](const Vector& u) { return apply1(O.T0, u); };
  auto T1 = [&](const Vector& m) { return apply1(O.T1, m); };
  auto T2 = [&](const Vector& u, const Vector& v) { return ml_apply(O.T2, {u, v}); };
  auto r00 = [&](const Vector& x, const Vector& u) { return ml_apply(p.rho0_V0, {x, u}); };
  auto r01 = [&](const Vector& x, const Vector& m) { return ml_apply(p.rho0_V1, {x, m}); };
  auto r1 = [&](const Vector& a, const Vector& u) { return ml_apply(p.rho1, {a, u}); };
  auto r2 = [&](const Vector& x, const Vector& y, const Vector& u) { return ml_apply(p.rho2, {x, y, u}); };
  auto l2 = [&](const Vector& x, const Vector& y) { return ml_apply(G.l2_00, {x, y}); };
  auto l2xa = [&](const Vector& x, const Vector& a) { return ml_apply(G.l2_01, {x, a}); };
  auto e0 = [&](std::size_t i) { return unit_vector(v0, i); };
  auto e1 = [&](std::size_t i) { return unit_vector(v1, i); };

  std::vector<CheckFamily> families;
  families.push_back([&](ValidationReport& r) {
    for (std::size_t m = 0; m < v1; ++m)
      r.expect_equal("chain", {m}, T0(apply1(O.V.dM, e1(m))), apply1(G.dk, T1(e1(m))));
    for (std::size_t i = 0; i < v0; ++i)
      for (std::size_t j = i; j < v0; ++j)
        r.expect_zero("skew(T2)", {i, j}, O.T2.image({i, j}) + O.T2.image({j, i}));
  });
  families.push_back([&](ValidationReport& r) {
    for (std::size_t i = 0; i < v0; ++i)
      for (std::size_t j = 0; j < v0; ++j) {
        Vector u = e0(i), v = e0(j);
        Vector lhs = T0(r00(T0(u), v) - r00(T0(v), u)) - l2(T0(u), T0(v));
        r.expect_equal("(i)", {i, j}, lhs, apply1(G.dk, T2(u, v)));
      }
    for (std::size_t m = 0; m < v1; ++m)
      for (std::size_t j = 0; j < v0; ++j) {
        Vector em = e1(m), v = e0(j);
        // l2(T1m, T0v) = −l2_01(T0v, T1m)
        Vector lhs = T1(r1(T1(em), v) - r01(T0(v), em)) + l2xa(T0(v), T1(em));
        r.expect_equal("(ii)", {m, j}, lhs, T2(apply1(O.V.dM, em), v));
      }
  });
  families.push_back([&](ValidationReport& r) {
    auto dot = [&](const Vector& a, const Vector& b) { return r00(T0(a), b); };
    auto l3ind = [&](const Vector& a, const Vector& b, const Vector& c) {
      return -r1(T2(a, b), c) - r2(T0(a), T0(b), c);
    };
    for (std::size_t a = 0; a < v0; ++a)
      for (std::size_t b = 0; b < v0; ++b)
        for (std::size_t c = 0; c < v0; ++c) {
          Vector v[3] = {e0(a), e0(b), e0(c)};
          Vector top = ml_apply(G.l3, {T0(v[0]), T0(v[1]), T0(v[2])});
          Vector s = top, s2 = top;
          for (std::size_t k = 0; k < 3; ++k) {
            const Vector &x = v[k], &y = v[(k + 1) % 3], &z = v[(k + 2) % 3];
            s += l2xa(T0(x), T2(y, z));
            s += T2(z, r00(T0(x), y) - r00(T0(y), x));
            s += T1(r1(T2(y, z), x) + r2(T0(y), T0(z), x));
            s2 += l2xa(T0(x), T2(y, z));
            s2 += T2(z, dot(x, y) - dot(y, x));
            s2 -= T1(l3ind(x, y, z));
          }
          r.expect_zero("(iii)", {a, b, c}, s);
          r.expect_zero("(iii')", {a, b, c}, s2);
        }
  });
  return run_families(families);
}

PreLie2Algebra induced_prelie2_unchecked(const OOperator& O) {
  check_shapes(O);
  const Space &V0 = O.V.V0, &V1 = O.V.V1;
  const Lie2Rep& p = O.rep;
  PreLie2Algebra A;
  A.A0 = V0;
  A.A1 = V1;
  A.dM = O.V.dM;
  A.mul00 = precompose(p.rho0_V0, 0, O.T0).relabel({V0, V0}, V0);
  A.mul01 = precompose(p.rho0_V1, 0, O.T0).relabel({V0, V1}, V1);
  A.mul10 = precompose(p.rho1, 0, O.T1).relabel({V1, V0}, V1);
  A.l3 = MultiMap::from_basis({V0, V0, V0}, V1, [&](std::span<const std::size_t> i) {
    Vector a = O.T0.image({i[0]}), b = O.T0.image({i[1]});
    return -ml_apply(p.rho1, {O.T2.image({i[0], i[1]}), unit_vector(V0.dim, i[2])}) -
           ml_apply(p.rho2, {a, b, unit_vector(V0.dim, i[2])});
  });
  return A;
}

PreLie2Algebra induced_prelie2(const OOperator& O) {
  require_valid(validate_context(O), "induced_prelie2: invalid Lie 2-algebra or representation");
  require_valid(validate_o(O), "induced_prelie2: not an O-operator");
  return induced_prelie2_unchecked(O);
}

Lie2Hom induced_hom(const OOperator& O) {
  require_valid(validate_context(O), "induced_hom: invalid Lie 2-algebra or representation");
  require_valid(validate_o(O), "induced_hom: not an O-operator");
  return {O.T0, O.T1, O.T2};
}

OOperator identity_o_operator(const PreLie2Algebra& A) {
  Lie2FromPreLie2 L = from_prelie2(A);
  return {L.lie2, L.complex, L.rep, MultiMap::identity(A.A0), MultiMap::identity(A.A1),
          MultiMap({A.A0, A.A0}, A.A1)};
}

LieRep flattened_rep(const Lie2Algebra& G, const TwoTermComplex& V, const Lie2Rep& rep) {
  const std::size_t n0 = G.g0.dim, n1 = G.g1.dim, v0 = V.V0.dim, v1 = V.V1.dim;
  Space g{n0 + n1, G.g0.label + "+" + G.g1.label}, W{v0 + v1, V.V0.label + "+" + V.V1.label};
  MultiMap rho = MultiMap::from_basis({g, W}, W, [&](std::span<const std::size_t> idx) {
    auto [x, a] = split(idx[0], n0, n1);
    auto [u, m] = split(idx[1], v0, v1);
    return concat(ml_apply(rep.rho0_V0, {x, u}),
                  ml_apply(rep.rho0_V1, {x, m}) + ml_apply(rep.rho1, {a, u}));
  });
  return {W, rho};
}

MultiMap flattened_map(const MultiMap& T0, const MultiMap& T1) {
  const std::size_t v0 = T0.input(0).dim, v1 = T1.input(0).dim;
  const std::size_t n0 = T0.output().dim, n1 = T1.output().dim;
  Space W{v0 + v1, "V"}, g{n0 + n1, "g"};
  return MultiMap::from_basis({W}, g, [&](std::span<const std::size_t> i) {
    if (i[0] < v0) return concat(T0.image({i[0]}), zero_vector(n1));
    return concat(zero_vector(n0), T1.image({i[0] - v0}));
  });
}

bool flatten_check(const MultiMap& T0, const MultiMap& T1, const Lie2Algebra& G,
                   const TwoTermComplex& V, const Lie2Rep& rep) {
  OOperator O{G, V, rep, T0, T1, MultiMap({V.V0, V.V0}, G.g1)};
  check_shapes(O);
  if (!is_strict(G) || !is_strict(rep)) throw std::invalid_argument("flatten_check: context is not strict");
  LieAlgebra g = semidirect_lie_algebra(G);
  LieRep W = flattened_rep(G, V, rep);
  bool o_ok = validate_lie_o_operator(flattened_map(T0, T1), g, W).ok();
  bool chain = ml_compose_linear(T0, V.dM) == ml_compose_linear(G.dk, T1);
  return o_ok && chain;
}

}  // namespace prelie2
