#include "prelie2/ybe.hpp"

namespace prelie2 {

Tensor2::Tensor2(std::size_t n, std::vector<Rational> c) : dim(n), coeffs(std::move(c)) {
  if (coeffs.size() != n * n) throw DimensionError("tensor must have dim² coefficients");
}

bool Tensor2::is_zero() const {
  for (const auto& c : coeffs)
    if (!c.is_zero()) return false;
  return true;
}

Tensor2 operator+(const Tensor2& a, const Tensor2& b) {
  if (a.dim != b.dim) throw DimensionError("tensor dimensions differ");
  Tensor2 out = a;
  for (std::size_t k = 0; k < out.coeffs.size(); ++k) out.coeffs[k] += b.coeffs[k];
  return out;
}

Tensor2 operator-(const Tensor2& a, const Tensor2& b) { return a + (-b); }

Tensor2 Tensor2::operator-() const {
  Tensor2 out = *this;
  for (auto& c : out.coeffs) c = -c;
  return out;
}

Tensor2 sigma(const Tensor2& r) {
  Tensor2 out(r.dim);
  for (std::size_t i = 0; i < r.dim; ++i)
    for (std::size_t j = 0; j < r.dim; ++j) out.at(j, i) = r.at(i, j);
  return out;
}

bool is_skew(const Tensor2& r) { return r + sigma(r) == Tensor2(r.dim); }

std::vector<Rational> cybe_value(const Tensor2& r, const LieAlgebra& g) {
  const std::size_t n = g.g.dim;
  if (r.dim != n) throw DimensionError("r does not match the Lie algebra");
  std::vector<std::pair<std::size_t, std::size_t>> support;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!r.at(i, j).is_zero()) support.emplace_back(i, j);
  std::vector<Rational> out(n * n * n);
  auto add = [&](std::size_t a, std::size_t b, std::size_t c, const Rational& s) {
    if (!s.is_zero()) out[(a * n + b) * n + c] += s;
  };
  for (auto [i, j] : support)
    for (auto [k, l] : support) {
      const Rational w = r.at(i, j) * r.at(k, l);
      for (std::size_t t = 0; t < n; ++t) {
        add(t, j, l, w * g.bracket.at({i, k}, t));  // [b_i,b_k] ⊗ b_j ⊗ b_l
        add(i, k, t, w * g.bracket.at({j, l}, t));  // b_i ⊗ b_k ⊗ [b_j,b_l]
        add(i, t, l, w * g.bracket.at({j, k}, t));  // b_i ⊗ [b_j,b_k] ⊗ b_l
      }
    }
  return out;
}

ValidationReport cybe_check(const Tensor2& r, const LieAlgebra& g) {
  const std::size_t n = g.g.dim;
  std::vector<Rational> v = cybe_value(r, g);
  ValidationReport rep;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (!v[(a * n + b) * n + c].is_zero()) rep.add("CYBE", {a, b, c}, {v[(a * n + b) * n + c]});
  return rep;
}

LieAlgebra dual_semidirect(const LieAlgebra& g, const LieRep& rep) {
  return semidirect(g, dual_rep(g, rep));
}

Tensor2 o_operator_to_r(const MultiMap& T, const LieAlgebra& g, const LieRep& rep) {
  const std::size_t n = g.g.dim, m = rep.V.dim;
  if (T.arity() != 1 || T.input(0).dim != m || T.output().dim != n)
    throw DimensionError("T must map V to g");
  Tensor2 Tbar(n + m);
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t j = 0; j < n; ++j) Tbar.at(n + u, j) = T.at({u}, j);
  return Tbar - sigma(Tbar);
}

Tensor2 rrr(std::size_t n) {
  Tensor2 r(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    r.at(i, n + i) = 1;
    r.at(n + i, i) = -1;
  }
  return r;
}

Tensor2 graded_R(const Tensor2& r, const Tensor2& frkr, const Lie2Algebra& G) {
  const std::size_t n0 = G.g0.dim, n1 = G.g1.dim;
  if (r.dim != n0 + n1) throw DimensionError("r must live on g0 ⊕ g1");
  if (frkr.dim != n1) throw DimensionError("the g1 ⊗ g1 part must live on g1");
  Tensor2 R = r;
  for (std::size_t a = 0; a < n1; ++a)
    for (std::size_t b = 0; b < n1; ++b) {
      const Rational& c = frkr.at(a, b);
      if (c.is_zero()) continue;
      for (std::size_t x = 0; x < n0; ++x) {
        R.at(x, n0 + b) -= c * G.dk.at({a}, x);  // (𝔡 ⊗ 1)
        R.at(n0 + a, x) -= c * G.dk.at({b}, x);  // (1 ⊗ 𝔡)
      }
    }
  return R;
}

GradedCybeReport graded_cybe_check(const Tensor2& r, const Tensor2& frkr, const Lie2Algebra& G) {
  check_shapes(G);
  if (!is_strict(G)) throw std::invalid_argument("graded_cybe_check: Lie 2-algebra is not strict");
  const std::size_t n0 = G.g0.dim, n1 = G.g1.dim, n = n0 + n1;
  if (r.dim != n) throw DimensionError("r must live on g0 ⊕ g1");
  if (frkr.dim != n1) throw DimensionError("the g1 ⊗ g1 part must live on g1");
  ValidationReport support;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if ((i < n0) == (j < n0) && !r.at(i, j).is_zero()) support.add("support", {i, j}, {r.at(i, j)});
  require_valid(support, "graded_cybe_check: r must lie in g0⊗g1 ⊕ g1⊗g0");

  GradedCybeReport out;
  Tensor2 R = graded_R(r, frkr, G);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      out.witnesses.expect_zero("(a)", {i, j}, {R.at(i, j) + R.at(j, i)});
  out.skew_ok = out.witnesses.ok();

  ValidationReport b = cybe_check(R, semidirect_lie_algebra(G));
  out.cybe_ok = b.ok();
  for (const auto& v : b.violations()) out.witnesses.add("(b)", v.indices, v.difference);

  // (𝔡⊗1 − 1⊗𝔡) r lands in g0 ⊗ g0.
  std::vector<Rational> c(n0 * n0);
  for (std::size_t a = 0; a < n1; ++a)
    for (std::size_t x = 0; x < n0; ++x) {
      const Rational& left = r.at(n0 + a, x);   // component in g1 ⊗ g0
      const Rational& right = r.at(x, n0 + a);  // component in g0 ⊗ g1
      for (std::size_t y = 0; y < n0; ++y) {
        const Rational& d = G.dk.at({a}, y);
        if (d.is_zero()) continue;
        c[y * n0 + x] += left * d;
        c[x * n0 + y] -= right * d;
      }
    }
  for (std::size_t x = 0; x < n0; ++x)
    for (std::size_t y = 0; y < n0; ++y)
      if (!c[x * n0 + y].is_zero()) {
        out.closed_ok = false;
        out.witnesses.add("(c)", {x, y}, {c[x * n0 + y]});
      }
  out.witnesses.sort();
  return out;
}

GradedSolution solution_from_o_operator(const MultiMap& T0, const MultiMap& T1, const Lie2Algebra& G,
                                        const TwoTermComplex& V, const Lie2Rep& rep) {
  check_shapes(G);
  check_complex(V);
  if (!is_strict(G) || !is_strict(rep))
    throw std::invalid_argument("solution_from_o_operator: context is not strict");
  const std::size_t n0 = G.g0.dim, n1 = G.g1.dim, v0 = V.V0.dim, v1 = V.V1.dim;
  if (T0.arity() != 1 || T0.input(0).dim != v0 || T0.output().dim != n0)
    throw DimensionError("T0 must map V0 to g0", 0);
  if (T1.arity() != 1 || T1.input(0).dim != v1 || T1.output().dim != n1)
    throw DimensionError("T1 must map V1 to g1", 1);
  GradedSolution s;
  s.G = semidirect_strict(G, dual_complex(V), dual_rep(G, V, rep));
  // Flattened basis: g0 | V1* | g1 | V0*.
  const std::size_t b0 = n0 + v1, gof = b0, vof = b0 + n1;
  Tensor2 Tbar(b0 + n1 + v0);
  for (std::size_t u = 0; u < v0; ++u)
    for (std::size_t j = 0; j < n0; ++j) Tbar.at(vof + u, j) = T0.at({u}, j);
  for (std::size_t m = 0; m < v1; ++m)
    for (std::size_t j = 0; j < n1; ++j) Tbar.at(n0 + m, gof + j) = T1.at({m}, j);
  s.r = Tbar - sigma(Tbar);
  s.frkr = Tensor2(n1 + v0);
  return s;
}

GradedSolution canonical_solution(const PreLie2Algebra& A) {
  check_shapes(A);
  if (!is_strict(A)) throw std::invalid_argument("canonical_solution: l3 is not zero");
  Lie2FromPreLie2 L = from_prelie2(A);
  const std::size_t k = A.A0.dim, l = A.A1.dim;
  GradedSolution s;
  s.G = semidirect_strict(L.lie2, dual_complex(L.complex), dual_rep(L.lie2, L.complex, L.rep));
  // Flattened basis: A0 | A1* | A1 | A0*.
  Tensor2 R(2 * (k + l));
  for (std::size_t i = 0; i < k; ++i) {
    R.at(i, k + l + l + i) = 1;
    R.at(k + l + l + i, i) = -1;
  }
  for (std::size_t j = 0; j < l; ++j) {
    R.at(k + l + j, k + j) = 1;
    R.at(k + j, k + l + j) = -1;
  }
  s.r = R;
  s.frkr = Tensor2(l + k);
  return s;
}

BridgeResult a_astar_bridge(const PreLieAlgebra& A, const MultiMap& dM) {
  check_shapes(A);
  const std::size_t n = A.A.dim;
  Space Astar{n, A.A.label + "*"};
  if (dM.arity() != 1 || dM.input(0).dim != n || dM.output().dim != n)
    throw DimensionError("dM must map A* to A");
  MultiMap d = dM.relabel({Astar}, A.A);
  StandardReps reps = standard_reps(A);
  BridgeResult b;
  b.prelie2 = {A.A,
               Astar,
               d,
               A.mul,
               reps.dual.rho.relabel({A.A, Astar}, Astar),
               permute_slots(reps.dual.mu, {1, 0}).relabel({Astar, A.A}, Astar),
               MultiMap({A.A, A.A, A.A}, Astar)};
  // L*_x = −(L_x)ᵀ
  MultiMap Lstar = MultiMap::from_basis({A.A, Astar}, Astar, [&](std::span<const std::size_t> i) {
    Vector v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = -A.mul.at({i[0], k}, i[1]);
    return v;
  });
  b.lie2 = {A.A, Astar, d, A.mul - permute_slots(A.mul, {1, 0}), Lstar, MultiMap({A.A, A.A, A.A}, Astar)};
  b.dM_skew = true;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      if (d.at({j}, k) != -d.at({k}, j)) b.dM_skew = false;
  b.prelie2_valid = validate(b.prelie2).ok();
  b.lie2_valid = validate(b.lie2).ok();
  b.equivalence = (!b.prelie2_valid || b.lie2_valid) && (!b.dM_skew || !b.lie2_valid || b.prelie2_valid);
  return b;
}

}  // namespace prelie2
