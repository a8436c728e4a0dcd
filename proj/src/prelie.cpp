#include "prelie2/prelie.hpp"

#include <algorithm>
#include <numeric>

#include "prelie2/linalg.hpp"

namespace prelie2 {

namespace {

int perm_sign(std::vector<std::size_t> p) {
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    while (p[i] != i) {
      std::swap(p[i], p[p[i]]);
      s = -s;
    }
  return s;
}

void check_rep_shape(const PreLieAlgebra& A, const PreLieRep& rep) {
  for (const MultiMap* m : {&rep.rho, &rep.mu})
    if (m->arity() != 2 || m->input(0).dim != A.A.dim || m->input(1).dim != rep.V.dim ||
        m->output().dim != rep.V.dim)
      throw DimensionError("representation maps must be A ⊗ V → V");
}

void check_cochain_shape(const PreLieAlgebra& A, const PreLieRep& rep, const Cochain& w) {
  if (w.n == 0 || w.map.arity() != w.n) throw DimensionError("cochain arity does not match n");
  for (std::size_t k = 0; k < w.n; ++k)
    if (w.map.input(k).dim != A.A.dim) throw DimensionError("cochain slot is not A", k);
  if (w.map.output().dim != rep.V.dim) throw DimensionError("cochain does not land in V");
}

}  // namespace

void check_shapes(const PreLieAlgebra& A) {
  const auto& m = A.mul;
  if (m.arity() != 2 || m.input(0).dim != A.A.dim || m.input(1).dim != A.A.dim ||
      m.output().dim != A.A.dim)
    throw DimensionError("product must be A ⊗ A → A");
}

ValidationReport validate_prelie(const PreLieAlgebra& A) {
  check_shapes(A);
  const std::size_t n = A.A.dim;
  const auto& m = A.mul;
  auto e = [n](std::size_t i) { return unit_vector(n, i); };
  ValidationReport r;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        Vector a = ml_apply(m, {m.image({x, y}), e(z)}) - ml_apply(m, {e(x), m.image({y, z})});
        Vector b = ml_apply(m, {m.image({y, x}), e(z)}) - ml_apply(m, {e(y), m.image({x, z})});
        r.expect_equal("associator", {x, y, z}, a, b);
      }
  r.sort();
  return r;
}

LieAlgebra sub_adjacent_unchecked(const PreLieAlgebra& A) {
  check_shapes(A);
  MultiMap br = A.mul - permute_slots(A.mul, {1, 0});
  return {A.A, br};
}

LieAlgebra sub_adjacent(const PreLieAlgebra& A) {
  require_valid(validate_prelie(A), "sub_adjacent: not a pre-Lie algebra");
  return sub_adjacent_unchecked(A);
}

StandardReps standard_reps(const PreLieAlgebra& A) {
  require_valid(validate_prelie(A), "standard_reps: not a pre-Lie algebra");
  const Space& S = A.A;
  Space D{S.dim, S.label + "*"};
  PreLieRep left{S, A.mul, permute_slots(A.mul, {1, 0})};
  // ⟨ad*_x ξ_k, e_j⟩ = −ξ_k(x·e_j) + ξ_k(e_j·x),  ⟨−R*_x ξ_k, e_j⟩ = ξ_k(e_j·x)
  MultiMap rho = MultiMap::from_basis({S, D}, D, [&](std::span<const std::size_t> idx) {
    Vector out(D.dim);
    for (std::size_t j = 0; j < D.dim; ++j)
      out[j] = -A.mul.at({idx[0], j}, idx[1]) + A.mul.at({j, idx[0]}, idx[1]);
    return out;
  });
  MultiMap mu = MultiMap::from_basis({S, D}, D, [&](std::span<const std::size_t> idx) {
    Vector out(D.dim);
    for (std::size_t j = 0; j < D.dim; ++j) out[j] = A.mul.at({j, idx[0]}, idx[1]);
    return out;
  });
  return {left, PreLieRep{D, rho, mu}};
}

PreLieRep trivial_rep(const PreLieAlgebra& A, std::size_t dim) {
  Space V{dim, "k"};
  return {V, MultiMap({A.A, V}, V), MultiMap({A.A, V}, V)};
}

ValidationReport validate_rep(const PreLieAlgebra& A, const PreLieRep& rep) {
  check_shapes(A);
  check_rep_shape(A, rep);
  const std::size_t n = A.A.dim, d = rep.V.dim;
  auto e = [n](std::size_t i) { return unit_vector(n, i); };
  ValidationReport r;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t u = 0; u < d; ++u) {
        // ρ([x,y])u = ρ(x)ρ(y)u − ρ(y)ρ(x)u
        Vector br = A.mul.image({x, y}) - A.mul.image({y, x});
        Vector lhs = ml_apply(rep.rho, {br, unit_vector(d, u)});
        Vector rhs = ml_apply(rep.rho, {e(x), rep.rho.image({y, u})}) -
                     ml_apply(rep.rho, {e(y), rep.rho.image({x, u})});
        r.expect_equal("rho", {x, y, u}, lhs, rhs);
        // ρ(x)μ(y)u − μ(y)ρ(x)u = μ(x·y)u − μ(y)μ(x)u
        Vector l2 = ml_apply(rep.rho, {e(x), rep.mu.image({y, u})}) -
                    ml_apply(rep.mu, {e(y), rep.rho.image({x, u})});
        Vector r2 = ml_apply(rep.mu, {A.mul.image({x, y}), unit_vector(d, u)}) -
                    ml_apply(rep.mu, {e(y), rep.mu.image({x, u})});
        r.expect_equal("mu", {x, y, u}, l2, r2);
      }
  r.sort();
  return r;
}

ValidationReport validate_cochain(const PreLieAlgebra& A, const PreLieRep& rep, const Cochain& w) {
  check_cochain_shape(A, rep, w);
  ValidationReport r;
  const std::size_t n = w.n;
  for (std::size_t k = 0; k + 2 < n; ++k) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[k], perm[k + 1]);
    MultiMap sum = w.map + permute_slots(w.map, perm);
    for (std::size_t t = 0; t < sum.tuple_count(); ++t) {
      auto idx = tuple_from_flat(t, sum.inputs());
      r.expect_zero("skew", idx, sum.image(idx));
    }
  }
  r.sort();
  return r;
}

Cochain coboundary(const Cochain& w, const PreLieAlgebra& A, const PreLieRep& rep) {
  check_shapes(A);
  check_rep_shape(A, rep);
  check_cochain_shape(A, rep, w);
  const std::size_t n = w.n, dimA = A.A.dim;
  std::vector<Space> ins(n + 1, A.A);
  auto e = [dimA](std::size_t i) { return unit_vector(dimA, i); };

  MultiMap out = MultiMap::from_basis(ins, rep.V, [&](std::span<const std::size_t> x) {
    Vector acc(rep.V.dim);
    std::vector<Vector> args;
    for (std::size_t i = 0; i < n; ++i) {
      Rational sign = (i % 2 == 0) ? 1 : -1;
      // ρ(x_i) ω(x_1..x̂_i..x_{n+1})
      args.clear();
      for (std::size_t k = 0; k <= n; ++k)
        if (k != i) args.push_back(e(x[k]));
      axpy(acc, sign, ml_apply(rep.rho, {e(x[i]), ml_apply(w.map, args)}));
      // μ(x_{n+1}) ω(x_1..x̂_i..x_n, x_i)
      args.clear();
      for (std::size_t k = 0; k < n; ++k)
        if (k != i) args.push_back(e(x[k]));
      args.push_back(e(x[i]));
      axpy(acc, sign, ml_apply(rep.mu, {e(x[n]), ml_apply(w.map, args)}));
      // −ω(x_1..x̂_i..x_n, x_i·x_{n+1})
      args.back() = A.mul.image({x[i], x[n]});
      axpy(acc, -sign, ml_apply(w.map, args));
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        Rational sign = ((i + j) % 2 == 0) ? 1 : -1;
        args.clear();
        args.push_back(A.mul.image({x[i], x[j]}) - A.mul.image({x[j], x[i]}));
        for (std::size_t k = 0; k <= n; ++k)
          if (k != i && k != j) args.push_back(e(x[k]));
        axpy(acc, sign, ml_apply(w.map, args));
      }
    return acc;
  });
  return {n + 1, out};
}

ValidationReport check_cocycle(const Cochain& w, const PreLieAlgebra& A, const PreLieRep& rep) {
  Cochain dw = coboundary(w, A, rep);
  ValidationReport r;
  for (std::size_t t = 0; t < dw.map.tuple_count(); ++t) {
    auto idx = tuple_from_flat(t, dw.map.inputs());
    r.expect_zero("cocycle", idx, dw.map.image(idx));
  }
  return r;
}

std::vector<Cochain> cocycle_basis(const PreLieAlgebra& A, const PreLieRep& rep, std::size_t n) {
  if (n == 0) throw DimensionError("cochains have at least one slot");
  const std::size_t dimA = A.A.dim, d = rep.V.dim;
  // Parameters: strictly increasing (n−1)-tuples for the skew slots, then
  // the last slot and the output coordinate.
  std::vector<std::vector<std::size_t>> heads;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == n - 1) {
      heads.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < dimA; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);

  std::vector<std::size_t> perm(n - 1);
  std::vector<std::vector<std::size_t>> perms;
  std::iota(perm.begin(), perm.end(), 0);
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<Space> ins(n, A.A);
  std::vector<Cochain> params;
  for (const auto& h : heads)
    for (std::size_t last = 0; last < dimA; ++last)
      for (std::size_t o = 0; o < d; ++o) {
        MultiMap m(ins, rep.V);
        for (const auto& p : perms) {
          std::vector<std::size_t> idx(n);
          for (std::size_t k = 0; k + 1 < n; ++k) idx[k] = h[p[k]];
          idx[n - 1] = last;
          std::size_t flat = 0;
          for (std::size_t k = 0; k < n; ++k) flat = flat * dimA + idx[k];
          m.at_flat(flat * d + o) = perm_sign(p);
        }
        params.push_back({n, std::move(m)});
      }

  std::size_t rows = 1;
  for (std::size_t k = 0; k <= n; ++k) rows *= dimA;
  rows *= d;
  Matrix sys(rows, params.size());
  for (std::size_t c = 0; c < params.size(); ++c) {
    Cochain dw = coboundary(params[c], A, rep);
    for (std::size_t r = 0; r < rows; ++r) sys(r, c) = dw.map.coeffs()[r];
  }
  std::vector<Cochain> basis;
  for (const auto& v : nullspace(sys)) {
    MultiMap m(ins, rep.V);
    for (std::size_t c = 0; c < params.size(); ++c)
      if (!v[c].is_zero()) m += v[c] * params[c].map;
    basis.push_back({n, std::move(m)});
  }
  return basis;
}

ValidationReport validate_invariant_form(const PreLieAlgebra& A, const InvariantForm& w) {
  check_shapes(A);
  const auto& om = w.omega;
  if (om.arity() != 2 || om.input(0).dim != A.A.dim || om.input(1).dim != A.A.dim ||
      om.output().dim != 1)
    throw DimensionError("form must be A ⊗ A → k");
  const std::size_t n = A.A.dim;
  auto e = [n](std::size_t i) { return unit_vector(n, i); };
  ValidationReport r;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u; v < n; ++v) r.expect_zero("skew", {u, v}, om.image({u, v}) + om.image({v, u}));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t x = 0; x < n; ++x) {
        Vector br = A.mul.image({u, v}) - A.mul.image({v, u});
        Vector s = ml_apply(om, {br, e(x)}) + ml_apply(om, {e(v), A.mul.image({u, x})});
        r.expect_zero("invariant", {u, v, x}, s);
      }
  r.sort();
  return r;
}

std::vector<InvariantForm> invariant_forms(const PreLieAlgebra& A) {
  check_shapes(A);
  const std::size_t n = A.A.dim;
  Space k{1, "k"};
  std::vector<MultiMap> params;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      MultiMap m({A.A, A.A}, k);
      m.at({i, j}, 0) = 1;
      m.at({j, i}, 0) = -1;
      params.push_back(std::move(m));
    }
  auto e = [n](std::size_t i) { return unit_vector(n, i); };
  Matrix sys(n * n * n, params.size());
  for (std::size_t c = 0; c < params.size(); ++c) {
    std::size_t row = 0;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v)
        for (std::size_t x = 0; x < n; ++x) {
          Vector br = A.mul.image({u, v}) - A.mul.image({v, u});
          Vector s = ml_apply(params[c], {br, e(x)}) +
                     ml_apply(params[c], {e(v), A.mul.image({u, x})});
          sys(row++, c) = s[0];
        }
  }
  std::vector<InvariantForm> out;
  for (const auto& v : nullspace(sys)) {
    MultiMap m({A.A, A.A}, k);
    for (std::size_t c = 0; c < params.size(); ++c)
      if (!v[c].is_zero()) m += v[c] * params[c];
    out.push_back({std::move(m)});
  }
  return out;
}

Cochain cocycle_from_form(const PreLieAlgebra& A, const InvariantForm& w) {
  require_valid(validate_prelie(A), "cocycle_from_form: not a pre-Lie algebra");
  require_valid(validate_invariant_form(A, w), "cocycle_from_form: form is not skew and invariant");
  const std::size_t n = A.A.dim;
  LieAlgebra g = sub_adjacent_unchecked(A);
  MultiMap phi = MultiMap::from_basis({A.A, A.A, A.A}, w.omega.output(),
                                      [&](std::span<const std::size_t> idx) {
                                        return ml_apply(w.omega, {g.bracket.image({idx[0], idx[1]}),
                                                                  unit_vector(n, idx[2])});
                                      });
  Cochain c{3, phi};
  auto closed = check_cocycle(c, A, trivial_rep(A, 1));
  if (!closed.ok())
    throw std::logic_error("cocycle_from_form produced a non-closed cochain:\n" + closed.summary());
  return c;
}

}  // namespace prelie2
