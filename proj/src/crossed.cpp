#include "prelie2/crossed.hpp"

#include <algorithm>

namespace prelie2 {

namespace {

Vector apply1(const MultiMap& f, const Vector& v) { return ml_apply(f, {v}); }

bool has_shape(const MultiMap& m, std::vector<std::size_t> ins, std::size_t out) {
  if (m.arity() != ins.size() || m.output().dim != out) return false;
  for (std::size_t k = 0; k < ins.size(); ++k)
    if (m.input(k).dim != ins[k]) return false;
  return true;
}

}  // namespace

void check_shapes(const PreLieCrossedModule& cm) {
  check_shapes(cm.A0alg);
  check_shapes(cm.A1alg);
  const std::size_t a = cm.A0alg.A.dim, b = cm.A1alg.A.dim;
  if (!has_shape(cm.dM, {b}, a)) throw DimensionError("dM must map A1 to A0");
  if (!has_shape(cm.rho, {a, b}, b)) throw DimensionError("rho must be A0 ⊗ A1 → A1");
  if (!has_shape(cm.mu, {a, b}, b)) throw DimensionError("mu must be A0 ⊗ A1 → A1");
}

ValidationReport validate(const PreLieCrossedModule& cm) {
  check_shapes(cm);
  const std::size_t n0 = cm.A0alg.A.dim, n1 = cm.A1alg.A.dim;
  auto p0 = [&](const Vector& u, const Vector& v) { return ml_apply(cm.A0alg.mul, {u, v}); };
  auto p1 = [&](const Vector& m, const Vector& n) { return ml_apply(cm.A1alg.mul, {m, n}); };
  auto rho = [&](const Vector& u, const Vector& m) { return ml_apply(cm.rho, {u, m}); };
  auto mu = [&](const Vector& u, const Vector& m) { return ml_apply(cm.mu, {u, m}); };
  auto d = [&](const Vector& m) { return apply1(cm.dM, m); };
  auto e0 = [&](std::size_t i) { return unit_vector(n0, i); };
  auto e1 = [&](std::size_t i) { return unit_vector(n1, i); };

  std::vector<CheckFamily> families;
  families.push_back([&](ValidationReport& r) {
    r.merge(validate_prelie(cm.A0alg), "A0:");
    r.merge(validate_prelie(cm.A1alg), "A1:");
    r.merge(validate_rep(cm.A0alg, PreLieRep{cm.A1alg.A, cm.rho, cm.mu}), "action:");
  });
  families.push_back([&](ValidationReport& r) {
    for (std::size_t m = 0; m < n1; ++m)
      for (std::size_t n = 0; n < n1; ++n)
        r.expect_equal("dM hom", {m, n}, d(p1(e1(m), e1(n))), p0(d(e1(m)), d(e1(n))));
    for (std::size_t u = 0; u < n0; ++u)
      for (std::size_t m = 0; m < n1; ++m) {
        r.expect_equal("(C1)-rho", {u, m}, d(rho(e0(u), e1(m))), p0(e0(u), d(e1(m))));
        r.expect_equal("(C1)-mu", {u, m}, d(mu(e0(u), e1(m))), p0(d(e1(m)), e0(u)));
      }
    for (std::size_t m = 0; m < n1; ++m)
      for (std::size_t n = 0; n < n1; ++n) {
        Vector mn = p1(e1(m), e1(n));
        r.expect_equal("(C2)-rho", {m, n}, rho(d(e1(m)), e1(n)), mn);
        r.expect_equal("(C2)-mu", {m, n}, mu(d(e1(n)), e1(m)), mn);
      }
  });
  families.push_back([&](ValidationReport& r) {
    for (std::size_t u = 0; u < n0; ++u)
      for (std::size_t m = 0; m < n1; ++m)
        for (std::size_t n = 0; n < n1; ++n) {
          Vector x = e0(u), a = e1(m), b = e1(n);
          r.expect_equal("derived:crossed1", {u, m, n}, rho(x, p1(a, b)),
                         p1(rho(x, a), b) + p1(a, rho(x, b)) - p1(mu(x, a), b));
          r.expect_equal("derived:crossed2", {u, m, n}, mu(x, p1(a, b)),
                         mu(x, p1(b, a)) + p1(a, mu(x, b)) - p1(b, mu(x, a)));
        }
  });
  return run_families(families);
}

ValidationReport validate(const LieCrossedModule& cm) {
  const std::size_t n0 = cm.h0.g.dim, n1 = cm.h1.g.dim;
  if (!has_shape(cm.dt, {n1}, n0)) throw DimensionError("dt must map h1 to h0");
  if (!has_shape(cm.phi, {n0, n1}, n1)) throw DimensionError("phi must be h0 ⊗ h1 → h1");
  ValidationReport r;
  r.merge(validate_lie(cm.h0), "h0:");
  r.merge(validate_lie(cm.h1), "h1:");
  r.merge(validate_lie_hom(cm.dt, cm.h1, cm.h0), "dt:");
  r.merge(validate_lie_rep(cm.h0, LieRep{cm.h1.g, cm.phi}), "phi:");
  auto b0 = [&](const Vector& x, const Vector& y) { return ml_apply(cm.h0.bracket, {x, y}); };
  auto b1 = [&](const Vector& a, const Vector& b) { return ml_apply(cm.h1.bracket, {a, b}); };
  auto phi = [&](const Vector& x, const Vector& a) { return ml_apply(cm.phi, {x, a}); };
  for (std::size_t x = 0; x < n0; ++x)
    for (std::size_t a = 0; a < n1; ++a) {
      Vector ex = unit_vector(n0, x), ea = unit_vector(n1, a);
      r.expect_equal("equivariance", {x, a}, apply1(cm.dt, phi(ex, ea)), b0(ex, apply1(cm.dt, ea)));
      for (std::size_t b = 0; b < n1; ++b) {
        Vector eb = unit_vector(n1, b);
        r.expect_equal("derivation", {x, a, b}, phi(ex, b1(ea, eb)),
                       b1(phi(ex, ea), eb) + b1(ea, phi(ex, eb)));
      }
    }
  for (std::size_t a = 0; a < n1; ++a)
    for (std::size_t b = 0; b < n1; ++b) {
      Vector ea = unit_vector(n1, a), eb = unit_vector(n1, b);
      r.expect_equal("Peiffer", {a, b}, phi(apply1(cm.dt, ea), eb), b1(ea, eb));
    }
  r.sort();
  return r;
}

PreLie2Algebra to_strict(const PreLieCrossedModule& cm) {
  require_valid(validate(cm), "to_strict: not a crossed module");
  const Space &A0 = cm.A0alg.A, &A1 = cm.A1alg.A;
  return {A0, A1, cm.dM, cm.A0alg.mul, cm.rho, permute_slots(cm.mu, {1, 0}), MultiMap({A0, A0, A0}, A1)};
}

PreLieCrossedModule from_strict(const PreLie2Algebra& A) {
  check_shapes(A);
  if (!is_strict(A)) throw std::invalid_argument("from_strict: l3 is not zero");
  require_valid(validate(A), "from_strict: not a pre-Lie 2-algebra");
  PreLieCrossedModule cm;
  cm.A0alg = {A.A0, A.mul00};
  cm.A1alg = {A.A1, precompose(A.mul01, 0, A.dM).relabel({A.A1, A.A1}, A.A1)};
  cm.dM = A.dM;
  cm.rho = A.mul01;
  cm.mu = permute_slots(A.mul10, {1, 0});
  return cm;
}

PreLieAlgebra direct_sum_prelie(const PreLieCrossedModule& cm) {
  require_valid(validate(cm), "direct_sum_prelie: not a crossed module");
  const std::size_t n0 = cm.A0alg.A.dim, n1 = cm.A1alg.A.dim;
  Space s{n0 + n1, cm.A0alg.A.label + "+" + cm.A1alg.A.label};
  auto split = [&](std::size_t i) {
    return std::pair<Vector, Vector>{i < n0 ? unit_vector(n0, i) : zero_vector(n0),
                                     i < n0 ? zero_vector(n1) : unit_vector(n1, i - n0)};
  };
  MultiMap mul = MultiMap::from_basis({s, s}, s, [&](std::span<const std::size_t> idx) {
    auto [u, m] = split(idx[0]);
    auto [v, n] = split(idx[1]);
    return concat(ml_apply(cm.A0alg.mul, {u, v}),
                  ml_apply(cm.rho, {u, n}) + ml_apply(cm.mu, {v, m}) + ml_apply(cm.A1alg.mul, {m, n}));
  });
  return {s, mul};
}

LieCrossedModule sub_adjacent_crossed(const PreLieCrossedModule& cm) {
  require_valid(validate(cm), "sub_adjacent_crossed: not a crossed module");
  return {sub_adjacent(cm.A0alg), sub_adjacent(cm.A1alg), cm.dM, cm.rho - cm.mu};
}

LieAlgebra flatten(const LieCrossedModule& cm) { return semidirect(cm.h0, LieRep{cm.h1.g, cm.phi}); }

PreLieCrossedModule ideal_crossed_module(const PreLieAlgebra& A, const std::vector<std::size_t>& basis) {
  check_shapes(A);
  const std::size_t n = A.A.dim, k = basis.size();
  for (std::size_t b : basis)
    if (b >= n) throw DimensionError("ideal basis index out of range");
  Space B{k, A.A.label + "_ideal"};
  std::vector<Vector> cols;
  for (std::size_t b : basis) cols.push_back(unit_vector(n, b));
  MultiMap inc = MultiMap::linear(B, A.A, cols);
  // Coordinates in B of a vector of A; fails if it leaves the span.
  auto restrict_to_B = [&](const Vector& v) {
    Vector out(k);
    for (std::size_t i = 0; i < n; ++i) {
      auto it = std::find(basis.begin(), basis.end(), i);
      if (it == basis.end()) {
        if (!v[i].is_zero()) throw std::invalid_argument("ideal_crossed_module: span is not an ideal");
      } else {
        out[static_cast<std::size_t>(it - basis.begin())] = v[i];
      }
    }
    return out;
  };
  PreLieCrossedModule cm;
  cm.A0alg = A;
  cm.dM = inc;
  cm.rho = MultiMap::from_basis({A.A, B}, B, [&](std::span<const std::size_t> i) {
    return restrict_to_B(A.mul.image({i[0], basis[i[1]]}));
  });
  cm.mu = MultiMap::from_basis({A.A, B}, B, [&](std::span<const std::size_t> i) {
    return restrict_to_B(A.mul.image({basis[i[1]], i[0]}));
  });
  cm.A1alg = {B, MultiMap::from_basis({B, B}, B, [&](std::span<const std::size_t> i) {
                return restrict_to_B(A.mul.image({basis[i[0]], basis[i[1]]}));
              })};
  return cm;
}

}  // namespace prelie2
