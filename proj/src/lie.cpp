#include "prelie2/lie.hpp"

namespace prelie2 {

ValidationReport validate_lie(const LieAlgebra& g) {
  const std::size_t n = g.g.dim;
  const auto& br = g.bracket;
  auto e = [n](std::size_t i) { return unit_vector(n, i); };
  ValidationReport r;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      r.expect_zero("skew", {i, j}, br.image({i, j}) + br.image({j, i}));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector s = ml_apply(br, {e(i), br.image({j, k})});
        s += ml_apply(br, {e(j), br.image({k, i})});
        s += ml_apply(br, {e(k), br.image({i, j})});
        r.expect_zero("Jacobi", {i, j, k}, s);
      }
  r.sort();
  return r;
}

MultiMap action_of(const MultiMap& rho, const Vector& x) {
  const Space& V = rho.output();
  return MultiMap::from_basis({V}, V, [&](std::span<const std::size_t> idx) {
    return ml_apply(rho, {x, unit_vector(V.dim, idx[0])});
  });
}

ValidationReport validate_lie_rep(const LieAlgebra& g, const LieRep& rep) {
  const std::size_t n = g.g.dim, d = rep.V.dim;
  ValidationReport r;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t v = 0; v < d; ++v) {
        Vector ev = unit_vector(d, v);
        Vector lhs = ml_apply(rep.rho, {g.bracket.image({i, j}), ev});
        Vector rhs = ml_apply(rep.rho, {unit_vector(n, i), rep.rho.image({j, v})}) -
                     ml_apply(rep.rho, {unit_vector(n, j), rep.rho.image({i, v})});
        r.expect_equal("rep", {i, j, v}, lhs, rhs);
      }
  r.sort();
  return r;
}

LieRep dual_rep(const LieAlgebra& g, const LieRep& rep) {
  Space Vd{rep.V.dim, rep.V.label + "*"};
  // ⟨ρ*(x)ξ_k, v_j⟩ = −⟨ξ_k, ρ(x)v_j⟩
  MultiMap rho = MultiMap::from_basis({g.g, Vd}, Vd, [&](std::span<const std::size_t> idx) {
    Vector out(Vd.dim);
    for (std::size_t j = 0; j < Vd.dim; ++j) out[j] = -rep.rho.at({idx[0], j}, idx[1]);
    return out;
  });
  return {Vd, rho};
}

LieAlgebra semidirect(const LieAlgebra& g, const LieRep& rep) {
  const std::size_t n = g.g.dim, d = rep.V.dim;
  Space s{n + d, g.g.label + "+" + rep.V.label};
  auto split = [n, d](std::size_t i) {
    return std::pair<Vector, Vector>{i < n ? unit_vector(n, i) : zero_vector(n),
                                     i < n ? zero_vector(d) : unit_vector(d, i - n)};
  };
  MultiMap br = MultiMap::from_basis({s, s}, s, [&](std::span<const std::size_t> idx) {
    auto [x, u] = split(idx[0]);
    auto [y, v] = split(idx[1]);
    Vector lie = ml_apply(g.bracket, {x, y});
    Vector mod = ml_apply(rep.rho, {x, v}) - ml_apply(rep.rho, {y, u});
    return concat(lie, mod);
  });
  return {s, br};
}

ValidationReport validate_lie_o_operator(const MultiMap& T, const LieAlgebra& g,
                                         const LieRep& rep) {
  const std::size_t d = rep.V.dim;
  ValidationReport r;
  for (std::size_t u = 0; u < d; ++u)
    for (std::size_t v = 0; v < d; ++v) {
      Vector Tu = T.image({u}), Tv = T.image({v});
      Vector lhs = ml_apply(g.bracket, {Tu, Tv});
      Vector inner = ml_apply(rep.rho, {Tu, unit_vector(d, v)}) -
                     ml_apply(rep.rho, {Tv, unit_vector(d, u)});
      r.expect_equal("O", {u, v}, lhs, ml_apply(T, {inner}));
    }
  r.sort();
  return r;
}

ValidationReport validate_lie_hom(const MultiMap& f, const LieAlgebra& g, const LieAlgebra& h) {
  const std::size_t n = g.g.dim;
  ValidationReport r;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      r.expect_equal("hom", {i, j}, ml_apply(f, {g.bracket.image({i, j})}),
                     ml_apply(h.bracket, {f.image({i}), f.image({j})}));
  r.sort();
  return r;
}

}  // namespace prelie2
