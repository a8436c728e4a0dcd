#include "prelie2/fixtures.hpp"

#include <algorithm>
#include <numeric>

#include "prelie2/linalg.hpp"

namespace prelie2::fixtures {

namespace {

MultiMap product(const Space& A, std::initializer_list<std::array<std::size_t, 3>> table) {
  MultiMap m({A, A}, A);
  for (const auto& [i, j, k] : table) m.at({i, j}, k) = 1;
  return m;
}

MultiMap cyclic_sum(const MultiMap& l3) {
  return l3 + permute_slots(l3, {2, 0, 1}) + permute_slots(l3, {1, 2, 0});
}

}  // namespace

PreLieAlgebra algebra_A() {
  Space A{2, "A"};
  return {A, product(A, {{0, 0, 0}, {0, 1, 1}})};
}

PreLieAlgebra algebra_Omega() {
  Space A{2, "A"};
  return {A, product(A, {{0, 0, 0}, {1, 0, 1}})};
}

PreLieAlgebra algebra_CM3() {
  Space A{3, "A"};
  return {A, product(A, {{0, 0, 0}, {0, 1, 1}, {0, 2, 2}})};
}

PreLieCrossedModule cm_B() { return ideal_crossed_module(algebra_A(), {1}); }
PreLie2Algebra fix_B() { return to_strict(cm_B()); }

InvariantForm form_Omega() {
  auto forms = invariant_forms(algebra_Omega());
  if (forms.empty()) throw std::logic_error("algebra_Omega has no skew invariant form");
  return forms.front();
}

PreLie2Algebra fix_Omega() { return skeletal_from_form(algebra_Omega(), form_Omega()); }

PreLie2Algebra fix_A_lifted() { return lift(algebra_A()); }

PreLie2Algebra fix_S3() {
  for (const PreLieAlgebra& A : {algebra_A(), algebra_Omega(), algebra_CM3()}) {
    PreLieRep k = trivial_rep(A, 1);
    for (const Cochain& c : cocycle_basis(A, k, 3))
      if (!cyclic_sum(c.map).is_zero()) return build_skeletal(A, k, c);
  }
  throw std::logic_error("no 3-cocycle with nonzero cyclic sum among the small algebras");
}

PreLieCrossedModule cm_CM3() { return ideal_crossed_module(algebra_CM3(), {1, 2}); }
PreLie2Algebra fix_CM3() { return to_strict(cm_CM3()); }

MultiMap gauge_B() {
  PreLie2Algebra B = fix_B();
  return MultiMap({B.A0, B.A0}, B.A1, {1, 2, -1, 1});
}

PreLie2Algebra fix_G() { return gauge_transform(fix_B(), gauge_B()); }

PreLie2Algebra fix_zero(std::size_t d0, std::size_t d1) { return PreLie2Algebra::zero(d0, d1); }

std::vector<std::pair<std::string, PreLie2Algebra>> prelie2_fixtures() {
  return {{"FIX-A-lifted", fix_A_lifted()}, {"FIX-B", fix_B()},   {"FIX-Omega", fix_Omega()},
          {"FIX-S3", fix_S3()},             {"FIX-CM3", fix_CM3()}, {"FIX-G", fix_G()},
          {"zero", fix_zero(2, 1)}};
}

PreLie2Algebra gauge_transform(const PreLie2Algebra& A, const MultiMap& theta) {
  check_shapes(A);
  PreLie2Algebra B = A;
  B.mul00 = A.mul00 - postcompose(A.dM, theta);
  B.mul01 = A.mul01 - precompose(theta, 1, A.dM);
  B.mul10 = A.mul10 - precompose(theta, 0, A.dM);
  const std::size_t n = A.A0.dim;
  auto th = [&](const Vector& u, const Vector& v) { return ml_apply(theta, {u, v}); };
  auto uv = [&](const Vector& u, const Vector& v) { return ml_apply(A.mul00, {u, v}); };
  auto um = [&](const Vector& u, const Vector& m) { return ml_apply(B.mul01, {u, m}); };
  auto mu = [&](const Vector& m, const Vector& u) { return ml_apply(B.mul10, {m, u}); };
  MultiMap X = MultiMap::from_basis({A.A0, A.A0, A.A0}, A.A1, [&](std::span<const std::size_t> i) {
    Vector u = unit_vector(n, i[0]), v = unit_vector(n, i[1]), w = unit_vector(n, i[2]);
    return um(u, th(v, w)) - um(v, th(u, w)) + mu(th(v, u), w) - mu(th(u, v), w) - th(v, uv(u, w)) +
           th(u, uv(v, w)) - th(uv(u, v), w) + th(uv(v, u), w);
  });
  B.l3 = A.l3 - X;
  return B;
}

PreLie2Hom gauge_hom(const PreLie2Algebra& A, const MultiMap& theta) {
  return {MultiMap::identity(A.A0), MultiMap::identity(A.A1), theta};
}

PreLie2Algebra transport(const PreLie2Algebra& A, const MultiMap& P0, const MultiMap& P1) {
  check_shapes(A);
  auto Q0 = inverse(P0), Q1 = inverse(P1);
  if (!Q0 || !Q1) throw std::invalid_argument("transport: maps are not invertible");
  PreLie2Algebra B = A;
  B.dM = ml_compose_linear(P0, ml_compose_linear(A.dM, *Q1));
  B.mul00 = postcompose(P0, precompose(precompose(A.mul00, 0, *Q0), 1, *Q0));
  B.mul01 = postcompose(P1, precompose(precompose(A.mul01, 0, *Q0), 1, *Q1));
  B.mul10 = postcompose(P1, precompose(precompose(A.mul10, 0, *Q1), 1, *Q0));
  B.l3 = postcompose(P1, precompose(precompose(precompose(A.l3, 0, *Q0), 1, *Q0), 2, *Q0));
  return B;
}

PreLie2Hom transport_hom(const PreLie2Algebra& A, const MultiMap& P0, const MultiMap& P1) {
  return {P0, P1, MultiMap({A.A0, A.A0}, A.A1)};
}

MultiMap random_map(std::vector<Space> inputs, const Space& out, std::mt19937_64& rng) {
  MultiMap m(std::move(inputs), out);
  std::uniform_int_distribution<int> d(-2, 2);
  for (std::size_t k = 0; k < m.coeffs().size(); ++k) m.at_flat(k) = d(rng);
  return m;
}

MultiMap random_invertible(const Space& s, std::mt19937_64& rng) {
  const std::size_t n = s.dim;
  std::uniform_int_distribution<int> d(-1, 1);
  MultiMap L = MultiMap::identity(s), U = MultiMap::identity(s);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i < j) L.at({i}, j) = d(rng);
      if (i > j) U.at({i}, j) = d(rng);
    }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < n; ++i) cols.push_back(unit_vector(n, perm[i]));
  return ml_compose_linear(MultiMap::linear(s, s, cols), ml_compose_linear(L, U));
}

HomChain random_hom_chain(const PreLie2Algebra& A, std::mt19937_64& rng) {
  HomChain c;
  c.objects.push_back(A);
  MultiMap t1 = random_map({A.A0, A.A0}, A.A1, rng);
  c.objects.push_back(gauge_transform(A, t1));
  c.homs.push_back(gauge_hom(A, t1));
  MultiMap P0 = random_invertible(A.A0, rng), P1 = random_invertible(A.A1, rng);
  c.objects.push_back(transport(c.objects[1], P0, P1));
  c.homs.push_back(transport_hom(c.objects[1], P0, P1));
  MultiMap t2 = random_map({A.A0, A.A0}, A.A1, rng);
  c.objects.push_back(gauge_transform(c.objects[2], t2));
  c.homs.push_back(gauge_hom(c.objects[2], t2));
  return c;
}

std::vector<OOperator> search_o_operators(bool strict_only) {
  const OOperator base = identity_o_operator(fix_B());
  const Space &V0 = base.V.V0, &V1 = base.V.V1, &g0 = base.G.g0, &g1 = base.G.g1;
  std::vector<OOperator> hits;
  const int range[] = {-1, 0, 1};
  std::vector<std::size_t> digit(6, 0);
  const std::size_t total = 729;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (auto& d : digit) {
      d = c % 3;
      c /= 3;
    }
    int t2 = range[digit[5]];
    if (strict_only && t2 != 0) continue;
    OOperator O = base;
    O.T0 = MultiMap({V0}, g0, {range[digit[0]], range[digit[1]], range[digit[2]], range[digit[3]]});
    O.T1 = MultiMap({V1}, g1, {range[digit[4]]});
    O.T2 = MultiMap({V0, V0}, g1, {0, t2, -t2, 0});
    bool zero = O.T0.is_zero() && O.T1.is_zero() && O.T2.is_zero();
    bool identity = O.T0 == base.T0 && O.T1 == base.T1 && O.T2 == base.T2;
    if (zero || identity) continue;
    if (validate_o(O).ok()) hits.push_back(O);
  }
  return hits;
}

OOperator fix_O() {
  auto hits = search_o_operators(false);
  if (hits.empty()) throw std::logic_error("no nonzero non-identity O-operator in the search range");
  auto it = std::find_if(hits.begin(), hits.end(), [](const OOperator& O) { return !O.T2.is_zero(); });
  return it != hits.end() ? *it : hits.front();
}

OOperator fix_O_strict() {
  auto hits = search_o_operators(true);
  if (hits.empty()) throw std::logic_error("no nonzero non-identity O-operator with T2 = 0");
  return hits.front();
}

MultiMap bridge_dM() {
  Space A{2, "A"}, Astar{2, "A*"};
  return MultiMap({Astar}, A, {0, 1, -1, 0});
}

std::vector<Mutant> plus_one_mutants(const Payload& p) {
  std::vector<Mutant> out;
  Payload probe = p;
  auto fields = tensor_fields(probe);
  for (std::size_t f = 0; f < fields.size(); ++f)
    for (std::size_t k = 0; k < fields[f].second->coeffs().size(); ++k) {
      Payload copy = p;
      auto cf = tensor_fields(copy);
      cf[f].second->at_flat(k) += 1;
      out.push_back({fields[f].first, k, std::move(copy)});
    }
  return out;
}

}  // namespace prelie2::fixtures
