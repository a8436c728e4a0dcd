#include "prelie2/end_algebra.hpp"

#include "prelie2/linalg.hpp"

namespace prelie2 {

namespace {

Vector flatten_pair(const EndPair& A) {
  Vector v(A.first.coeffs());
  v.insert(v.end(), A.second.coeffs().begin(), A.second.coeffs().end());
  return v;
}

EndPair unflatten_pair(const TwoTermComplex& V, const Vector& v) {
  const std::size_t s0 = V.V0.dim * V.V0.dim;
  std::vector<Rational> c0(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(s0));
  std::vector<Rational> c1(v.begin() + static_cast<std::ptrdiff_t>(s0), v.end());
  return {MultiMap({V.V0}, V.V0, std::move(c0)), MultiMap({V.V1}, V.V1, std::move(c1))};
}

MultiMap commutator(const MultiMap& a, const MultiMap& b) {
  return ml_compose_linear(a, b) - ml_compose_linear(b, a);
}

}  // namespace

EndPair end_differential(const TwoTermComplex& V, const MultiMap& phi) {
  return {ml_compose_linear(V.dM, phi), ml_compose_linear(phi, V.dM)};
}

std::optional<Vector> EndAlgebra::coordinates0(const EndPair& A) const {
  Vector flat = flatten_pair(A);
  Vector c(free_columns.size());
  for (std::size_t k = 0; k < free_columns.size(); ++k) c[k] = flat[free_columns[k]];
  Vector back(flat.size());
  for (std::size_t k = 0; k < basis0.size(); ++k) axpy(back, c[k], flatten_pair(basis0[k]));
  if (back != flat) return std::nullopt;
  return c;
}

Vector EndAlgebra::coordinates1(const MultiMap& phi) const { return phi.coeffs(); }

EndPair EndAlgebra::element0(const Vector& coords) const {
  const std::size_t s = complex.V0.dim * complex.V0.dim + complex.V1.dim * complex.V1.dim;
  Vector flat(s);
  for (std::size_t k = 0; k < basis0.size(); ++k) axpy(flat, coords.at(k), flatten_pair(basis0[k]));
  return unflatten_pair(complex, flat);
}

MultiMap EndAlgebra::element1(const Vector& coords) const {
  return MultiMap({complex.V0}, complex.V1, coords);
}

EndAlgebra end_algebra(const TwoTermComplex& V) {
  check_complex(V);
  const std::size_t n0 = V.V0.dim, n1 = V.V1.dim;
  const std::size_t s = n0 * n0 + n1 * n1;

  // Column c of the system is the coefficient vector of A0∘dM − dM∘A1
  // for the c-th unit pair.
  Matrix sys(n1 * n0, s);
  for (std::size_t c = 0; c < s; ++c) {
    EndPair A = unflatten_pair(V, unit_vector(s, c));
    MultiMap defect = ml_compose_linear(A.first, V.dM) - ml_compose_linear(V.dM, A.second);
    for (std::size_t r = 0; r < n1 * n0; ++r) sys(r, c) = defect.coeffs()[r];
  }

  EndAlgebra E;
  E.complex = V;
  E.free_columns = free_columns(sys);
  for (const auto& v : nullspace(sys)) E.basis0.push_back(unflatten_pair(V, v));

  const std::size_t k = E.basis0.size();
  Space g0{k, "End0"}, g1{n0 * n1, "End1"};
  auto coords = [&E](const EndPair& A) {
    auto c = E.coordinates0(A);
    if (!c) throw std::logic_error("End0 is not closed under the bracket");
    return *c;
  };

  Lie2Algebra& L = E.lie2;
  L.g0 = g0;
  L.g1 = g1;
  L.dk = MultiMap::from_basis({g1}, g0, [&](std::span<const std::size_t> idx) {
    return coords(end_differential(V, E.element1(unit_vector(g1.dim, idx[0]))));
  });
  L.l2_00 = MultiMap::from_basis({g0, g0}, g0, [&](std::span<const std::size_t> idx) {
    const EndPair& A = E.basis0[idx[0]];
    const EndPair& B = E.basis0[idx[1]];
    return coords({commutator(A.first, B.first), commutator(A.second, B.second)});
  });
  L.l2_01 = MultiMap::from_basis({g0, g1}, g1, [&](std::span<const std::size_t> idx) {
    const EndPair& A = E.basis0[idx[0]];
    MultiMap phi = E.element1(unit_vector(g1.dim, idx[1]));
    // [A, φ] = A1∘φ − φ∘A0
    return E.coordinates1(ml_compose_linear(A.second, phi) - ml_compose_linear(phi, A.first));
  });
  L.l3 = MultiMap({g0, g0, g0}, g1);
  return E;
}

}  // namespace prelie2
