#include "prelie2/categorical.hpp"

#include "prelie2/linalg.hpp"

namespace prelie2 {

namespace {

Vector apply1(const MultiMap& f, const Vector& v) { return ml_apply(f, {v}); }

// Inverse of [unit | kernel_incl] : C0 ⊕ K → C1.  Its lower block sends a
// morphism to the Ker(s)-coordinates of f − 1_{s(f)}.
struct Splitting {
  std::size_t n0 = 0;
  MultiMap inv;
  std::optional<MultiMap> make(const TwoVectorSpace& S) {
    n0 = S.objects.dim;
    Space sum{S.objects.dim + S.kernel.dim, "C0+K"};
    std::vector<Vector> cols;
    for (std::size_t i = 0; i < sum.dim; ++i)
      cols.push_back(i < n0 ? S.unit.image({i}) : S.kernel_incl.image({i - n0}));
    auto r = inverse(MultiMap::linear(sum, S.morphisms, cols));
    if (r) inv = *r;
    return r;
  }
  Vector kernel(const Vector& f) const {
    Vector x = apply1(inv, f);
    return Vector(x.begin() + static_cast<std::ptrdiff_t>(n0), x.end());
  }
};

Splitting require_splitting(const TwoVectorSpace& S) {
  Splitting sp;
  if (!sp.make(S)) throw DimensionError("morphism space is not units ⊕ Ker(s)");
  return sp;
}

void check_space_shapes(const TwoVectorSpace& S) {
  const std::size_t c0 = S.objects.dim, c1 = S.morphisms.dim, k = S.kernel.dim;
  auto lin = [](const MultiMap& m, std::size_t in, std::size_t out, const char* what) {
    if (m.arity() != 1 || m.input(0).dim != in || m.output().dim != out)
      throw DimensionError(std::string(what) + " has the wrong shape");
  };
  lin(S.source, c1, c0, "source");
  lin(S.target, c1, c0, "target");
  lin(S.unit, c0, c1, "unit");
  lin(S.kernel_incl, k, c1, "kernel inclusion");
  if (c1 != c0 + k) throw DimensionError("dim C1 must equal dim C0 + dim Ker(s)");
}

void check_shapes(const CatPreLie2& C) {
  check_space_shapes(C.space);
  const Space &c0 = C.space.objects, &c1 = C.space.morphisms;
  auto same = [](const MultiMap& m, std::vector<std::size_t> ins, std::size_t out) {
    if (m.arity() != ins.size() || m.output().dim != out) return false;
    for (std::size_t k = 0; k < ins.size(); ++k)
      if (m.input(k).dim != ins[k]) return false;
    return true;
  };
  if (!same(C.star_obj, {c0.dim, c0.dim}, c0.dim)) throw DimensionError("star on objects has the wrong shape");
  if (!same(C.star_mor, {c1.dim, c1.dim}, c1.dim)) throw DimensionError("star on morphisms has the wrong shape");
  if (!same(C.J, {c0.dim, c0.dim, c0.dim}, c1.dim)) throw DimensionError("J has the wrong shape");
}

CatPreLie2 functor_T_unchecked(const PreLie2Algebra& A) {
  const std::size_t n0 = A.A0.dim, n1 = A.A1.dim;
  CatPreLie2 C;
  C.space = split_space(A.A0, A.A1, A.dM);
  const Space& c1 = C.space.morphisms;
  auto split = [&](std::size_t i) {
    return std::pair<Vector, Vector>{i < n0 ? unit_vector(n0, i) : zero_vector(n0),
                                     i < n0 ? zero_vector(n1) : unit_vector(n1, i - n0)};
  };
  C.star_obj = A.mul00;
  C.star_mor = MultiMap::from_basis({c1, c1}, c1, [&](std::span<const std::size_t> idx) {
    auto [u, m] = split(idx[0]);
    auto [v, n] = split(idx[1]);
    Vector k = ml_apply(A.mul01, {u, n}) + ml_apply(A.mul10, {m, v}) +
               ml_apply(A.mul01, {apply1(A.dM, m), n});
    return concat(ml_apply(A.mul00, {u, v}), k);
  });
  C.J = MultiMap::from_basis({A.A0, A.A0, A.A0}, c1, [&](std::span<const std::size_t> idx) {
    Vector u = unit_vector(n0, idx[0]), v = unit_vector(n0, idx[1]), w = unit_vector(n0, idx[2]);
    Vector assoc = ml_apply(A.mul00, {ml_apply(A.mul00, {u, v}), w}) -
                   ml_apply(A.mul00, {u, ml_apply(A.mul00, {v, w})});
    return concat(assoc, A.l3.image(idx));
  });
  return C;
}

}  // namespace

TwoVectorSpace split_space(const Space& objects, const Space& kernel, const MultiMap& dM) {
  const std::size_t n0 = objects.dim, n1 = kernel.dim;
  Space c1{n0 + n1, "C1"};
  TwoVectorSpace S{objects, c1, kernel, {}, {}, {}, {}};
  S.source = MultiMap::from_basis({c1}, objects, [&](std::span<const std::size_t> i) {
    return i[0] < n0 ? unit_vector(n0, i[0]) : zero_vector(n0);
  });
  S.target = MultiMap::from_basis({c1}, objects, [&](std::span<const std::size_t> i) {
    return i[0] < n0 ? unit_vector(n0, i[0]) : dM.image({i[0] - n0});
  });
  S.unit = MultiMap::from_basis({objects}, c1, [&](std::span<const std::size_t> i) {
    return unit_vector(n0 + n1, i[0]);
  });
  S.kernel_incl = MultiMap::from_basis({kernel}, c1, [&](std::span<const std::size_t> i) {
    return unit_vector(n0 + n1, n0 + i[0]);
  });
  return S;
}

Vector compose_morphisms(const TwoVectorSpace& S, const Vector& f, const Vector& g) {
  Vector mid = apply1(S.target, f);
  if (mid != apply1(S.source, g))
    throw std::invalid_argument("compose_morphisms: target of the first is not the source of the second");
  return f + g - apply1(S.unit, mid);
}

Vector kernel_part(const TwoVectorSpace& S, const Vector& f) {
  check_space_shapes(S);
  return require_splitting(S).kernel(f);
}

ValidationReport validate_cat(const CatPreLie2& C) {
  check_shapes(C);
  const TwoVectorSpace& S = C.space;
  const std::size_t c0 = S.objects.dim, c1 = S.morphisms.dim, k = S.kernel.dim;
  ValidationReport r;
  for (std::size_t u = 0; u < c0; ++u) {
    Vector eu = unit_vector(c0, u);
    r.expect_equal("space", {0, u}, apply1(S.source, apply1(S.unit, eu)), eu);
    r.expect_equal("space", {1, u}, apply1(S.target, apply1(S.unit, eu)), eu);
  }
  for (std::size_t m = 0; m < k; ++m)
    r.expect_zero("space", {2, m}, apply1(S.source, S.kernel_incl.image({m})));
  Splitting sp;
  if (!sp.make(S)) r.add("space", {3}, {});
  if (!r.ok()) return r;

  auto star = [&](const Vector& f, const Vector& g) { return ml_apply(C.star_mor, {f, g}); };
  auto obj = [&](const Vector& x, const Vector& y) { return ml_apply(C.star_obj, {x, y}); };
  for (std::size_t u = 0; u < c0; ++u)
    for (std::size_t v = 0; v < c0; ++v)
      r.expect_equal("functor:unit", {u, v}, star(S.unit.image({u}), S.unit.image({v})),
                     apply1(S.unit, C.star_obj.image({u, v})));
  for (std::size_t f = 0; f < c1; ++f)
    for (std::size_t g = 0; g < c1; ++g) {
      Vector fg = C.star_mor.image({f, g});
      r.expect_equal("functor:source", {f, g}, apply1(S.source, fg),
                     obj(S.source.image({f}), S.source.image({g})));
      r.expect_equal("functor:target", {f, g}, apply1(S.target, fg),
                     obj(S.target.image({f}), S.target.image({g})));
    }
  // Interchange law on kernel generators: m ⋆ n = 1_{t m} ⋆ n = m ⋆ 1_{t n}.
  for (std::size_t m = 0; m < k; ++m)
    for (std::size_t n = 0; n < k; ++n) {
      Vector km = S.kernel_incl.image({m}), kn = S.kernel_incl.image({n});
      Vector mn = star(km, kn);
      r.expect_equal("functor:compose", {0, m, n}, mn, star(apply1(S.unit, apply1(S.target, km)), kn));
      r.expect_equal("functor:compose", {1, m, n}, mn, star(km, apply1(S.unit, apply1(S.target, kn))));
    }
  for (std::size_t a = 0; a < c0; ++a)
    for (std::size_t b = 0; b < c0; ++b)
      for (std::size_t c = 0; c < c0; ++c) {
        Vector x = unit_vector(c0, a), y = unit_vector(c0, b), z = unit_vector(c0, c);
        Vector j = C.J.image({a, b, c});
        r.expect_equal("J:source", {a, b, c}, apply1(S.source, j),
                       obj(obj(x, y), z) - obj(x, obj(y, z)));
        r.expect_equal("J:target", {a, b, c}, apply1(S.target, j),
                       obj(obj(y, x), z) - obj(y, obj(x, z)));
      }
  r.merge(validate(functor_S(C)), "S:");
  r.sort();
  return r;
}

ValidationReport validate_cat_hom(const CatPreLie2Hom& F, const CatPreLie2& C, const CatPreLie2& D) {
  check_shapes(C);
  check_shapes(D);
  const TwoVectorSpace &S = C.space, &T = D.space;
  auto lin = [](const MultiMap& m, const Space& in, const Space& out) {
    return m.arity() == 1 && m.input(0).dim == in.dim && m.output().dim == out.dim;
  };
  if (!lin(F.Phi0, S.objects, T.objects)) throw DimensionError("Phi0 has the wrong shape", 0);
  if (!lin(F.Phi1, S.morphisms, T.morphisms)) throw DimensionError("Phi1 has the wrong shape", 1);
  if (F.Phi2.arity() != 2 || F.Phi2.input(0).dim != S.objects.dim ||
      F.Phi2.input(1).dim != S.objects.dim || F.Phi2.output().dim != T.morphisms.dim)
    throw DimensionError("Phi2 has the wrong shape", 2);

  const std::size_t c0 = S.objects.dim, c1 = S.morphisms.dim;
  ValidationReport r;
  for (std::size_t f = 0; f < c1; ++f) {
    Vector img = F.Phi1.image({f});
    r.expect_equal("functor:source", {f}, apply1(T.source, img), apply1(F.Phi0, S.source.image({f})));
    r.expect_equal("functor:target", {f}, apply1(T.target, img), apply1(F.Phi0, S.target.image({f})));
  }
  for (std::size_t u = 0; u < c0; ++u)
    r.expect_equal("functor:unit", {u}, apply1(F.Phi1, S.unit.image({u})),
                   apply1(T.unit, F.Phi0.image({u})));
  for (std::size_t u = 0; u < c0; ++u)
    for (std::size_t v = 0; v < c0; ++v) {
      Vector p = F.Phi2.image({u, v});
      r.expect_equal("Phi2:source", {u, v}, apply1(T.source, p),
                     ml_apply(D.star_obj, {F.Phi0.image({u}), F.Phi0.image({v})}));
      r.expect_equal("Phi2:target", {u, v}, apply1(T.target, p),
                     apply1(F.Phi0, C.star_obj.image({u, v})));
    }
  ValidationReport sc = validate_cat(C), sd = validate_cat(D);
  if (sc.has("space") || sd.has("space")) {
    r.add("space", {}, {});
  } else {
    r.merge(validate_hom(functor_S(F, C, D), functor_S(C), functor_S(D)), "S:");
  }
  r.sort();
  return r;
}

CatPreLie2 functor_T(const PreLie2Algebra& A) {
  require_valid(validate(A), "functor_T: not a pre-Lie 2-algebra");
  return functor_T_unchecked(A);
}

CatPreLie2Hom functor_T(const PreLie2Hom& F, const PreLie2Algebra& A, const PreLie2Algebra& B) {
  require_valid(validate_hom(F, A, B), "functor_T: not a homomorphism");
  const std::size_t n0 = A.A0.dim, n1 = A.A1.dim;
  const Space c1{n0 + n1, "C1"}, d1{B.A0.dim + B.A1.dim, "C1"};
  CatPreLie2Hom H;
  H.Phi0 = F.F0;
  H.Phi1 = MultiMap::from_basis({c1}, d1, [&](std::span<const std::size_t> i) {
    if (i[0] < n0) return concat(F.F0.image({i[0]}), zero_vector(B.A1.dim));
    return concat(zero_vector(B.A0.dim), F.F1.image({i[0] - n0}));
  });
  H.Phi2 = MultiMap::from_basis({A.A0, A.A0}, d1, [&](std::span<const std::size_t> i) {
    return concat(ml_apply(B.mul00, {F.F0.image({i[0]}), F.F0.image({i[1]})}), F.F2.image(i));
  });
  return H;
}

PreLie2Algebra functor_S(const CatPreLie2& C) {
  check_shapes(C);
  const TwoVectorSpace& S = C.space;
  const Splitting sp = require_splitting(S);
  const Space &A0 = S.objects, &A1 = S.kernel;
  PreLie2Algebra A;
  A.A0 = A0;
  A.A1 = A1;
  A.dM = ml_compose_linear(S.target, S.kernel_incl);
  A.mul00 = C.star_obj;
  A.mul01 = MultiMap::from_basis({A0, A1}, A1, [&](std::span<const std::size_t> i) {
    return sp.kernel(ml_apply(C.star_mor, {S.unit.image({i[0]}), S.kernel_incl.image({i[1]})}));
  });
  A.mul10 = MultiMap::from_basis({A1, A0}, A1, [&](std::span<const std::size_t> i) {
    return sp.kernel(ml_apply(C.star_mor, {S.kernel_incl.image({i[0]}), S.unit.image({i[1]})}));
  });
  A.l3 = MultiMap::from_basis({A0, A0, A0}, A1,
                              [&](std::span<const std::size_t> i) { return sp.kernel(C.J.image(i)); });
  return A;
}

PreLie2Hom functor_S(const CatPreLie2Hom& F, const CatPreLie2& C, const CatPreLie2& D) {
  check_shapes(C);
  check_shapes(D);
  const Splitting sp = require_splitting(D.space);
  const Space &k = C.space.kernel, &kd = D.space.kernel, &c0 = C.space.objects;
  PreLie2Hom H;
  H.F0 = F.Phi0;
  H.F1 = MultiMap::from_basis({k}, kd, [&](std::span<const std::size_t> i) {
    return sp.kernel(apply1(F.Phi1, C.space.kernel_incl.image({i[0]})));
  });
  H.F2 = MultiMap::from_basis({c0, c0}, kd,
                              [&](std::span<const std::size_t> i) { return sp.kernel(F.Phi2.image(i)); });
  return H;
}

CatPreLie2Hom alpha_iso(const CatPreLie2& C) {
  check_shapes(C);
  const TwoVectorSpace& S = C.space;
  const std::size_t n0 = S.objects.dim;
  CatPreLie2Hom a;
  a.Phi0 = MultiMap::identity(S.objects);
  a.Phi1 = MultiMap::from_basis({Space{S.morphisms.dim, "C1"}}, S.morphisms,
                                [&](std::span<const std::size_t> i) {
                                  return i[0] < n0 ? S.unit.image({i[0]})
                                                   : S.kernel_incl.image({i[0] - n0});
                                });
  a.Phi2 = postcompose(S.unit, C.star_obj);
  return a;
}

ValidationReport check_alpha(const CatPreLie2& C) {
  CatPreLie2 TS = functor_T_unchecked(functor_S(C));
  CatPreLie2Hom a = alpha_iso(C);
  ValidationReport r;
  if (!inverse(a.Phi1)) r.add("iso", {}, {});
  r.merge(validate_cat_hom(a, TS, C));
  r.sort();
  return r;
}

CatPreLie2Hom compose_cat_hom(const CatPreLie2Hom& Psi, const CatPreLie2Hom& Phi, const CatPreLie2& E) {
  check_shapes(E);
  const Space& c0 = Phi.Phi2.input(0);
  CatPreLie2Hom H;
  H.Phi0 = ml_compose_linear(Psi.Phi0, Phi.Phi0);
  H.Phi1 = ml_compose_linear(Psi.Phi1, Phi.Phi1);
  H.Phi2 = MultiMap::from_basis({c0, c0}, E.space.morphisms, [&](std::span<const std::size_t> i) {
    Vector first = ml_apply(Psi.Phi2, {Phi.Phi0.image({i[0]}), Phi.Phi0.image({i[1]})});
    Vector second = apply1(Psi.Phi1, Phi.Phi2.image(i));
    return compose_morphisms(E.space, first, second);
  });
  return H;
}

CatPreLie2Hom identity_cat_hom(const CatPreLie2& C) {
  check_shapes(C);
  return {MultiMap::identity(C.space.objects), MultiMap::identity(C.space.morphisms),
          postcompose(C.space.unit, C.star_obj)};
}

CatPreLie2 rebase(const CatPreLie2& C, const MultiMap& P) {
  check_shapes(C);
  auto Pinv = inverse(P);
  if (!Pinv) throw std::invalid_argument("rebase: change of basis is not invertible");
  CatPreLie2 R = C;
  TwoVectorSpace& S = R.space;
  S.source = ml_compose_linear(C.space.source, *Pinv);
  S.target = ml_compose_linear(C.space.target, *Pinv);
  S.unit = ml_compose_linear(P, C.space.unit);
  S.kernel_incl = ml_compose_linear(P, C.space.kernel_incl);
  R.star_mor = postcompose(P, precompose(precompose(C.star_mor, 0, *Pinv), 1, *Pinv));
  R.J = postcompose(P, C.J);
  return R;
}

}  // namespace prelie2
