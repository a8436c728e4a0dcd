#include "oracle.hpp"

namespace oracle {

using prelie2::MultiMap;

Table::Table(const MultiMap& m) : out(m.output().dim), c(m.coeffs()) {
  for (const auto& s : m.inputs()) in.push_back(s.dim);
}

Vec Table::operator()(std::initializer_list<std::size_t> idx) const {
  std::size_t f = 0, k = 0;
  for (std::size_t i : idx) f = f * in[k++] + i;
  return Vec(c.begin() + f * out, c.begin() + (f + 1) * out);
}

namespace {

Vec zero(std::size_t n) { return Vec(n); }

Vec add(Vec a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}
Vec sub(Vec a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}
Vec scale(const Rational& s, Vec a) {
  for (auto& x : a) x *= s;
  return a;
}
bool null(const Vec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}
Vec basis(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = 1;
  return v;
}

// Multilinear evaluation on arbitrary vectors, schoolbook.
Vec lin(const Table& t, const Vec& x) {
  Vec r = zero(t.out);
  for (std::size_t i = 0; i < t.in[0]; ++i)
    if (x[i] != 0) r = add(r, scale(x[i], t({i})));
  return r;
}
Vec bil(const Table& t, const Vec& x, const Vec& y) {
  Vec r = zero(t.out);
  for (std::size_t i = 0; i < t.in[0]; ++i)
    for (std::size_t j = 0; j < t.in[1]; ++j)
      if (x[i] != 0 && y[j] != 0) r = add(r, scale(x[i] * y[j], t({i, j})));
  return r;
}
Vec tri(const Table& t, const Vec& x, const Vec& y, const Vec& z) {
  Vec r = zero(t.out);
  for (std::size_t i = 0; i < t.in[0]; ++i)
    for (std::size_t j = 0; j < t.in[1]; ++j)
      for (std::size_t k = 0; k < t.in[2]; ++k)
        if (x[i] != 0 && y[j] != 0 && z[k] != 0) r = add(r, scale(x[i] * y[j] * z[k], t({i, j, k})));
  return r;
}

bool eq(const Vec& a, const Vec& b) { return a == b; }

}  // namespace

std::set<std::string> prelie_failures(const prelie2::PreLieAlgebra& A) {
  std::set<std::string> f;
  Table m(A.mul);
  std::size_t n = A.A.dim;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        Vec X = basis(n, x), Y = basis(n, y), Z = basis(n, z);
        Vec a = sub(bil(m, bil(m, X, Y), Z), bil(m, X, bil(m, Y, Z)));
        Vec b = sub(bil(m, bil(m, Y, X), Z), bil(m, Y, bil(m, X, Z)));
        if (!eq(a, b)) f.insert("associator");
      }
  return f;
}

std::set<std::string> prelie2_failures(const prelie2::PreLie2Algebra& A) {
  std::set<std::string> f;
  const std::size_t n0 = A.A0.dim, n1 = A.A1.dim;
  Table d(A.dM), m00(A.mul00), m01(A.mul01), m10(A.mul10), l3(A.l3);
  auto e0 = [n0](std::size_t i) { return basis(n0, i); };
  auto e1 = [n1](std::size_t i) { return basis(n1, i); };

  for (std::size_t v = 0; v < n0; ++v)
    for (std::size_t m = 0; m < n1; ++m) {
      if (!eq(lin(d, bil(m01, e0(v), e1(m))), bil(m00, e0(v), lin(d, e1(m))))) f.insert("a1");
      if (!eq(lin(d, bil(m10, e1(m), e0(v))), bil(m00, lin(d, e1(m)), e0(v)))) f.insert("a2");
    }
  for (std::size_t m = 0; m < n1; ++m)
    for (std::size_t k = 0; k < n1; ++k)
      if (!eq(bil(m01, lin(d, e1(m)), e1(k)), bil(m10, e1(m), lin(d, e1(k))))) f.insert("a3");

  for (std::size_t a = 0; a < n0; ++a)
    for (std::size_t b = 0; b < n0; ++b)
      for (std::size_t c = 0; c < n0; ++c) {
        Vec v0 = e0(a), v1 = e0(b), v2 = e0(c);
        if (!eq(l3({a, b, c}), scale(-1, l3({b, a, c})))) f.insert("skew(l3)");
        Vec lhs = bil(m00, v0, bil(m00, v1, v2));
        lhs = sub(lhs, bil(m00, bil(m00, v0, v1), v2));
        lhs = sub(lhs, bil(m00, v1, bil(m00, v0, v2)));
        lhs = add(lhs, bil(m00, bil(m00, v1, v0), v2));
        if (!eq(lhs, lin(d, l3({a, b, c})))) f.insert("b1");
      }

  for (std::size_t a = 0; a < n0; ++a)
    for (std::size_t b = 0; b < n0; ++b)
      for (std::size_t k = 0; k < n1; ++k) {
        Vec v0 = e0(a), v1 = e0(b), m = e1(k);
        Vec lhs = bil(m01, v0, bil(m01, v1, m));
        lhs = sub(lhs, bil(m01, bil(m00, v0, v1), m));
        lhs = sub(lhs, bil(m01, v1, bil(m01, v0, m)));
        lhs = add(lhs, bil(m01, bil(m00, v1, v0), m));
        if (!eq(lhs, tri(l3, v0, v1, lin(d, m)))) f.insert("b2");
        // (b3) with (v1, v2) = (a, b)
        Vec v2 = e0(b);
        v1 = e0(a);
        Vec l = bil(m10, m, bil(m00, v1, v2));
        l = sub(l, bil(m10, bil(m10, m, v1), v2));
        l = sub(l, bil(m01, v1, bil(m10, m, v2)));
        l = add(l, bil(m10, bil(m01, v1, m), v2));
        if (!eq(l, tri(l3, lin(d, m), v1, v2))) f.insert("b3");
      }

  auto L3 = [&](const Vec& x, const Vec& y, const Vec& z) { return tri(l3, x, y, z); };
  auto mul = [&](const Vec& x, const Vec& y) { return bil(m00, x, y); };
  auto com = [&](const Vec& x, const Vec& y) { return sub(mul(x, y), mul(y, x)); };
  for (std::size_t a = 0; a < n0; ++a)
    for (std::size_t b = 0; b < n0; ++b)
      for (std::size_t c = 0; c < n0; ++c)
        for (std::size_t g = 0; g < n0; ++g) {
          Vec v0 = e0(a), v1 = e0(b), v2 = e0(c), v3 = e0(g);
          Vec s = bil(m01, v0, L3(v1, v2, v3));
          s = sub(s, bil(m01, v1, L3(v0, v2, v3)));
          s = add(s, bil(m01, v2, L3(v0, v1, v3)));
          s = add(s, bil(m10, L3(v1, v2, v0), v3));
          s = sub(s, bil(m10, L3(v0, v2, v1), v3));
          s = add(s, bil(m10, L3(v0, v1, v2), v3));
          s = sub(s, L3(v1, v2, mul(v0, v3)));
          s = add(s, L3(v0, v2, mul(v1, v3)));
          s = sub(s, L3(v0, v1, mul(v2, v3)));
          s = sub(s, L3(com(v0, v1), v2, v3));
          s = add(s, L3(com(v0, v2), v1, v3));
          s = sub(s, L3(com(v1, v2), v0, v3));
          if (!null(s)) f.insert("c");
        }
  return f;
}

std::set<std::string> lie_failures(const MultiMap& bracket) {
  std::set<std::string> f;
  Table b(bracket);
  std::size_t n = b.out;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (!eq(b({x, y}), scale(-1, b({y, x})))) f.insert("skew");
      for (std::size_t z = 0; z < n; ++z) {
        Vec X = basis(n, x), Y = basis(n, y), Z = basis(n, z);
        Vec s = add(add(bil(b, X, bil(b, Y, Z)), bil(b, Y, bil(b, Z, X))), bil(b, Z, bil(b, X, Y)));
        if (!null(s)) f.insert("Jacobi");
      }
    }
  return f;
}

std::set<std::string> lie2_failures(const prelie2::Lie2Algebra& G) {
  std::set<std::string> f;
  const std::size_t n0 = G.g0.dim, n1 = G.g1.dim;
  Table d(G.dk), l00(G.l2_00), l01(G.l2_01), l3(G.l3);
  auto e0 = [n0](std::size_t i) { return basis(n0, i); };
  auto e1 = [n1](std::size_t i) { return basis(n1, i); };
  auto br = [&](const Vec& x, const Vec& y) { return bil(l00, x, y); };
  auto act = [&](const Vec& x, const Vec& m) { return bil(l01, x, m); };
  auto L3 = [&](const Vec& x, const Vec& y, const Vec& z) { return tri(l3, x, y, z); };

  for (std::size_t x = 0; x < n0; ++x)
    for (std::size_t y = 0; y < n0; ++y) {
      if (!eq(l00({x, y}), scale(-1, l00({y, x})))) f.insert("skew(l2)");
      for (std::size_t z = 0; z < n0; ++z) {
        if (!eq(l3({x, y, z}), scale(-1, l3({y, x, z}))) || !eq(l3({x, y, z}), scale(-1, l3({x, z, y}))))
          f.insert("skew(l3)");
        Vec X = e0(x), Y = e0(y), Z = e0(z);
        Vec jac = add(add(br(X, br(Y, Z)), br(Y, br(Z, X))), br(Z, br(X, Y)));
        if (!eq(lin(d, L3(X, Y, Z)), jac)) f.insert("(ii)");
      }
    }
  for (std::size_t x = 0; x < n0; ++x)
    for (std::size_t m = 0; m < n1; ++m)
      if (!eq(lin(d, act(e0(x), e1(m))), br(e0(x), lin(d, e1(m))))) f.insert("(i)");
  for (std::size_t m = 0; m < n1; ++m)
    for (std::size_t k = 0; k < n1; ++k)
      if (!null(add(act(lin(d, e1(m)), e1(k)), act(lin(d, e1(k)), e1(m))))) f.insert("(i)");
  for (std::size_t x = 0; x < n0; ++x)
    for (std::size_t y = 0; y < n0; ++y)
      for (std::size_t k = 0; k < n1; ++k) {
        Vec X = e0(x), Y = e0(y), M = e1(k);
        // l2(x,l2(y,m)) + l2(y,l2(m,x)) + l2(m,l2(x,y)) with l2(m,·) = −l2(·,m)
        Vec rhs = sub(sub(act(X, act(Y, M)), act(Y, act(X, M))), act(br(X, Y), M));
        if (!eq(L3(X, Y, lin(d, M)), rhs)) f.insert("(iii)");
      }
  if (n1 > 0)
    for (std::size_t a = 0; a < n0; ++a)
      for (std::size_t b = 0; b < n0; ++b)
        for (std::size_t c = 0; c < n0; ++c)
          for (std::size_t g = 0; g < n0; ++g) {
            std::vector<Vec> x = {e0(a), e0(b), e0(c), e0(g)};
            Vec s = zero(n1);
            for (std::size_t i = 0; i < 4; ++i) {
              std::vector<Vec> rest;
              for (std::size_t k = 0; k < 4; ++k)
                if (k != i) rest.push_back(x[k]);
              Vec t = act(x[i], L3(rest[0], rest[1], rest[2]));
              s = (i % 2 == 0) ? add(s, t) : sub(s, t);
            }
            for (std::size_t i = 0; i < 4; ++i)
              for (std::size_t j = i + 1; j < 4; ++j) {
                std::vector<Vec> rest;
                for (std::size_t k = 0; k < 4; ++k)
                  if (k != i && k != j) rest.push_back(x[k]);
                Vec t = L3(br(x[i], x[j]), rest[0], rest[1]);
                // (−1)^{i+j} with 1-based i, j has the same parity as with 0-based
                s = ((i + j) % 2 == 0) ? add(s, t) : sub(s, t);
              }
            if (!null(s)) f.insert("(iv)");
          }
  return f;
}

std::set<std::string> crossed_failures(const prelie2::PreLieCrossedModule& cm) {
  std::set<std::string> f;
  for (const auto& s : prelie_failures(cm.A0alg)) f.insert("A0:" + s);
  for (const auto& s : prelie_failures(cm.A1alg)) f.insert("A1:" + s);
  const std::size_t n0 = cm.A0alg.A.dim, n1 = cm.A1alg.A.dim;
  Table m0(cm.A0alg.mul), m1(cm.A1alg.mul), d(cm.dM), rho(cm.rho), mu(cm.mu);
  auto e0 = [n0](std::size_t i) { return basis(n0, i); };
  auto e1 = [n1](std::size_t i) { return basis(n1, i); };
  for (std::size_t x = 0; x < n0; ++x)
    for (std::size_t y = 0; y < n0; ++y)
      for (std::size_t k = 0; k < n1; ++k) {
        Vec X = e0(x), Y = e0(y), M = e1(k);
        Vec c = sub(bil(m0, X, Y), bil(m0, Y, X));
        if (!eq(sub(bil(rho, X, bil(rho, Y, M)), bil(rho, Y, bil(rho, X, M))), bil(rho, c, M)))
          f.insert("rep:rho");
        Vec l = sub(bil(mu, Y, bil(mu, X, M)), bil(mu, bil(m0, X, Y), M));
        Vec r = sub(bil(mu, Y, bil(rho, X, M)), bil(rho, X, bil(mu, Y, M)));
        if (!eq(l, r)) f.insert("rep:mu");
      }
  for (std::size_t k = 0; k < n1; ++k)
    for (std::size_t j = 0; j < n1; ++j) {
      Vec M = e1(k), N = e1(j);
      if (!eq(lin(d, bil(m1, M, N)), bil(m0, lin(d, M), lin(d, N)))) f.insert("hom");
      Vec p = bil(m1, M, N);
      if (!eq(bil(rho, lin(d, M), N), p) || !eq(bil(mu, lin(d, N), M), p)) f.insert("C2");
    }
  for (std::size_t u = 0; u < n0; ++u)
    for (std::size_t k = 0; k < n1; ++k) {
      Vec U = e0(u), M = e1(k);
      if (!eq(lin(d, bil(rho, U, M)), bil(m0, U, lin(d, M))) || !eq(lin(d, bil(mu, U, M)), bil(m0, lin(d, M), U)))
        f.insert("C1");
    }
  return f;
}

std::set<std::string> o_failures(const prelie2::OOperator& O) {
  std::set<std::string> f;
  const std::size_t v0 = O.V.V0.dim, v1 = O.V.V1.dim;
  Table dk(O.G.dk), l00(O.G.l2_00), l01(O.G.l2_01), l3(O.G.l3), dV(O.V.dM);
  Table r0(O.rep.rho0_V0), r0m(O.rep.rho0_V1), r1(O.rep.rho1), r2(O.rep.rho2);
  Table T0(O.T0), T1(O.T1), T2(O.T2);
  auto E0 = [v0](std::size_t i) { return basis(v0, i); };
  auto E1 = [v1](std::size_t i) { return basis(v1, i); };

  for (std::size_t m = 0; m < v1; ++m)
    if (!eq(lin(dk, lin(T1, E1(m))), lin(T0, lin(dV, E1(m))))) f.insert("chain");
  for (std::size_t a = 0; a < v0; ++a)
    for (std::size_t b = 0; b < v0; ++b) {
      if (!eq(T2({a, b}), scale(-1, T2({b, a})))) f.insert("skew(T2)");
      Vec u = E0(a), v = E0(b), Tu = lin(T0, u), Tv = lin(T0, v);
      Vec lhs = sub(lin(T0, sub(bil(r0, Tu, v), bil(r0, Tv, u))), bil(l00, Tu, Tv));
      if (!eq(lhs, lin(dk, T2({a, b})))) f.insert("(i)");
    }
  for (std::size_t k = 0; k < v1; ++k)
    for (std::size_t b = 0; b < v0; ++b) {
      Vec m = E1(k), v = E0(b), Tm = lin(T1, m), Tv = lin(T0, v);
      Vec lhs = add(lin(T1, sub(bil(r1, Tm, v), bil(r0m, Tv, m))), bil(l01, Tv, Tm));
      if (!eq(lhs, bil(T2, lin(dV, m), v))) f.insert("(ii)");
    }
  for (std::size_t a = 0; a < v0; ++a)
    for (std::size_t b = 0; b < v0; ++b)
      for (std::size_t c = 0; c < v0; ++c) {
        std::vector<Vec> w = {E0(a), E0(b), E0(c)};
        Vec s = tri(l3, lin(T0, w[0]), lin(T0, w[1]), lin(T0, w[2]));
        for (std::size_t k = 0; k < 3; ++k) {
          const Vec &x1 = w[k], &x2 = w[(k + 1) % 3], &x3 = w[(k + 2) % 3];
          Vec t23 = bil(T2, x2, x3);
          s = add(s, bil(l01, lin(T0, x1), t23));
          s = add(s, bil(T2, x3, sub(bil(r0, lin(T0, x1), x2), bil(r0, lin(T0, x2), x1))));
          s = add(s, lin(T1, add(bil(r1, t23, x1), tri(r2, lin(T0, x2), lin(T0, x3), x1))));
        }
        if (!null(s)) f.insert("(iii)");
      }
  return f;
}

MultiMap d1(const prelie2::PreLieAlgebra& A, const prelie2::PreLieRep& rep, const MultiMap& w) {
  Table m(A.mul), rho(rep.rho), mu(rep.mu), W(w);
  std::size_t n = A.A.dim, dv = rep.V.dim;
  std::vector<Rational> c;
  for (std::size_t x1 = 0; x1 < n; ++x1)
    for (std::size_t x2 = 0; x2 < n; ++x2) {
      Vec X1 = basis(n, x1), X2 = basis(n, x2);
      Vec r = add(bil(rho, X1, W({x2})), bil(mu, X2, W({x1})));
      r = sub(r, lin(W, bil(m, X1, X2)));
      c.insert(c.end(), r.begin(), r.end());
    }
  (void)dv;
  return MultiMap({A.A, A.A}, rep.V, c);
}

MultiMap d2(const prelie2::PreLieAlgebra& A, const prelie2::PreLieRep& rep, const MultiMap& w) {
  Table m(A.mul), rho(rep.rho), mu(rep.mu), W(w);
  std::size_t n = A.A.dim;
  std::vector<Rational> c;
  for (std::size_t x1 = 0; x1 < n; ++x1)
    for (std::size_t x2 = 0; x2 < n; ++x2)
      for (std::size_t x3 = 0; x3 < n; ++x3) {
        Vec X1 = basis(n, x1), X2 = basis(n, x2), X3 = basis(n, x3);
        Vec r = bil(rho, X1, W({x2, x3}));
        r = add(r, bil(mu, X3, W({x2, x1})));
        r = sub(r, bil(W, X2, bil(m, X1, X3)));
        r = sub(r, bil(rho, X2, W({x1, x3})));
        r = sub(r, bil(mu, X3, W({x1, x2})));
        r = add(r, bil(W, X1, bil(m, X2, X3)));
        r = sub(r, bil(W, sub(bil(m, X1, X2), bil(m, X2, X1)), X3));
        c.insert(c.end(), r.begin(), r.end());
      }
  return MultiMap({A.A, A.A, A.A}, rep.V, c);
}

namespace {

template <class Br>
Vec cybe_with(const std::vector<Rational>& r, std::size_t n, Br br) {
  Vec out(n * n * n);
  auto at = [n](std::size_t a, std::size_t b, std::size_t c) { return (a * n + b) * n + c; };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Rational& rab = r[a * n + b];
      if (rab == 0) continue;
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
          const Rational& rcd = r[c * n + d];
          if (rcd == 0) continue;
          Rational k = rab * rcd;
          Vec p = br(a, c);  // [r12, r13]
          for (std::size_t i = 0; i < n; ++i) out[at(i, b, d)] += k * p[i];
          p = br(b, c);  // [r12, r23]
          for (std::size_t i = 0; i < n; ++i) out[at(a, i, d)] += k * p[i];
          p = br(b, d);  // [r13, r23]
          for (std::size_t i = 0; i < n; ++i) out[at(a, c, i)] += k * p[i];
        }
    }
  return out;
}

}  // namespace

Vec cybe(const std::vector<Rational>& r, std::size_t n, const MultiMap& bracket) {
  Table b(bracket);
  return cybe_with(r, n, [&](std::size_t i, std::size_t j) { return b({i, j}); });
}

bool lie_o_operator(const MultiMap& T, const MultiMap& bracket, const MultiMap& rho) {
  Table t(T), b(bracket), r(rho);
  std::size_t nv = t.in[0];
  for (std::size_t u = 0; u < nv; ++u)
    for (std::size_t v = 0; v < nv; ++v) {
      Vec U = basis(nv, u), V = basis(nv, v), Tu = t({u}), Tv = t({v});
      if (!eq(bil(b, Tu, Tv), lin(t, sub(bil(r, Tu, V), bil(r, Tv, U))))) return false;
    }
  return true;
}

GradedVerdict graded(const std::vector<Rational>& r, const prelie2::Lie2Algebra& G) {
  const std::size_t n0 = G.g0.dim, n1 = G.g1.dim, n = n0 + n1;
  Table l00(G.l2_00), l01(G.l2_01), d(G.dk);
  // [x+m, y+k]_s = l2(x,y) + l2(x,k) + l2(m,y)
  auto br = [&](std::size_t a, std::size_t b) {
    Vec out(n);
    if (a < n0 && b < n0) {
      Vec p = l00({a, b});
      std::copy(p.begin(), p.end(), out.begin());
    } else if (a < n0 && b >= n0) {
      Vec p = l01({a, b - n0});
      std::copy(p.begin(), p.end(), out.begin() + n0);
    } else if (a >= n0 && b < n0) {
      Vec p = l01({b, a - n0});
      for (std::size_t i = 0; i < n1; ++i) out[n0 + i] = -p[i];
    }
    return out;
  };
  GradedVerdict v;
  v.skew = true;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (r[a * n + b] != -r[b * n + a]) v.skew = false;
  v.cybe = null(cybe_with(r, n, br));
  // (𝔡⊗1 − 1⊗𝔡) r, with 𝔡 vanishing on g0
  Vec c(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Rational& k = r[a * n + b];
      if (k == 0) continue;
      if (a >= n0) {
        Vec da = d({a - n0});
        for (std::size_t i = 0; i < n0; ++i) c[i * n + b] += k * da[i];
      }
      if (b >= n0) {
        Vec db = d({b - n0});
        for (std::size_t i = 0; i < n0; ++i) c[a * n + i] -= k * db[i];
      }
    }
  v.closed = null(c);
  return v;
}

bool invariant_consequence(const prelie2::PreLieAlgebra& A, const MultiMap& omega) {
  Table m(A.mul), w(omega);
  std::size_t n = A.A.dim;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t x = 0; x < n; ++x)
        if (bil(w, m({u, v}), basis(n, x)) != bil(w, basis(n, u), m({x, v}))) return false;
  return true;
}

}  // namespace oracle
