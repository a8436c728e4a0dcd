#include "prelie2/tensor.hpp"

#include <algorithm>
#include <numeric>

namespace prelie2 {

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

static void require_len(const Vector& a, const Vector& b) {
  if (a.size() != b.size())
    throw DimensionError("vector length mismatch: " + std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()));
}

Vector& operator+=(Vector& a, const Vector& b) {
  require_len(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Vector& operator-=(Vector& a, const Vector& b) {
  require_len(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

Vector operator+(const Vector& a, const Vector& b) {
  Vector r = a;
  return r += b;
}

Vector operator-(const Vector& a, const Vector& b) {
  Vector r = a;
  return r -= b;
}

Vector operator-(const Vector& a) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

Vector operator*(const Rational& s, const Vector& v) {
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

void axpy(Vector& a, const Rational& s, const Vector& b) {
  require_len(a, b);
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!b[i].is_zero()) a[i] += s * b[i];
}

Vector concat(const Vector& a, const Vector& b) {
  Vector r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

// ---------------------------------------------------------------------------

MultiMap::MultiMap(std::vector<Space> inputs, Space output)
    : inputs_(std::move(inputs)), output_(std::move(output)) {
  coeffs_.assign(tuple_count() * output_.dim, Rational());
}

MultiMap::MultiMap(std::vector<Space> inputs, Space output, std::vector<Rational> coeffs)
    : inputs_(std::move(inputs)), output_(std::move(output)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != tuple_count() * output_.dim)
    throw DimensionError("coefficient count " + std::to_string(coeffs_.size()) +
                         " does not match shape (expected " +
                         std::to_string(tuple_count() * output_.dim) + ")");
}

MultiMap MultiMap::from_basis(std::vector<Space> inputs, Space output,
                              const std::function<Vector(std::span<const std::size_t>)>& f) {
  MultiMap m(std::move(inputs), std::move(output));
  const std::size_t n = m.tuple_count(), d = m.output_.dim;
  if (d == 0) return m;
  for (std::size_t t = 0; t < n; ++t) {
    auto idx = tuple_from_flat(t, m.inputs_);
    Vector v = f(idx);
    if (v.size() != d)
      throw DimensionError("basis image has " + std::to_string(v.size()) + " entries, expected " +
                           std::to_string(d));
    std::move(v.begin(), v.end(), m.coeffs_.begin() + static_cast<std::ptrdiff_t>(t * d));
  }
  return m;
}

MultiMap MultiMap::identity(const Space& s) {
  MultiMap m({s}, s);
  for (std::size_t i = 0; i < s.dim; ++i) m.coeffs_[i * s.dim + i] = 1;
  return m;
}

MultiMap MultiMap::linear(const Space& in, const Space& out, const std::vector<Vector>& images) {
  if (images.size() != in.dim) throw DimensionError("expected one image per input basis vector");
  MultiMap m({in}, out);
  for (std::size_t i = 0; i < in.dim; ++i) {
    if (images[i].size() != out.dim) throw DimensionError("image has wrong length", 0);
    for (std::size_t j = 0; j < out.dim; ++j) m.coeffs_[i * out.dim + j] = images[i][j];
  }
  return m;
}

std::size_t MultiMap::tuple_count() const {
  std::size_t n = 1;
  for (const auto& s : inputs_) n *= s.dim;
  return n;
}

std::size_t MultiMap::offset(std::span<const std::size_t> index) const {
  if (index.size() != inputs_.size())
    throw DimensionError("index tuple has " + std::to_string(index.size()) + " entries, arity is " +
                         std::to_string(inputs_.size()));
  std::size_t off = 0;
  for (std::size_t k = 0; k < index.size(); ++k) {
    if (index[k] >= inputs_[k].dim) throw DimensionError("basis index out of range", k);
    off = off * inputs_[k].dim + index[k];
  }
  return off * output_.dim;
}

Rational& MultiMap::at(std::initializer_list<std::size_t> index, std::size_t j) {
  if (j >= output_.dim) throw DimensionError("output index out of range");
  return coeffs_[offset(std::span(index.begin(), index.size())) + j];
}

const Rational& MultiMap::at(std::initializer_list<std::size_t> index, std::size_t j) const {
  if (j >= output_.dim) throw DimensionError("output index out of range");
  return coeffs_[offset(std::span(index.begin(), index.size())) + j];
}

Vector MultiMap::image(std::span<const std::size_t> index) const {
  std::size_t off = offset(index);
  return Vector(coeffs_.begin() + static_cast<std::ptrdiff_t>(off),
                coeffs_.begin() + static_cast<std::ptrdiff_t>(off + output_.dim));
}

Vector MultiMap::image(std::initializer_list<std::size_t> index) const {
  return image(std::span(index.begin(), index.size()));
}

bool MultiMap::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& x) { return x.is_zero(); });
}

MultiMap MultiMap::relabel(std::vector<Space> inputs, Space output) const {
  return MultiMap(std::move(inputs), std::move(output), coeffs_);
}

void MultiMap::require_same_shape(const MultiMap& o) const {
  bool same = o.inputs_.size() == inputs_.size() && o.output_.dim == output_.dim;
  for (std::size_t k = 0; same && k < inputs_.size(); ++k) same = inputs_[k].dim == o.inputs_[k].dim;
  if (!same) throw DimensionError("multilinear maps have different shapes");
}

MultiMap& MultiMap::operator+=(const MultiMap& o) {
  require_same_shape(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

MultiMap& MultiMap::operator-=(const MultiMap& o) {
  require_same_shape(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

MultiMap operator*(const Rational& s, MultiMap m) {
  for (auto& c : m.coeffs_) c *= s;
  return m;
}

MultiMap MultiMap::operator-() const { return Rational(-1) * *this; }

bool operator==(const MultiMap& a, const MultiMap& b) {
  if (a.inputs_.size() != b.inputs_.size() || a.output_.dim != b.output_.dim) return false;
  for (std::size_t k = 0; k < a.inputs_.size(); ++k)
    if (a.inputs_[k].dim != b.inputs_[k].dim) return false;
  return a.coeffs_ == b.coeffs_;
}

std::vector<std::size_t> tuple_from_flat(std::size_t flat, const std::vector<Space>& inputs) {
  std::vector<std::size_t> idx(inputs.size());
  for (std::size_t k = inputs.size(); k-- > 0;) {
    idx[k] = flat % inputs[k].dim;
    flat /= inputs[k].dim;
  }
  return idx;
}

// ---------------------------------------------------------------------------

Vector ml_apply(const MultiMap& m, std::span<const Vector> args) {
  if (args.size() != m.arity())
    throw DimensionError("expected " + std::to_string(m.arity()) + " arguments, got " +
                         std::to_string(args.size()));
  const std::size_t d = m.output().dim;
  // Only nonzero coordinates contribute; basis-vector arguments make this a lookup.
  std::vector<std::vector<std::size_t>> support(args.size());
  for (std::size_t k = 0; k < args.size(); ++k) {
    if (args[k].size() != m.input(k).dim)
      throw DimensionError("argument " + std::to_string(k) + " has " +
                               std::to_string(args[k].size()) + " entries, slot expects " +
                               std::to_string(m.input(k).dim),
                           k);
    for (std::size_t i = 0; i < args[k].size(); ++i)
      if (!args[k][i].is_zero()) support[k].push_back(i);
  }
  Vector out(d);
  for (const auto& s : support)
    if (s.empty()) return out;
  if (d == 0) return out;

  const auto& c = m.coeffs();
  std::vector<std::size_t> pos(args.size(), 0);
  while (true) {
    Rational w = 1;
    std::size_t off = 0;
    for (std::size_t k = 0; k < args.size(); ++k) {
      std::size_t i = support[k][pos[k]];
      w *= args[k][i];
      off = off * m.input(k).dim + i;
    }
    off *= d;
    for (std::size_t j = 0; j < d; ++j)
      if (!c[off + j].is_zero()) out[j] += w * c[off + j];
    std::size_t k = args.size();
    while (k > 0) {
      --k;
      if (++pos[k] < support[k].size()) break;
      pos[k] = 0;
      if (k == 0) return out;
    }
    if (args.empty()) return out;
  }
}

Vector ml_apply(const MultiMap& m, std::initializer_list<Vector> args) {
  return ml_apply(m, std::span(args.begin(), args.size()));
}

MultiMap ml_compose_linear(const MultiMap& f, const MultiMap& g) {
  if (f.arity() != 1 || g.arity() != 1) throw DimensionError("composition needs linear maps");
  if (g.output().dim != f.input(0).dim)
    throw DimensionError("cannot compose: output of g has dim " + std::to_string(g.output().dim) +
                             ", input of f has dim " + std::to_string(f.input(0).dim),
                         0);
  const std::size_t n = g.input(0).dim, k = g.output().dim, d = f.output().dim;
  MultiMap r({g.input(0)}, f.output());
  const auto& gc = g.coeffs();
  const auto& fc = f.coeffs();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t m = 0; m < k; ++m) {
      const Rational& a = gc[i * k + m];
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < d; ++j)
        if (!fc[m * d + j].is_zero()) r.at_flat(i * d + j) += a * fc[m * d + j];
    }
  return r;
}

bool ml_skew_in(const MultiMap& m, std::size_t slot_a, std::size_t slot_b) {
  if (slot_a >= m.arity()) throw DimensionError("slot out of range", slot_a);
  if (slot_b >= m.arity()) throw DimensionError("slot out of range", slot_b);
  if (m.input(slot_a).dim != m.input(slot_b).dim)
    throw DimensionError("slots have different dimensions", slot_b);
  if (slot_a == slot_b) return m.is_zero();
  std::vector<std::size_t> perm(m.arity());
  std::iota(perm.begin(), perm.end(), 0);
  std::swap(perm[slot_a], perm[slot_b]);
  return permute_slots(m, perm) == -m;
}

MultiMap permute_slots(const MultiMap& m, std::span<const std::size_t> perm) {
  const std::size_t k = m.arity();
  if (perm.size() != k) throw DimensionError("permutation has wrong length");
  std::vector<bool> seen(k, false);
  for (auto p : perm) {
    if (p >= k || seen[p]) throw DimensionError("not a permutation");
    seen[p] = true;
  }
  std::vector<Space> ins(k);
  for (std::size_t i = 0; i < k; ++i) ins[i] = m.input(perm[i]);
  return MultiMap::from_basis(ins, m.output(), [&](std::span<const std::size_t> idx) {
    std::vector<std::size_t> src(k);
    for (std::size_t i = 0; i < k; ++i) src[perm[i]] = idx[i];
    return m.image(src);
  });
}

MultiMap permute_slots(const MultiMap& m, std::initializer_list<std::size_t> perm) {
  return permute_slots(m, std::span(perm.begin(), perm.size()));
}

MultiMap precompose(const MultiMap& m, std::size_t slot, const MultiMap& linear) {
  if (slot >= m.arity()) throw DimensionError("slot out of range", slot);
  if (linear.arity() != 1 || linear.output().dim != m.input(slot).dim)
    throw DimensionError("substituted map does not land in the slot's space", slot);
  auto ins = m.inputs();
  ins[slot] = linear.input(0);
  return MultiMap::from_basis(ins, m.output(), [&](std::span<const std::size_t> idx) {
    std::vector<Vector> args;
    args.reserve(idx.size());
    for (std::size_t k = 0; k < idx.size(); ++k)
      args.push_back(k == slot ? linear.image({idx[k]}) : unit_vector(m.input(k).dim, idx[k]));
    return ml_apply(m, args);
  });
}

MultiMap postcompose(const MultiMap& linear, const MultiMap& m) {
  if (linear.arity() != 1 || linear.input(0).dim != m.output().dim)
    throw DimensionError("cannot postcompose: dimension mismatch");
  return MultiMap::from_basis(m.inputs(), linear.output(), [&](std::span<const std::size_t> idx) {
    return ml_apply(linear, {m.image(idx)});
  });
}

MultiMap transpose(const MultiMap& f) {
  if (f.arity() != 1) throw DimensionError("transpose needs a linear map");
  const std::size_t n = f.input(0).dim, d = f.output().dim;
  MultiMap t({f.output()}, f.input(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < d; ++j) t.at_flat(j * n + i) = f.coeffs()[i * d + j];
  return t;
}

}  // namespace prelie2
