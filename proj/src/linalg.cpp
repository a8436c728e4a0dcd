#include "prelie2/linalg.hpp"

#include <utility>

namespace prelie2 {

Matrix matrix_of(const MultiMap& f) {
  if (f.arity() != 1) throw DimensionError("matrix_of needs a linear map");
  const std::size_t n = f.input(0).dim, d = f.output().dim;
  Matrix m(d, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < d; ++j) m(j, i) = f.coeffs()[i * d + j];
  return m;
}

RowEchelon row_reduce(Matrix m) {
  RowEchelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t p = row;
    while (p < m.rows && m(p, col).is_zero()) ++p;
    if (p == m.rows) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(p, j), m(row, j));
    Rational inv = Rational(1) / m(row, col);
    for (std::size_t j = col; j < m.cols; ++j) m(row, j) *= inv;
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      Rational factor = m(r, col);
      for (std::size_t j = col; j < m.cols; ++j)
        if (!m(row, j).is_zero()) m(r, j) -= factor * m(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

std::vector<std::size_t> free_columns(const Matrix& m) {
  auto ech = row_reduce(m);
  std::vector<bool> pivot(m.cols, false);
  for (auto c : ech.pivots) pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < m.cols; ++c)
    if (!pivot[c]) free.push_back(c);
  return free;
}

std::vector<Vector> nullspace(const Matrix& m) {
  auto ech = row_reduce(m);
  std::vector<bool> pivot(m.cols, false);
  for (auto c : ech.pivots) pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t c = 0; c < m.cols; ++c) {
    if (pivot[c]) continue;
    Vector v(m.cols);
    v[c] = 1;
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) v[ech.pivots[r]] = -ech.reduced(r, c);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vector> nullspace(const MultiMap& f) { return nullspace(matrix_of(f)); }

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }
std::size_t rank(const MultiMap& f) { return rank(matrix_of(f)); }

std::optional<MultiMap> inverse(const MultiMap& f) {
  if (f.arity() != 1 || f.input(0).dim != f.output().dim) return std::nullopt;
  const std::size_t n = f.output().dim;
  Matrix aug(n, 2 * n);
  Matrix a = matrix_of(f);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  auto ech = row_reduce(aug);
  if (ech.pivots.size() < n || (n > 0 && ech.pivots[n - 1] != n - 1)) return std::nullopt;
  // Column-vector inverse B sits in the right block; convert back to
  // the (input, output) coefficient layout.
  MultiMap inv({f.output()}, f.input(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at_flat(i * n + j) = ech.reduced(j, n + i);
  return inv;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows) throw DimensionError("right-hand side has wrong length");
  Matrix aug(m.rows, m.cols + 1);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) aug(i, j) = m(i, j);
    aug(i, m.cols) = b[i];
  }
  auto ech = row_reduce(aug);
  Vector x(m.cols);
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
    if (ech.pivots[r] == m.cols) return std::nullopt;
    x[ech.pivots[r]] = ech.reduced(r, m.cols);
  }
  return x;
}

}  // namespace prelie2
