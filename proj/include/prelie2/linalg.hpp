#pragma once

#include <optional>
#include <vector>

#include "prelie2/tensor.hpp"

namespace prelie2 {

// Dense row-major matrix used for solving linear systems.
struct Matrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Rational> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
  Rational& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

// Matrix of a linear map acting on column vectors: entry (j, i) = f(e_i)_j.
Matrix matrix_of(const MultiMap& f);

struct RowEchelon {
  Matrix reduced;                     // reduced row echelon form
  std::vector<std::size_t> pivots;    // pivot column per nonzero row
};

RowEchelon row_reduce(Matrix m);

// Basis of {x : m x = 0}. One vector per free column c, with 1 at c and 0
// at every other free column; ordered by c.
std::vector<Vector> nullspace(const Matrix& m);
// Kernel of a linear map.
std::vector<Vector> nullspace(const MultiMap& f);

std::size_t rank(const Matrix& m);
std::size_t rank(const MultiMap& f);

std::optional<MultiMap> inverse(const MultiMap& f);

// Some x with m x = b, if one exists.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

// Free columns of the nullspace basis, in the order nullspace() returns them.
std::vector<std::size_t> free_columns(const Matrix& m);

}  // namespace prelie2
