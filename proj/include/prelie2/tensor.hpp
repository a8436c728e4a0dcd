#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "prelie2/rational.hpp"

namespace prelie2 {

struct Space {
  std::size_t dim = 0;
  std::string label;
};

// Coordinates in the standard basis of a Space.
using Vector = std::vector<Rational>;

// Raised when shapes disagree. `slot` is the offending argument position
// (npos when the problem is not tied to a single slot).
class DimensionError : public std::invalid_argument {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  DimensionError(const std::string& what, std::size_t slot = npos)
      : std::invalid_argument(what), slot_(slot) {}
  std::size_t slot() const { return slot_; }

 private:
  std::size_t slot_;
};

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator-(const Vector& a);
Vector operator*(const Rational& s, const Vector& v);
Vector& operator+=(Vector& a, const Vector& b);
Vector& operator-=(Vector& a, const Vector& b);
// a += s * b
void axpy(Vector& a, const Rational& s, const Vector& b);
// Concatenation, used for direct sums.
Vector concat(const Vector& a, const Vector& b);

// Dense multilinear map in1 ⊗ ... ⊗ ink → out.  coeffs is row-major over
// (i1, ..., ik, j) with the output index j varying fastest, so coeffs for a
// fixed input basis tuple form a contiguous image vector.  For arity 1 this
// means entry (i, j) is the j-th coordinate of the image of e_i.
//
// Space labels are descriptive; equality compares dimensions and entries.
class MultiMap {
 public:
  MultiMap() = default;
  MultiMap(std::vector<Space> inputs, Space output);
  MultiMap(std::vector<Space> inputs, Space output, std::vector<Rational> coeffs);

  // Evaluates f on every input basis tuple.
  static MultiMap from_basis(std::vector<Space> inputs, Space output,
                             const std::function<Vector(std::span<const std::size_t>)>& f);
  static MultiMap identity(const Space& s);
  // Linear map whose image of e_i is column i of `images`.
  static MultiMap linear(const Space& in, const Space& out, const std::vector<Vector>& images);

  std::size_t arity() const { return inputs_.size(); }
  const std::vector<Space>& inputs() const { return inputs_; }
  const Space& input(std::size_t k) const { return inputs_.at(k); }
  const Space& output() const { return output_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  std::size_t tuple_count() const;

  Rational& at(std::initializer_list<std::size_t> index, std::size_t j);
  const Rational& at(std::initializer_list<std::size_t> index, std::size_t j) const;
  Rational& at_flat(std::size_t k) { return coeffs_[k]; }

  // Image of a basis tuple.
  Vector image(std::span<const std::size_t> index) const;
  Vector image(std::initializer_list<std::size_t> index) const;

  bool is_zero() const;
  MultiMap relabel(std::vector<Space> inputs, Space output) const;

  MultiMap& operator+=(const MultiMap& o);
  MultiMap& operator-=(const MultiMap& o);
  friend MultiMap operator+(MultiMap a, const MultiMap& b) { return a += b; }
  friend MultiMap operator-(MultiMap a, const MultiMap& b) { return a -= b; }
  friend MultiMap operator*(const Rational& s, MultiMap m);
  MultiMap operator-() const;

  friend bool operator==(const MultiMap& a, const MultiMap& b);

 private:
  std::size_t offset(std::span<const std::size_t> index) const;
  void require_same_shape(const MultiMap& o) const;

  std::vector<Space> inputs_;
  Space output_;
  std::vector<Rational> coeffs_;
};

// Multilinear evaluation. Throws DimensionError naming the first bad slot.
Vector ml_apply(const MultiMap& m, std::span<const Vector> args);
Vector ml_apply(const MultiMap& m, std::initializer_list<Vector> args);

// f ∘ g for linear maps.
MultiMap ml_compose_linear(const MultiMap& f, const MultiMap& g);

// True iff swapping slots a and b negates every coefficient.
bool ml_skew_in(const MultiMap& m, std::size_t slot_a, std::size_t slot_b);

// Result slot k is source slot perm[k]:  out(x_0..x_{k-1}) = m(y) with y[perm[k]] = x_k.
MultiMap permute_slots(const MultiMap& m, std::span<const std::size_t> perm);
MultiMap permute_slots(const MultiMap& m, std::initializer_list<std::size_t> perm);

// Substitute a linear map into one slot: out(.., x, ..) = m(.., L x, ..).
MultiMap precompose(const MultiMap& m, std::size_t slot, const MultiMap& linear);
// L ∘ m
MultiMap postcompose(const MultiMap& linear, const MultiMap& m);

// Transpose of a linear map (the dual map in dual bases).
MultiMap transpose(const MultiMap& f);

std::vector<std::size_t> tuple_from_flat(std::size_t flat, const std::vector<Space>& inputs);

}  // namespace prelie2
