// Copyright 2026 The dualqf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file exactla.hpp
 * @brief Exact dense linear algebra over a FieldSpec.
 *
 * Vectors are plain coordinate arrays. Vectors of the dual space are
 * coordinate rows with respect to the standard dual basis, so the pairing
 * of a linear form a* with a vector x is the dot product sum_i a_i x_i.
 *
 * Subspaces store their basis in reduced row-echelon form, which makes
 * subspace equality a structural comparison.
 */

#ifndef DUALQF_EXACTLA_HPP
#define DUALQF_EXACTLA_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dualqf/field.hpp"

namespace dualqf {

using Vector = std::vector<Scalar>;

Vector zero_vector(const FieldSpec& field, std::size_t n);
/// i-th standard basis vector of length n.
Vector unit_vector(const FieldSpec& field, std::size_t n, std::size_t i);
Vector parse_vector(const FieldSpec& field, std::initializer_list<const char*> entries);

Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b);
/// Same as dot(a, b) but well defined for empty vectors.
Scalar dot(const FieldSpec& field, std::span<const Scalar> a, std::span<const Scalar> b);
Vector add(std::span<const Scalar> a, std::span<const Scalar> b);
Vector subtract(std::span<const Scalar> a, std::span<const Scalar> b);
Vector scale(const Scalar& c, std::span<const Scalar> a);
bool is_zero(std::span<const Scalar> a);

class Matrix {
 public:
  Matrix() = default;
  Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols);

  static Matrix identity(const FieldSpec& field, std::size_t n);
  /// Each inner vector is one row; all rows must have length cols.
  static Matrix from_rows(const FieldSpec& field, std::size_t cols, const std::vector<Vector>& rows);
  static Matrix from_columns(const FieldSpec& field, std::size_t rows, const std::vector<Vector>& columns);
  /// Test helper: rows of decimal scalar strings.
  static Matrix parse(const FieldSpec& field, std::initializer_list<std::initializer_list<const char*>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const FieldSpec& field() const noexcept { return field_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vector row_vector(std::size_t r) const;
  Vector column(std::size_t c) const;
  std::vector<Vector> row_list() const;
  std::vector<Vector> column_list() const;

  Matrix transpose() const;
  /// Rows [r0, r1) x columns [c0, c1).
  Matrix block(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const;

  Matrix operator*(const Matrix& rhs) const;
  Vector operator*(std::span<const Scalar> x) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix scaled(const Scalar& c) const;

  bool is_identity() const;
  bool is_zero() const;
  bool is_symmetric() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  FieldSpec field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Matrix reduced;                   ///< R, in reduced row-echelon form
  Matrix transform;                 ///< invertible T with T * M = R
  std::vector<std::size_t> pivots;  ///< pivot columns, increasing
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Fraction-free Bareiss elimination over Q, Gaussian elimination over GF(p).
Scalar determinant(const Matrix& m);

/// Throws Singular.
Matrix invert_matrix(const Matrix& m);

/// Transpose of the cofactor matrix. Defined for singular matrices as well.
Matrix adjugate(const Matrix& m);

class Subspace {
 public:
  Subspace() = default;
  /// Zero subspace of F^n.
  Subspace(const FieldSpec& field, std::size_t ambient_dim);

  /// Span of arbitrary (possibly dependent) vectors.
  static Subspace span(const FieldSpec& field, std::size_t ambient_dim, const std::vector<Vector>& vectors);
  static Subspace full(const FieldSpec& field, std::size_t ambient_dim);

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const FieldSpec& field() const noexcept { return field_; }
  /// Canonical RREF basis, one vector per row.
  const Matrix& basis() const noexcept { return basis_; }
  std::vector<Vector> basis_vectors() const { return basis_.row_list(); }

  bool contains(std::span<const Scalar> v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  FieldSpec field_;
  std::size_t ambient_dim_ = 0;
  Matrix basis_;
};

/// Null space {x : M x = 0}.
Subspace kernel(const Matrix& m);

struct Solution {
  Vector particular;
  Subspace homogeneous;
};

/// All solutions of M x = b, or nullopt if b is not in the column space.
std::optional<Solution> solve(const Matrix& m, std::span<const Scalar> b);

/// {a : <a, t> = 0 for all t in T}, in standard dual coordinates.
Subspace annihilator(const Subspace& t);

/// Basis of outer starting with the stored basis of inner, completed greedily
/// from the stored basis rows of outer. Throws NotNested.
std::vector<Vector> extend_basis(const Subspace& inner, const Subspace& outer);

/// Same completion for an arbitrary independent prefix. Throws NotNested if a
/// prefix vector leaves outer, InvalidArgument if the prefix is dependent.
std::vector<Vector> extend_vectors(const std::vector<Vector>& prefix, const Subspace& outer);

/// Coordinates of v in terms of independent vectors, or nullopt if v is not in their span.
std::optional<Vector> coordinates(const std::vector<Vector>& basis, std::span<const Scalar> v);

std::string to_string(const Matrix& m);

}  // namespace dualqf

#endif  // DUALQF_EXACTLA_HPP
