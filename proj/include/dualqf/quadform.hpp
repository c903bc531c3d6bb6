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
 * @file quadform.hpp
 * @brief Quadratic forms on a subspace S of F^n.
 *
 * A form on S is stored relative to an ordered basis b_0..b_{m-1} of S as
 *
 *     Q(sum x_h b_h) = sum_i diag[i] x_i^2 + sum_{i<j} upper(i,j) x_i x_j,
 *
 * with diag[i] = Q(b_i) and upper(i,j) = B(b_i, b_j) for the polar form
 * B(x,y) = Q(x+y) - Q(x) - Q(y). Unlike a Gram matrix this keeps the values
 * Q(b_i) in characteristic 2, where B is alternating.
 */

#ifndef DUALQF_QUADFORM_HPP
#define DUALQF_QUADFORM_HPP

#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "dualqf/exactla.hpp"

namespace dualqf {

class QuadFormCoeffs {
 public:
  QuadFormCoeffs() = default;
  /// The zero form on an m-dimensional space.
  QuadFormCoeffs(const FieldSpec& field, std::size_t m);

  std::size_t dim() const noexcept { return diag_.size(); }
  const FieldSpec& field() const noexcept { return field_; }

  const Vector& diag() const noexcept { return diag_; }
  const Scalar& diag(std::size_t i) const { return diag_.at(i); }
  void set_diag(std::size_t i, Scalar value);

  /// Nonzero cross coefficients keyed by (i, j) with i < j.
  const std::map<std::pair<std::size_t, std::size_t>, Scalar>& upper() const noexcept { return upper_; }
  /// B(b_i, b_j) for i != j (order-insensitive), 0 when absent.
  Scalar upper(std::size_t i, std::size_t j) const;
  /// Requires i < j < dim(); zero values are not stored.
  void set_upper(std::size_t i, std::size_t j, Scalar value);

  bool is_zero() const;

  friend bool operator==(const QuadFormCoeffs&, const QuadFormCoeffs&) = default;

 private:
  FieldSpec field_;
  Vector diag_;
  std::map<std::pair<std::size_t, std::size_t>, Scalar> upper_;
};

/// The pair (S, Q) inside F^n.
class MetricSpaceInstance {
 public:
  MetricSpaceInstance() = default;

  /// Validates: every basis vector has length n and the vectors are
  /// independent (ValidationError); coefficient dimension equals the number
  /// of basis vectors (DimensionMismatch).
  static MetricSpaceInstance make(const FieldSpec& field, std::size_t n, std::vector<Vector> s_basis,
                                  QuadFormCoeffs q);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return s_basis_.size(); }
  const Subspace& S() const noexcept { return S_; }
  const std::vector<Vector>& s_basis() const noexcept { return s_basis_; }
  const QuadFormCoeffs& Q() const noexcept { return q_; }

  /// sum_h coords[h] b_h in ambient coordinates.
  Vector to_ambient(std::span<const Scalar> coords) const;
  /// Coordinates of an ambient vector relative to s_basis. Throws NotInSubspace.
  Vector to_coords(std::span<const Scalar> x) const;

  friend bool operator==(const MetricSpaceInstance&, const MetricSpaceInstance&) = default;

 private:
  FieldSpec field_;
  std::size_t n_ = 0;
  Subspace S_;
  std::vector<Vector> s_basis_;
  QuadFormCoeffs q_;
};

struct Radical {
  Subspace R;       ///< ambient coordinates
  Subspace R_in_S;  ///< coordinates relative to s_basis
  std::size_t d = 0;
};

/// Q at s_basis coordinates. Throws LengthMismatch.
Scalar eval_q(const MetricSpaceInstance& inst, std::span<const Scalar> coords);
/// Q at an ambient vector of S. Throws NotInSubspace.
Scalar eval_q_ambient(const MetricSpaceInstance& inst, std::span<const Scalar> x);

/// Gram matrix of B on s_basis; its diagonal is 2 diag[i] (zero in characteristic 2).
Matrix polar_gram(const MetricSpaceInstance& inst);

/// B(x, y) = Q(x+y) - Q(x) - Q(y) at s_basis coordinates.
Scalar eval_b(const MetricSpaceInstance& inst, std::span<const Scalar> x, std::span<const Scalar> y);

Radical radical(const MetricSpaceInstance& inst);

/// True iff Q vanishes on R \ {0}. Since B vanishes on R x R, Q restricted to R
/// is additive and Q(cx) = c^2 Q(x); over Q and GF(p) its zero set in R is
/// therefore a subspace and a basis check suffices.
bool check_radical_condition(const MetricSpaceInstance& inst);

/// Instance on the same S with basis b'_j = sum_i T(i,j) b_i. Throws Singular.
MetricSpaceInstance change_of_basis(const MetricSpaceInstance& inst, const Matrix& t);

}  // namespace dualqf

#endif  // DUALQF_QUADFORM_HPP
