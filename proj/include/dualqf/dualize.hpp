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
 * @file dualize.hpp
 * @brief Dual quadratic forms on annihilators of the radical.
 *
 * Given (S, Q) in V = F^n with polar form B and radical R, let
 *
 *     S^ = ann(R) <= V*,   R^ = ann(S) <= S^.
 *
 * A form a* in S^ is B-linked to x in S when <a*, y> = B(x, y) for every y
 * in S. Provided Q vanishes on R \ {0}, the rule "a* linked to x implies
 * Q^(a*) = Q(x)" defines a quadratic form Q^ on S^. Its radical is R^, and
 * dualizing Q^ (with V** identified with V) gives back Q.
 *
 * Coordinates: pick an adapted basis e_0..e_{n-1} of V whose first d vectors
 * span R and whose first m span S, and split the indices into
 * I1 = [0,d), I2 = [d,m), I3 = [m,n). With G22 the polar Gram block of Q on
 * I2, the dual coefficients on the dual basis vectors e*_i, i in I2, are
 *
 *     g^_ij = (G22^-1)_ij,   g^_i = Q(sum_k (G22^-1)_ik e_k),
 *
 * and every coefficient touching I3 vanishes.
 */

#ifndef DUALQF_DUALIZE_HPP
#define DUALQF_DUALIZE_HPP

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "dualqf/quadform.hpp"

namespace dualqf {

/// Half-open index range [begin, end).
struct IndexRange {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const noexcept { return end - begin; }
  bool empty() const noexcept { return begin == end; }
  bool contains(std::size_t i) const noexcept { return begin <= i && i < end; }
};

struct AdaptedBasis {
  Matrix A;      ///< n x n, column j is e_j
  Matrix A_inv;  ///< row i is the dual basis vector e*_i
  std::size_t d = 0;
  std::size_t m = 0;
  std::size_t n = 0;

  IndexRange I1() const noexcept { return {0, d}; }
  IndexRange I2() const noexcept { return {d, m}; }
  IndexRange I3() const noexcept { return {m, n}; }
  Vector vector(std::size_t j) const { return A.column(j); }
  Vector dual_vector(std::size_t i) const { return A_inv.row_vector(i); }
};

struct DualFormResult {
  Subspace S_hat;
  Subspace R_hat;
  /// Lives in dual coordinates; s_basis is e*_i for i in I2 then I3.
  MetricSpaceInstance dual_inst;
  AdaptedBasis adapted;
  Matrix G22;
  Matrix G22_inv;
};

struct LinkedCoset {
  Vector representative;
  Subspace radical;
};

/// Radical RREF basis, completed inside S, then inside V.
AdaptedBasis adapted_basis(const MetricSpaceInstance& inst);

/// Adapted basis whose first m vectors are inst.s_basis() itself, completed
/// inside V. Throws NotAdapted unless the first d basis vectors span R.
AdaptedBasis adapted_basis_from_s_basis(const MetricSpaceInstance& inst);

/// <a_star, b> == B(x, b) for every basis vector b of S.
/// Throws NotInSubspace (x), NotInSHat (a_star does not annihilate R).
bool b_linked(const MetricSpaceInstance& inst, std::span<const Scalar> a_star, std::span<const Scalar> x);

/// All x in S that f_star is linked to: representative + R. Throws NotInSHat.
LinkedCoset linked_coset(const MetricSpaceInstance& inst, std::span<const Scalar> f_star);

/// All a* in S^ linked to s: representative + R^. Throws NotInSubspace.
LinkedCoset linked_forms(const MetricSpaceInstance& inst, std::span<const Scalar> s);

/// Throws RadicalConditionViolated when Q does not vanish on R \ {0}.
DualFormResult dualize(const MetricSpaceInstance& inst);
/// Same, in a caller-chosen adapted basis. Throws NotAdapted.
DualFormResult dualize(const MetricSpaceInstance& inst, const AdaptedBasis& basis);

/// Dualizes twice and compares the result with Q on inst's own basis.
bool double_dual_check(const MetricSpaceInstance& inst);

/// For every (a*, x) pair: a* linked to x under B iff x linked to a* under B^.
bool converse_relation_check(const MetricSpaceInstance& inst,
                             std::span<const std::pair<Vector, Vector>> samples);

}  // namespace dualqf

#endif  // DUALQF_DUALIZE_HPP
