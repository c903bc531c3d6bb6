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
 * @file simgrp.hpp
 * @brief Similarities of (S, Q), their extensions to V, and transposes.
 *
 * psi in GL(V) extends a similarity of ratio c of (S, Q) exactly when its
 * transpose extends a similarity of ratio c of the dual form (S^, Q^).
 * theorem_psi_check() evaluates both sides independently.
 */

#ifndef DUALQF_SIMGRP_HPP
#define DUALQF_SIMGRP_HPP

#include <optional>

#include "dualqf/dualize.hpp"

namespace dualqf {

/// Invertible map of F^n; column j of P is the image of the j-th standard basis vector.
class LinearMap {
 public:
  LinearMap() = default;
  /// Throws Singular or DimensionMismatch.
  explicit LinearMap(Matrix p);

  const Matrix& P() const noexcept { return p_; }
  std::size_t dim() const noexcept { return p_.rows(); }
  Vector operator()(std::span<const Scalar> x) const { return p_ * x; }
  LinearMap operator*(const LinearMap& rhs) const { return LinearMap(p_ * rhs.p_); }

  friend bool operator==(const LinearMap&, const LinearMap&) = default;

 private:
  Matrix p_;
};

/// The map on dual coordinates with <psi^T(a*), x> = <a*, psi(x)>.
LinearMap transpose_map(const LinearMap& psi);

/// psi(S) = S, Q(psi b_i) = c Q(b_i) and B(psi b_i, psi b_j) = c B(b_i, b_j).
/// For the zero form only c = 1 is accepted. Throws ZeroRatio.
bool verify_similarity(const MetricSpaceInstance& inst, const LinearMap& psi, const Scalar& c);

/// P conjugated into the adapted basis, cut along I1, I2, I3.
struct BlockDecomposition {
  Matrix P11, P12, P13, P22, P23, P33;
  Matrix P21, P31, P32;
  bool P21_zero = false;
  bool P31_zero = false;
  bool P32_zero = false;
  bool P11_identity = false;  ///< psi fixes R elementwise
  bool P33_identity = false;  ///< psi^T fixes R^ elementwise
};

struct SimilarityReport {
  bool preserves_S = false;
  std::optional<Scalar> ratio;  ///< c when the primal side holds
  bool primal_ok = false;
  bool dual_ok = false;
  Matrix adapted_matrix;  ///< A^-1 P A
  BlockDecomposition blocks;
};

/// Throws RadicalConditionViolated and ZeroRatio.
SimilarityReport theorem_psi_check(const MetricSpaceInstance& inst, const LinearMap& psi, const Scalar& c);

struct ReflectionResult {
  Matrix phi_s;  ///< restriction to S, in s_basis coordinates
  LinearMap psi_ext;
  Vector f_star;
};

/// x -> x - Q(s)^-1 <f*, x> s with f* linked to s. Throws IsotropicVector,
/// NotInSubspace and RadicalConditionViolated.
ReflectionResult reflection(const MetricSpaceInstance& inst, std::span<const Scalar> s);

}  // namespace dualqf

#endif  // DUALQF_SIMGRP_HPP
