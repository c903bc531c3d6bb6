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

#ifndef DUALQF_NORMAL_HPP
#define DUALQF_NORMAL_HPP

#include <cstddef>

#include "dualqf/quadform.hpp"

namespace dualqf {

enum class NormalKind { Diagonal, MinorDiagonalChar2 };

/// normalized == change_of_basis(input, T). The first d basis vectors of
/// normalized span the radical; the remaining block carries the normal form.
struct NormalFormResult {
  Matrix T;
  MetricSpaceInstance normalized;
  NormalKind kind = NormalKind::Diagonal;
  std::size_t d = 0;
};

/// Congruence diagonalization of the non-radical block. Throws CharTwo.
///
/// Pivot rule: the lowest remaining vector with B(v, v) != 0; if all of them
/// are isotropic, the lowest pair (i, j) with B(v_i, v_j) != 0 and
/// v_i <- v_i + v_j, which has B = 2 B(v_i, v_j) != 0 on the diagonal.
NormalFormResult diagonalize(const MetricSpaceInstance& inst);

/// Characteristic 2: a basis of the non-radical block in which the polar Gram
/// matrix has ones exactly on the minor diagonal. Throws NotCharTwo and
/// RadicalConditionViolated.
NormalFormResult char2_normal_form(const MetricSpaceInstance& inst);

/// Local index paired with t in a block of size k under the minor-diagonal layout.
inline std::size_t mirror(std::size_t t, std::size_t k) { return k - 1 - t; }

}  // namespace dualqf

#endif  // DUALQF_NORMAL_HPP
