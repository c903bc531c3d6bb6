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
 * @file problem.hpp
 * @brief JSON problem files and the batch command table.
 *
 * Problem file layout (indices are 0-based, scalars are strings):
 *
 * @code{.json}
 * {
 *   "field": "Q",                      // or "GF(p)"
 *   "n": 5,
 *   "S": [["1","0","0","0","0"], ...], // basis of S, one row per vector
 *   "Q": {"diag": ["0","1/2","3/2"], "upper": [[1, 2, "2"]]},
 *   "map": [[...], ...],               // optional, n x n, for "similarity"
 *   "ratio": "1",                      // optional, for "similarity"
 *   "form": [...],                     // optional dual vector, for "linked"
 *   "vector": [...],                   // optional vector of S, for "linked-forms"
 *   "matrix": [[...], ...]             // optional square matrix, for "adjugate"
 * }
 * @endcode
 *
 * JSON integers are accepted wherever a scalar string is expected.
 */

#ifndef DUALQF_PROBLEM_HPP
#define DUALQF_PROBLEM_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dualqf/quadform.hpp"

namespace dualqf {

struct ProblemFile {
  MetricSpaceInstance instance;
  std::optional<Matrix> map;
  std::optional<Scalar> ratio;
  std::optional<Vector> form;
  std::optional<Vector> vector;
  std::optional<Matrix> matrix;

  friend bool operator==(const ProblemFile&, const ProblemFile&) = default;
};

/// Throws ParseError (malformed JSON, bad scalar, wrong shape) and
/// ValidationError (dependent S, bad upper index, non-prime modulus), each
/// prefixed with the JSON location. A field override replaces "field".
ProblemFile parse_problem(std::string_view text, const std::optional<FieldSpec>& field_override = std::nullopt);

/// Canonical JSON text of a problem; parse_problem(serialize_problem(p)) == p.
std::string serialize_problem(const ProblemFile& problem);

struct RunOptions {
  /// Also print the polar Gram matrices G with Q(x) = 1/2 x^T G x (characteristic != 2).
  bool half_gram = false;
};

/// Names accepted by run_command().
const std::vector<std::string>& command_names();

/// Runs one subcommand and returns the result document (deterministic JSON,
/// trailing newline). Library errors propagate as dualqf::Error; an unknown
/// command or a missing input section throws InvalidArgument.
std::string run_command(const ProblemFile& problem, std::string_view command, const RunOptions& options = {});

/// 0 on success, 2 for RadicalConditionViolated, 1 for everything else.
int exit_code_for(Errc code) noexcept;

}  // namespace dualqf

#endif  // DUALQF_PROBLEM_HPP
