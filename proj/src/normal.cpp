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

#include "dualqf/normal.hpp"

#include <utility>
#include <vector>

namespace dualqf {

namespace {

// The instance rewritten in a basis of S that starts with the radical, plus
// the transform from the input basis.
struct RadicalFirst {
  Matrix T0;
  MetricSpaceInstance inst;
  std::size_t d = 0;
};

RadicalFirst radical_first(const MetricSpaceInstance& inst) {
  const auto rad = radical(inst);
  std::vector<Vector> cols;
  for (const auto& v : extend_basis(rad.R, inst.S())) cols.push_back(inst.to_coords(v));
  Matrix t0 = Matrix::from_columns(inst.field(), inst.m(), cols);
  auto rewritten = change_of_basis(inst, t0);
  return {std::move(t0), std::move(rewritten), rad.d};
}

// B(u, v) on the non-radical block, with u, v in block-local coordinates.
Scalar block_form(const Matrix& g22, const Vector& u, const Vector& v) {
  return dot(g22.field(), u, g22 * v);
}

NormalFormResult assemble(const MetricSpaceInstance& inst, const RadicalFirst& rf, const std::vector<Vector>& block,
                          NormalKind kind) {
  const auto& field = inst.field();
  const std::size_t m = inst.m();
  Matrix local = Matrix::identity(field, m);
  for (std::size_t j = 0; j < block.size(); ++j) {
    for (std::size_t i = 0; i < block.size(); ++i) local(rf.d + i, rf.d + j) = block[j][i];
  }
  NormalFormResult res;
  res.T = rf.T0 * local;
  res.normalized = change_of_basis(inst, res.T);
  res.kind = kind;
  res.d = rf.d;
  return res;
}

}  // namespace

NormalFormResult diagonalize(const MetricSpaceInstance& inst) {
  if (inst.field().is_char_two()) throw Error(Errc::CharTwo, "diagonalization needs characteristic != 2");
  const auto rf = radical_first(inst);
  const auto& field = inst.field();
  const std::size_t k = inst.m() - rf.d;
  const Matrix g22 = polar_gram(rf.inst).block(rf.d, inst.m(), rf.d, inst.m());

  std::vector<Vector> v;
  for (std::size_t i = 0; i < k; ++i) v.push_back(unit_vector(field, k, i));

  for (std::size_t p = 0; p < k; ++p) {
    std::size_t pick = k;
    for (std::size_t i = p; i < k && pick == k; ++i) {
      if (!block_form(g22, v[i], v[i]).is_zero()) pick = i;
    }
    if (pick == k) {
      for (std::size_t i = p; i < k && pick == k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
          if (!block_form(g22, v[i], v[j]).is_zero()) {
            v[i] = add(v[i], v[j]);
            pick = i;
            break;
          }
        }
      }
    }
    // The block is non-degenerate, so a pivot always exists.
    if (pick == k) throw Error(Errc::Singular, "non-radical block is degenerate");
    std::swap(v[p], v[pick]);

    const Scalar inv = invert(block_form(g22, v[p], v[p]));
    for (std::size_t j = p + 1; j < k; ++j) {
      Scalar c = block_form(g22, v[j], v[p]);
      if (!c.is_zero()) v[j] = subtract(v[j], scale(c * inv, v[p]));
    }
  }
  return assemble(inst, rf, v, NormalKind::Diagonal);
}

NormalFormResult char2_normal_form(const MetricSpaceInstance& inst) {
  if (!inst.field().is_char_two()) throw Error(Errc::NotCharTwo, "minor-diagonal form needs characteristic 2");
  if (!check_radical_condition(inst)) {
    throw Error(Errc::RadicalConditionViolated, "Q does not vanish on the radical");
  }
  const auto rf = radical_first(inst);
  const auto& field = inst.field();
  const std::size_t k = inst.m() - rf.d;
  const Matrix g22 = polar_gram(rf.inst).block(rf.d, inst.m(), rf.d, inst.m());

  std::vector<Vector> rest;
  for (std::size_t i = 0; i < k; ++i) rest.push_back(unit_vector(field, k, i));

  // Greedy symplectic pairing: B(p_t, q_t) = 1 and each pair is orthogonal to all later vectors.
  std::vector<std::pair<Vector, Vector>> pairs;
  while (!rest.empty()) {
    Vector a = rest.front();
    std::size_t j = 1;
    while (j < rest.size() && block_form(g22, a, rest[j]).is_zero()) ++j;
    if (j == rest.size()) throw Error(Errc::Singular, "non-radical block is degenerate");
    Vector b = scale(invert(block_form(g22, a, rest[j])), rest[j]);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(j));
    rest.erase(rest.begin());
    for (auto& w : rest) {
      Scalar wb = block_form(g22, w, b);
      Scalar wa = block_form(g22, w, a);
      w = add(subtract(w, scale(wb, a)), scale(wa, b));
    }
    pairs.emplace_back(std::move(a), std::move(b));
  }

  // p_1 .. p_h, q_h .. q_1 puts every pair on the minor diagonal.
  std::vector<Vector> layout(k);
  for (std::size_t t = 0; t < pairs.size(); ++t) {
    layout[t] = pairs[t].first;
    layout[mirror(t, k)] = pairs[t].second;
  }
  return assemble(inst, rf, layout, NormalKind::MinorDiagonalChar2);
}

}  // namespace dualqf
