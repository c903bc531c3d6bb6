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

#include "dualqf/simgrp.hpp"

#include <utility>
#include <vector>

namespace dualqf {

LinearMap::LinearMap(Matrix p) : p_(std::move(p)) {
  if (!p_.is_square()) throw Error(Errc::DimensionMismatch, "linear map must be square");
  if (rank(p_) != p_.rows()) throw Error(Errc::Singular, "linear map is not invertible");
}

LinearMap transpose_map(const LinearMap& psi) { return LinearMap(psi.P().transpose()); }

namespace {

// Images psi(b_i) in s_basis coordinates, or nullopt if one leaves S.
std::optional<std::vector<Vector>> image_coords(const MetricSpaceInstance& inst, const LinearMap& psi) {
  std::vector<Vector> out;
  out.reserve(inst.m());
  for (const auto& b : inst.s_basis()) {
    auto y = psi(b);
    auto c = coordinates(inst.s_basis(), y);
    if (!c) return std::nullopt;
    out.push_back(std::move(*c));
  }
  return out;
}

}  // namespace

bool verify_similarity(const MetricSpaceInstance& inst, const LinearMap& psi, const Scalar& c) {
  if (c.is_zero()) throw Error(Errc::ZeroRatio, "ratio must be nonzero");
  if (psi.dim() != inst.n()) throw Error(Errc::DimensionMismatch, "map and instance have different dimensions");
  if (inst.Q().is_zero() && !c.is_one()) return false;

  auto images = image_coords(inst, psi);
  if (!images) return false;

  const auto& q = inst.Q();
  std::vector<Scalar> values;
  values.reserve(inst.m());
  for (std::size_t i = 0; i < inst.m(); ++i) {
    values.push_back(eval_q(inst, (*images)[i]));
    if (values.back() != c * q.diag(i)) return false;
  }
  // Q on a basis alone does not determine Q; the cross terms B(b_i, b_j) do the rest.
  for (std::size_t i = 0; i < inst.m(); ++i) {
    for (std::size_t j = i + 1; j < inst.m(); ++j) {
      Scalar b = eval_q(inst, add((*images)[i], (*images)[j])) - values[i] - values[j];
      if (b != c * q.upper(i, j)) return false;
    }
  }
  return true;
}

SimilarityReport theorem_psi_check(const MetricSpaceInstance& inst, const LinearMap& psi, const Scalar& c) {
  if (c.is_zero()) throw Error(Errc::ZeroRatio, "ratio must be nonzero");
  const auto dual = dualize(inst);

  SimilarityReport rep;
  rep.preserves_S = image_coords(inst, psi).has_value();
  rep.primal_ok = verify_similarity(inst, psi, c);
  rep.dual_ok = verify_similarity(dual.dual_inst, transpose_map(psi), c);
  if (rep.primal_ok) rep.ratio = c;

  const auto& ab = dual.adapted;
  rep.adapted_matrix = ab.A_inv * psi.P() * ab.A;
  const auto& p = rep.adapted_matrix;
  const auto i1 = ab.I1(), i2 = ab.I2(), i3 = ab.I3();
  auto cut = [&](IndexRange r, IndexRange s) { return p.block(r.begin, r.end, s.begin, s.end); };

  auto& bl = rep.blocks;
  bl.P11 = cut(i1, i1);
  bl.P12 = cut(i1, i2);
  bl.P13 = cut(i1, i3);
  bl.P22 = cut(i2, i2);
  bl.P23 = cut(i2, i3);
  bl.P33 = cut(i3, i3);
  bl.P21 = cut(i2, i1);
  bl.P31 = cut(i3, i1);
  bl.P32 = cut(i3, i2);
  bl.P21_zero = bl.P21.is_zero();
  bl.P31_zero = bl.P31.is_zero();
  bl.P32_zero = bl.P32.is_zero();
  bl.P11_identity = bl.P11.is_identity();
  bl.P33_identity = bl.P33.is_identity();
  return rep;
}

ReflectionResult reflection(const MetricSpaceInstance& inst, std::span<const Scalar> s) {
  if (!check_radical_condition(inst)) {
    throw Error(Errc::RadicalConditionViolated, "Q does not vanish on the radical");
  }
  const auto& field = inst.field();
  const std::size_t n = inst.n();
  const Scalar qs = eval_q_ambient(inst, s);
  if (qs.is_zero()) throw Error(Errc::IsotropicVector, "reflection along an isotropic vector");

  ReflectionResult res;
  res.f_star = linked_forms(inst, s).representative;
  const Scalar inv = invert(qs);
  Matrix p = Matrix::identity(field, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (s[r].is_zero()) continue;
    for (std::size_t c = 0; c < n; ++c) p(r, c) -= inv * s[r] * res.f_star[c];
  }
  res.psi_ext = LinearMap(std::move(p));

  std::vector<Vector> cols;
  cols.reserve(inst.m());
  for (const auto& b : inst.s_basis()) cols.push_back(inst.to_coords(res.psi_ext(b)));
  res.phi_s = Matrix::from_columns(field, inst.m(), cols);
  return res;
}

}  // namespace dualqf
