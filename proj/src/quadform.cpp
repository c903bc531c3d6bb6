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

#include "dualqf/quadform.hpp"

#include <algorithm>
#include <string>

namespace dualqf {

QuadFormCoeffs::QuadFormCoeffs(const FieldSpec& field, std::size_t m)
    : field_(field), diag_(zero_vector(field, m)) {}

void QuadFormCoeffs::set_diag(std::size_t i, Scalar value) {
  if (value.field() != field_) throw Error(Errc::FieldMismatch, "coefficient from another field");
  diag_.at(i) = std::move(value);
}

Scalar QuadFormCoeffs::upper(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  auto it = upper_.find({i, j});
  return it == upper_.end() ? Scalar::zero(field_) : it->second;
}

void QuadFormCoeffs::set_upper(std::size_t i, std::size_t j, Scalar value) {
  if (!(i < j && j < dim())) {
    throw Error(Errc::ValidationError, "upper index (" + std::to_string(i) + ", " + std::to_string(j) +
                                           ") must satisfy i < j < " + std::to_string(dim()));
  }
  if (value.field() != field_) throw Error(Errc::FieldMismatch, "coefficient from another field");
  if (value.is_zero()) {
    upper_.erase({i, j});
  } else {
    upper_[{i, j}] = std::move(value);
  }
}

bool QuadFormCoeffs::is_zero() const { return dualqf::is_zero(diag_) && upper_.empty(); }

MetricSpaceInstance MetricSpaceInstance::make(const FieldSpec& field, std::size_t n, std::vector<Vector> s_basis,
                                              QuadFormCoeffs q) {
  for (std::size_t i = 0; i < s_basis.size(); ++i) {
    if (s_basis[i].size() != n) {
      throw Error(Errc::ValidationError, "basis vector " + std::to_string(i) + " has length " +
                                             std::to_string(s_basis[i].size()) + ", expected " + std::to_string(n));
    }
  }
  if (q.dim() != s_basis.size()) {
    throw Error(Errc::DimensionMismatch, "form has dimension " + std::to_string(q.dim()) + " but S has " +
                                             std::to_string(s_basis.size()) + " basis vectors");
  }
  if (q.field() != field) throw Error(Errc::FieldMismatch, "form over another field");

  MetricSpaceInstance inst;
  inst.field_ = field;
  inst.n_ = n;
  inst.S_ = Subspace::span(field, n, s_basis);
  if (inst.S_.dim() != s_basis.size()) throw Error(Errc::ValidationError, "basis vectors of S are dependent");
  inst.s_basis_ = std::move(s_basis);
  inst.q_ = std::move(q);
  return inst;
}

Vector MetricSpaceInstance::to_ambient(std::span<const Scalar> coords) const {
  if (coords.size() != m()) throw Error(Errc::LengthMismatch, "expected " + std::to_string(m()) + " coordinates");
  Vector x = zero_vector(field_, n_);
  for (std::size_t h = 0; h < m(); ++h) {
    if (coords[h].is_zero()) continue;
    for (std::size_t k = 0; k < n_; ++k) x[k] += coords[h] * s_basis_[h][k];
  }
  return x;
}

Vector MetricSpaceInstance::to_coords(std::span<const Scalar> x) const {
  if (x.size() != n_) throw Error(Errc::LengthMismatch, "expected a vector of length " + std::to_string(n_));
  auto c = coordinates(s_basis_, x);
  if (!c) throw Error(Errc::NotInSubspace, "vector does not lie in S");
  return std::move(*c);
}

Scalar eval_q(const MetricSpaceInstance& inst, std::span<const Scalar> coords) {
  const auto& q = inst.Q();
  if (coords.size() != q.dim()) {
    throw Error(Errc::LengthMismatch, "expected " + std::to_string(q.dim()) + " coordinates, got " +
                                          std::to_string(coords.size()));
  }
  Scalar acc = Scalar::zero(inst.field());
  for (std::size_t i = 0; i < q.dim(); ++i) {
    if (!coords[i].is_zero() && !q.diag(i).is_zero()) acc += q.diag(i) * square(coords[i]);
  }
  for (const auto& [ij, g] : q.upper()) acc += g * coords[ij.first] * coords[ij.second];
  return acc;
}

Scalar eval_q_ambient(const MetricSpaceInstance& inst, std::span<const Scalar> x) {
  return eval_q(inst, inst.to_coords(x));
}

Matrix polar_gram(const MetricSpaceInstance& inst) {
  const auto& q = inst.Q();
  Matrix g(inst.field(), q.dim(), q.dim());
  const Scalar two = Scalar::from_int(inst.field(), 2);
  for (std::size_t i = 0; i < q.dim(); ++i) g(i, i) = two * q.diag(i);
  for (const auto& [ij, v] : q.upper()) {
    g(ij.first, ij.second) = v;
    g(ij.second, ij.first) = v;
  }
  return g;
}

Scalar eval_b(const MetricSpaceInstance& inst, std::span<const Scalar> x, std::span<const Scalar> y) {
  if (x.size() != inst.m() || y.size() != inst.m()) {
    throw Error(Errc::LengthMismatch, "expected " + std::to_string(inst.m()) + " coordinates");
  }
  return eval_q(inst, add(x, y)) - eval_q(inst, x) - eval_q(inst, y);
}

Radical radical(const MetricSpaceInstance& inst) {
  Radical rad;
  rad.R_in_S = kernel(polar_gram(inst));
  std::vector<Vector> ambient;
  for (std::size_t r = 0; r < rad.R_in_S.dim(); ++r) ambient.push_back(inst.to_ambient(rad.R_in_S.basis().row(r)));
  rad.R = Subspace::span(inst.field(), inst.n(), ambient);
  rad.d = rad.R.dim();
  return rad;
}

bool check_radical_condition(const MetricSpaceInstance& inst) {
  if (!inst.field().is_char_two()) return true;
  const auto rad = radical(inst);
  for (std::size_t r = 0; r < rad.R_in_S.dim(); ++r) {
    if (!eval_q(inst, rad.R_in_S.basis().row(r)).is_zero()) return false;
  }
  return true;
}

MetricSpaceInstance change_of_basis(const MetricSpaceInstance& inst, const Matrix& t) {
  const std::size_t m = inst.m();
  if (t.rows() != m || t.cols() != m) {
    throw Error(Errc::DimensionMismatch, "change of basis must be " + std::to_string(m) + "x" + std::to_string(m));
  }
  if (rank(t) != m) throw Error(Errc::Singular, "change of basis is singular");

  const auto cols = t.column_list();
  QuadFormCoeffs q(inst.field(), m);
  std::vector<Scalar> values;
  values.reserve(m);
  for (std::size_t j = 0; j < m; ++j) {
    values.push_back(eval_q(inst, cols[j]));
    q.set_diag(j, values.back());
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      q.set_upper(i, j, eval_q(inst, add(cols[i], cols[j])) - values[i] - values[j]);
    }
  }
  std::vector<Vector> basis;
  basis.reserve(m);
  for (const auto& c : cols) basis.push_back(inst.to_ambient(c));
  return MetricSpaceInstance::make(inst.field(), inst.n(), std::move(basis), std::move(q));
}

}  // namespace dualqf
