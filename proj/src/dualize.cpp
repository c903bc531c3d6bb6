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

#include "dualqf/dualize.hpp"

#include <string>

namespace dualqf {

namespace {

AdaptedBasis finish_basis(const MetricSpaceInstance& inst, const std::vector<Vector>& s_part, std::size_t d) {
  const auto& field = inst.field();
  const std::size_t n = inst.n();
  auto all = extend_vectors(s_part, Subspace::full(field, n));
  AdaptedBasis basis;
  basis.A = Matrix::from_columns(field, n, all);
  basis.A_inv = invert_matrix(basis.A);
  basis.d = d;
  basis.m = inst.m();
  basis.n = n;
  return basis;
}

void require_adapted(const MetricSpaceInstance& inst, const Radical& rad, const AdaptedBasis& basis) {
  const auto& field = inst.field();
  const std::size_t n = inst.n();
  if (basis.n != n || basis.m != inst.m() || basis.d != rad.d || basis.A.rows() != n || basis.A.cols() != n) {
    throw Error(Errc::NotAdapted, "adapted basis has the wrong shape");
  }
  const auto cols = basis.A.column_list();
  std::vector<Vector> head(cols.begin(), cols.begin() + static_cast<std::ptrdiff_t>(basis.d));
  if (Subspace::span(field, n, head) != rad.R) throw Error(Errc::NotAdapted, "first d vectors do not span R");
  head.assign(cols.begin(), cols.begin() + static_cast<std::ptrdiff_t>(basis.m));
  if (Subspace::span(field, n, head) != inst.S()) throw Error(Errc::NotAdapted, "first m vectors do not span S");
  if (!(basis.A * basis.A_inv).is_identity()) throw Error(Errc::NotAdapted, "A_inv is not the inverse of A");
}

void require_in_s(const MetricSpaceInstance& inst, std::span<const Scalar> x) {
  if (x.size() != inst.n()) throw Error(Errc::LengthMismatch, "expected a vector of length " + std::to_string(inst.n()));
  if (!inst.S().contains(x)) throw Error(Errc::NotInSubspace, "vector does not lie in S");
}

void require_in_s_hat(const MetricSpaceInstance& inst, const Radical& rad, std::span<const Scalar> a_star) {
  if (a_star.size() != inst.n()) {
    throw Error(Errc::LengthMismatch, "expected a linear form of length " + std::to_string(inst.n()));
  }
  for (std::size_t r = 0; r < rad.R.dim(); ++r) {
    if (!dot(inst.field(), a_star, rad.R.basis().row(r)).is_zero()) {
      throw Error(Errc::NotInSHat, "linear form does not annihilate the radical");
    }
  }
}

// (<a*, b_j>)_j over the basis of S.
Vector restrict_to_s(const MetricSpaceInstance& inst, std::span<const Scalar> a_star) {
  Vector out;
  out.reserve(inst.m());
  for (const auto& b : inst.s_basis()) out.push_back(dot(inst.field(), a_star, b));
  return out;
}

}  // namespace

AdaptedBasis adapted_basis(const MetricSpaceInstance& inst) {
  const auto rad = radical(inst);
  return finish_basis(inst, extend_basis(rad.R, inst.S()), rad.d);
}

AdaptedBasis adapted_basis_from_s_basis(const MetricSpaceInstance& inst) {
  const auto rad = radical(inst);
  std::vector<Vector> head(inst.s_basis().begin(), inst.s_basis().begin() + static_cast<std::ptrdiff_t>(rad.d));
  if (Subspace::span(inst.field(), inst.n(), head) != rad.R) {
    throw Error(Errc::NotAdapted, "the first " + std::to_string(rad.d) + " basis vectors of S do not span R");
  }
  return finish_basis(inst, inst.s_basis(), rad.d);
}

bool b_linked(const MetricSpaceInstance& inst, std::span<const Scalar> a_star, std::span<const Scalar> x) {
  require_in_s(inst, x);
  require_in_s_hat(inst, radical(inst), a_star);
  // Bilinearity: checking <a*, y> = B(x, y) on a basis of S suffices.
  return polar_gram(inst) * inst.to_coords(x) == restrict_to_s(inst, a_star);
}

LinkedCoset linked_coset(const MetricSpaceInstance& inst, std::span<const Scalar> f_star) {
  const auto rad = radical(inst);
  require_in_s_hat(inst, rad, f_star);
  auto sol = solve(polar_gram(inst), restrict_to_s(inst, f_star));
  // The restriction of f* lies in ann_S(R) = im D, so the system is consistent.
  if (!sol) throw Error(Errc::NotInSHat, "linear form is not linked to any vector of S");
  return {inst.to_ambient(sol->particular), rad.R};
}

LinkedCoset linked_forms(const MetricSpaceInstance& inst, std::span<const Scalar> s) {
  require_in_s(inst, s);
  const auto basis = adapted_basis(inst);
  const auto& field = inst.field();
  const Vector s_coords = inst.to_coords(s);
  const Matrix gram = polar_gram(inst);

  Vector f_star = zero_vector(field, inst.n());
  for (std::size_t j = 0; j < basis.m; ++j) {
    // B(s, e_j) becomes the coefficient of e*_j; it vanishes on I1.
    Vector e_coords = inst.to_coords(basis.vector(j));
    Scalar c = dot(field, s_coords, gram * e_coords);
    if (c.is_zero()) continue;
    f_star = add(f_star, scale(c, basis.A_inv.row(j)));
  }
  return {std::move(f_star), annihilator(inst.S())};
}

DualFormResult dualize(const MetricSpaceInstance& inst) { return dualize(inst, adapted_basis(inst)); }

DualFormResult dualize(const MetricSpaceInstance& inst, const AdaptedBasis& basis) {
  if (!check_radical_condition(inst)) {
    throw Error(Errc::RadicalConditionViolated, "Q does not vanish on the radical; the dual form does not exist");
  }
  const auto rad = radical(inst);
  require_adapted(inst, rad, basis);

  const auto& field = inst.field();
  const std::size_t n = basis.n;
  const std::size_t m = basis.m;
  const std::size_t d = basis.d;
  const std::size_t k = m - d;

  // Q in the adapted basis of S.
  std::vector<Vector> to_adapted;
  to_adapted.reserve(m);
  for (std::size_t j = 0; j < m; ++j) to_adapted.push_back(inst.to_coords(basis.vector(j)));
  const auto adapted_inst = change_of_basis(inst, Matrix::from_columns(field, m, to_adapted));

  DualFormResult res;
  res.G22 = polar_gram(adapted_inst).block(d, m, d, m);
  res.G22_inv = invert_matrix(res.G22);

  QuadFormCoeffs q_hat(field, n - d);
  for (std::size_t i = 0; i < k; ++i) {
    Vector coords = zero_vector(field, m);
    for (std::size_t t = 0; t < k; ++t) coords[d + t] = res.G22_inv(i, t);
    q_hat.set_diag(i, eval_q(adapted_inst, coords));
    for (std::size_t j = i + 1; j < k; ++j) q_hat.set_upper(i, j, res.G22_inv(i, j));
  }

  std::vector<Vector> dual_basis;
  dual_basis.reserve(n - d);
  for (std::size_t i = d; i < n; ++i) dual_basis.push_back(basis.dual_vector(i));

  res.S_hat = annihilator(rad.R);
  res.R_hat = annihilator(inst.S());
  res.dual_inst = MetricSpaceInstance::make(field, n, std::move(dual_basis), std::move(q_hat));
  res.adapted = basis;
  return res;
}

bool double_dual_check(const MetricSpaceInstance& inst) {
  const auto once = dualize(inst);
  const auto twice = dualize(once.dual_inst);
  const auto& back = twice.dual_inst;
  if (back.S() != inst.S()) return false;

  std::vector<Vector> cols;
  cols.reserve(inst.m());
  for (const auto& b : inst.s_basis()) cols.push_back(back.to_coords(b));
  const auto reexpressed = change_of_basis(back, Matrix::from_columns(inst.field(), inst.m(), cols));
  return reexpressed.Q() == inst.Q();
}

bool converse_relation_check(const MetricSpaceInstance& inst,
                             std::span<const std::pair<Vector, Vector>> samples) {
  const auto dual = dualize(inst);
  for (const auto& [a_star, x] : samples) {
    if (b_linked(inst, a_star, x) != b_linked(dual.dual_inst, x, a_star)) return false;
  }
  return true;
}

}  // namespace dualqf
