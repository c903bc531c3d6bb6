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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dualqf/normal.hpp"
#include "support.hpp"

using namespace dualqf;
using namespace dualqf::testing;

namespace {

bool is_minor_diagonal_pattern(const Matrix& g22) {
  const std::size_t k = g22.rows();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      bool expect_one = (j == mirror(i, k));
      if (expect_one ? !g22(i, j).is_one() : !g22(i, j).is_zero()) return false;
    }
  return true;
}

bool is_diagonal(const Matrix& g) {
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j)
      if (i != j && !g(i, j).is_zero()) return false;
  return true;
}

void check_common(const MetricSpaceInstance& inst, const NormalFormResult& r) {
  const auto& f = inst.field();
  CHECK(r.normalized == change_of_basis(inst, r.T));
  CHECK(!determinant(r.T).is_zero());
  CHECK(r.d == radical(inst).d);
  // the first d new basis vectors span the radical
  std::vector<Vector> prefix;
  for (std::size_t j = 0; j < r.d; ++j) prefix.push_back(r.normalized.s_basis()[j]);
  CHECK(Subspace::span(f, inst.n(), prefix) == radical(inst).R);
  CHECK(r.normalized.S() == inst.S());
}

}  // namespace

TEST_CASE("diagonalize examples") {
  auto q = QQ();
  auto r = diagonalize(worked_example());
  check_common(worked_example(), r);
  auto g = polar_gram(r.normalized);
  CHECK(g == Matrix::parse(q, {{"0", "0", "0"}, {"0", "1", "0"}, {"0", "0", "-1"}}));
  CHECK(r.T.block(1, 3, 1, 3) == Matrix::parse(q, {{"1", "-2"}, {"0", "1"}}));

  auto already = standard_instance(q, 3, make_form(q, {"0", "1/2", "3/2"}));
  CHECK(diagonalize(already).T.is_identity());

  auto hyp = standard_instance(q, 2, make_form(q, {"0", "0"}, {{0, 1, "1"}}));
  auto h = diagonalize(hyp);
  check_common(hyp, h);
  CHECK(polar_gram(h.normalized) == Matrix::parse(q, {{"2", "0"}, {"0", "-1/2"}}));

  CHECK_THROWS_AS(diagonalize(hyperbolic_gf2()), Error);
}

TEST_CASE("char2 normal form examples") {
  auto f = GF(2);
  auto r = char2_normal_form(hyperbolic_gf2());
  CHECK(r.T.is_identity());
  CHECK(r.kind == NormalKind::MinorDiagonalChar2);

  auto four = standard_instance(f, 4, make_form(f, {"0", "0", "0", "0"}, {{0, 1, "1"}, {2, 3, "1"}}));
  auto r4 = char2_normal_form(four);
  check_common(four, r4);
  CHECK(is_minor_diagonal_pattern(polar_gram(r4.normalized)));

  // radical e1, hyperbolic block on e2, e3
  auto with_rad = standard_instance(f, 3, make_form(f, {"0", "1", "0"}, {{1, 2, "1"}}));
  auto r3 = char2_normal_form(with_rad);
  check_common(with_rad, r3);
  CHECK(r3.d == 1);
  CHECK(r3.normalized.s_basis()[0] == unit_vector(f, 3, 0));
  CHECK(is_minor_diagonal_pattern(polar_gram(r3.normalized).block(1, 3, 1, 3)));

  CHECK_THROWS_AS(char2_normal_form(worked_example()), Error);
  CHECK_THROWS_AS(char2_normal_form(rad_example(f)), Error);
}

TEST_CASE("diagonal duality on random instances") {
  Random rnd(51);
  for (int t = 0; t < 200; ++t) {
    FieldSpec f = t % 3 == 0 ? QQ() : (t % 3 == 1 ? GF(3) : GF(5));
    auto inst = random_valid_instance(rnd, f);
    auto r = diagonalize(inst);
    check_common(inst, r);
    const std::size_t d = r.d, m = inst.m();
    auto g = polar_gram(r.normalized);
    CHECK(is_diagonal(g));
    for (std::size_t i = d; i < m; ++i) CHECK(!g(i, i).is_zero());
    CHECK(r.normalized.Q().upper().empty());

    auto dual = dualize(r.normalized, adapted_basis_from_s_basis(r.normalized));
    auto dg = polar_gram(dual.dual_inst);
    for (std::size_t i = 0; i + d < m; ++i) {
      CHECK(dg(i, i) == invert(g(d + i, d + i)));
      // with Q = 1/2 sum g_ii x_i^2 the dual reads 1/2 sum g_ii^-1 a_i^2
      CHECK(dual.dual_inst.Q().diag(i) == halve(invert(g(d + i, d + i))));
    }
    CHECK(is_diagonal(dg));
  }
}

TEST_CASE("char2 structure on random GF(2) instances") {
  Random rnd(52);
  for (int t = 0; t < 200; ++t) {
    auto f = GF(2);
    auto inst = random_valid_instance(rnd, f);
    auto g0 = polar_gram(inst);
    for (std::size_t i = 0; i < inst.m(); ++i) CHECK(g0(i, i).is_zero());
    auto r = char2_normal_form(inst);
    check_common(inst, r);
    const std::size_t d = r.d, m = inst.m(), k = m - d;
    CHECK(k % 2 == 0);
    auto g = polar_gram(r.normalized);
    CHECK(is_minor_diagonal_pattern(g.block(d, m, d, m)));
    CHECK(g.block(0, d, 0, m).is_zero());

    // Q = sum g_i x_i^2 + sum_{i < mirror(i)} x_i x_mirror(i) on the block
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        CHECK(r.normalized.Q().upper(d + i, d + j) == (j == mirror(i, k) ? Scalar::one(f) : Scalar::zero(f)));

    auto dual = dualize(r.normalized, adapted_basis_from_s_basis(r.normalized));
    for (std::size_t i = 0; i < k; ++i)
      CHECK(dual.dual_inst.Q().diag(i) == r.normalized.Q().diag(d + mirror(i, k)));
  }
}

TEST_CASE("char2 normal form over GF(2) requires the radical condition") {
  Random rnd(53);
  int violated = 0;
  for (int t = 0; t < 100; ++t) {
    auto inst = random_instance(rnd, GF(2), {6, true}).value();
    if (check_radical_condition(inst)) continue;
    ++violated;
    CHECK_THROWS_AS(char2_normal_form(inst), Error);
  }
  CHECK(violated > 0);
}
