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

// Shared fixtures, random generators and brute-force oracles for the tests.

#ifndef DUALQF_TESTS_SUPPORT_HPP
#define DUALQF_TESTS_SUPPORT_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "dualqf/dualize.hpp"
#include "dualqf/exactla.hpp"
#include "dualqf/field.hpp"
#include "dualqf/quadform.hpp"

namespace dualqf::testing {

inline FieldSpec QQ() { return FieldSpec::rational(); }
inline FieldSpec GF(std::uint64_t p) { return FieldSpec::prime(p); }

inline Scalar S(const FieldSpec& f, const char* text) { return Scalar::parse(f, text); }
inline Scalar I(const FieldSpec& f, std::int64_t v) { return Scalar::from_int(f, v); }

inline Vector V(const FieldSpec& f, std::initializer_list<const char*> xs) { return parse_vector(f, xs); }

inline QuadFormCoeffs make_form(const FieldSpec& f, std::initializer_list<const char*> diag,
                                std::initializer_list<std::tuple<std::size_t, std::size_t, const char*>> upper = {}) {
  QuadFormCoeffs q(f, diag.size());
  std::size_t i = 0;
  for (const char* d : diag) q.set_diag(i++, Scalar::parse(f, d));
  for (const auto& [a, b, v] : upper) q.set_upper(a, b, Scalar::parse(f, v));
  return q;
}

inline MetricSpaceInstance standard_instance(const FieldSpec& f, std::size_t n, QuadFormCoeffs q) {
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < q.dim(); ++i) basis.push_back(unit_vector(f, n, i));
  return MetricSpaceInstance::make(f, n, basis, std::move(q));
}

/// Worked example: n = 5, S = span{e1,e2,e3}, Q = 1/2 (x2^2 + 4 x2 x3 + 3 x3^2).
inline MetricSpaceInstance worked_example() {
  const auto f = QQ();
  return standard_instance(f, 5, make_form(f, {"0", "1/2", "3/2"}, {{1, 2, "2"}}));
}

/// S = span{e1,e2} in F^3, Q(x1 e1 + x2 e2) = x2^2.
inline MetricSpaceInstance rad_example(const FieldSpec& f) {
  return standard_instance(f, 3, make_form(f, {"0", "1"}));
}

/// GF(2) hyperbolic plane: Q(x) = x1 x2 on F^2.
inline MetricSpaceInstance hyperbolic_gf2() {
  const auto f = GF(2);
  return standard_instance(f, 2, make_form(f, {"0", "0"}, {{0, 1, "1"}}));
}

class Random {
 public:
  explicit Random(std::uint64_t seed) : rng_(seed) {}

  std::size_t index(std::size_t lo, std::size_t hi) {  // inclusive
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  Scalar scalar(const FieldSpec& f) {
    if (f.kind() == FieldKind::Prime) {
      auto r = std::uniform_int_distribution<std::int64_t>(0, static_cast<std::int64_t>(f.modulus()) - 1)(rng_);
      return Scalar::from_int(f, r);
    }
    auto num = std::uniform_int_distribution<std::int64_t>(-5, 5)(rng_);
    auto den = std::uniform_int_distribution<std::int64_t>(1, 3)(rng_);
    return Scalar::from_fraction(f, num, den);
  }
  Scalar nonzero(const FieldSpec& f) {
    for (;;) {
      auto s = scalar(f);
      if (!s.is_zero()) return s;
    }
  }
  Vector vector(const FieldSpec& f, std::size_t n) {
    Vector v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(scalar(f));
    return v;
  }
  Matrix matrix(const FieldSpec& f, std::size_t r, std::size_t c) {
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = scalar(f);
    return m;
  }
  Matrix invertible(const FieldSpec& f, std::size_t n) {
    for (;;) {
      auto m = matrix(f, n, n);
      if (!determinant(m).is_zero()) return m;
    }
  }
  FieldSpec field() {
    switch (index(0, 3)) {
      case 0: return QQ();
      case 1: return GF(2);
      case 2: return GF(3);
      default: return GF(5);
    }
  }
  /// Element of the span of the given vectors.
  Vector combination(const FieldSpec& f, std::size_t n, const std::vector<Vector>& vs) {
    Vector x = zero_vector(f, n);
    for (const auto& v : vs) x = add(x, scale(scalar(f), v));
    return x;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

struct InstanceShape {
  std::size_t max_n = 8;
  bool allow_violation = false;  ///< return char-2 instances even when Q(R) != 0
};

/// Random instance in a random basis. The form is built in block shape
/// (radical block of size d first, then a random block), then the whole
/// picture is moved by a random change of basis of V and of S.
inline std::optional<MetricSpaceInstance> random_instance(Random& rnd, const FieldSpec& f,
                                                          const InstanceShape& shape = {}) {
  const std::size_t n = rnd.index(0, shape.max_n);
  const std::size_t m = rnd.index(0, n);
  const std::size_t d = m == 0 ? 0 : rnd.index(0, m);

  QuadFormCoeffs q(f, m);
  const bool symplectic = f.is_char_two() && rnd.coin();
  if (symplectic) {
    // hyperbolic pairs on the non-radical block, so its polar form is non-degenerate
    for (std::size_t i = d; i + 1 < m; i += 2) q.set_upper(i, i + 1, Scalar::one(f));
    for (std::size_t i = d; i < m; ++i) q.set_diag(i, rnd.scalar(f));
  } else {
    for (std::size_t i = d; i < m; ++i) {
      q.set_diag(i, rnd.scalar(f));
      for (std::size_t j = i + 1; j < m; ++j) q.set_upper(i, j, rnd.scalar(f));
    }
  }

  Matrix frame = rnd.invertible(f, n);
  std::vector<Vector> s_basis;
  for (std::size_t j = 0; j < m; ++j) s_basis.push_back(frame.column(j));
  auto inst = MetricSpaceInstance::make(f, n, s_basis, q);
  inst = change_of_basis(inst, rnd.invertible(f, m));
  if (!shape.allow_violation && !check_radical_condition(inst)) return std::nullopt;
  return inst;
}

inline MetricSpaceInstance random_valid_instance(Random& rnd, const FieldSpec& f, const InstanceShape& shape = {}) {
  for (;;) {
    if (auto inst = random_instance(rnd, f, shape)) return *inst;
  }
}

/// All vectors of F^k for a prime field, in lexicographic order.
inline void for_each_vector(const FieldSpec& f, std::size_t k, const std::function<void(const Vector&)>& fn) {
  Vector x = zero_vector(f, k);
  const std::uint64_t p = f.modulus();
  for (;;) {
    fn(x);
    std::size_t i = 0;
    for (; i < k; ++i) {
      if (x[i].residue() + 1 < p) {
        x[i] = x[i] + Scalar::one(f);
        break;
      }
      x[i] = Scalar::zero(f);
    }
    if (i == k) return;
  }
}

/// B(x, y) from Q alone, by polarization.
inline Scalar polar(const MetricSpaceInstance& inst, const Vector& x, const Vector& y) {
  return eval_q(inst, add(x, y)) - eval_q(inst, x) - eval_q(inst, y);
}

/// a* is B-linked to the vector with coordinates xc, checked on every basis vector.
inline bool linked_by_definition(const MetricSpaceInstance& inst, const Vector& a_star, const Vector& xc) {
  const auto& f = inst.field();
  for (std::size_t j = 0; j < inst.m(); ++j) {
    auto e = unit_vector(f, inst.m(), j);
    if (dot(f, a_star, inst.s_basis()[j]) != polar(inst, xc, e)) return false;
  }
  return true;
}

/// Q-hat at a dual vector, read from the dual instance.
inline Scalar eval_dual(const DualFormResult& dual, const Vector& a_star) {
  return eval_q(dual.dual_inst, dual.dual_inst.to_coords(a_star));
}

}  // namespace dualqf::testing

#endif  // DUALQF_TESTS_SUPPORT_HPP
