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
 * @file field.hpp
 * @brief Exact scalar arithmetic over the rationals and over prime fields GF(p).
 *
 * A FieldSpec names the field; a Scalar carries its FieldSpec along with a
 * canonical value, so equality of scalars is plain structural equality:
 *
 * - rationals are kept in lowest terms with a positive denominator,
 * - residues are kept in [0, p).
 *
 * Mixing scalars of different fields throws Errc::FieldMismatch.
 *
 * @code{.cpp}
 * auto f5 = dualqf::make_field(dualqf::FieldKind::Prime, 5);
 * auto a = dualqf::Scalar::from_int(f5, 2);
 * auto b = dualqf::invert(a);  // 3
 * @endcode
 */

#ifndef DUALQF_FIELD_HPP
#define DUALQF_FIELD_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "dualqf/error.hpp"

namespace dualqf {

enum class FieldKind { Rational, Prime };

/// Upper bound (exclusive) on the prime modulus.
inline constexpr std::uint64_t kMaxPrime = std::uint64_t{1} << 31;

class FieldSpec {
 public:
  /// The rational numbers.
  FieldSpec() = default;

  static FieldSpec rational() { return FieldSpec{}; }
  /// Throws NotPrime for composite p, InvalidArgument for p < 2 or p >= 2^31.
  static FieldSpec prime(std::uint64_t p);

  FieldKind kind() const noexcept { return kind_; }
  /// Modulus of a prime field; 0 for the rationals.
  std::uint64_t modulus() const noexcept { return p_; }
  std::uint64_t characteristic() const noexcept { return kind_ == FieldKind::Rational ? 0 : p_; }
  bool is_char_two() const noexcept { return characteristic() == 2; }

  /// "Q" or "GF(p)".
  std::string name() const;
  /// Inverse of name(). Accepts "Q", "rational", "GF(p)" and "GF p". Throws ParseError.
  static FieldSpec parse(std::string_view text);

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(FieldKind kind, std::uint64_t p) : kind_(kind), p_(p) {}

  FieldKind kind_ = FieldKind::Rational;
  std::uint64_t p_ = 0;
};

/// Validated field construction; p is ignored for the rationals.
FieldSpec make_field(FieldKind kind, std::optional<std::uint64_t> p = std::nullopt);

/// Deterministic trial division.
bool is_prime(std::uint64_t p) noexcept;

class Scalar {
 public:
  /// Rational zero.
  Scalar() = default;

  static Scalar zero(const FieldSpec& field);
  static Scalar one(const FieldSpec& field);
  static Scalar from_int(const FieldSpec& field, std::int64_t value);
  static Scalar from_mpz(const FieldSpec& field, const mpz_class& value);
  /// num/den reduced into the field. Throws DivisionByZero when den maps to 0.
  static Scalar from_fraction(const FieldSpec& field, const mpz_class& num, const mpz_class& den);
  /// Decimal "num", "num/den" (surrounding blanks allowed). Throws ParseError.
  static Scalar parse(const FieldSpec& field, std::string_view text);

  const FieldSpec& field() const noexcept { return field_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// Only meaningful for rationals.
  const mpz_class& numerator() const noexcept { return num_; }
  const mpz_class& denominator() const noexcept { return den_; }
  /// Only meaningful for prime fields.
  std::uint64_t residue() const noexcept { return residue_; }

  /// Canonical text: "-3/2", "4", or a decimal residue.
  std::string to_string() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  void require_same_field(const Scalar& other) const;
  void normalize();

  FieldSpec field_;
  mpz_class num_ = 0;
  mpz_class den_ = 1;
  std::uint64_t residue_ = 0;
};

/// Multiplicative inverse. Throws DivisionByZero for 0.
Scalar invert(const Scalar& a);

/// a/2. Throws CharTwo over fields of characteristic 2.
Scalar halve(const Scalar& a);

/// a^2
inline Scalar square(const Scalar& a) { return a * a; }

}  // namespace dualqf

#endif  // DUALQF_FIELD_HPP
