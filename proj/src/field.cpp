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

#include "dualqf/field.hpp"

#include <cctype>
#include <charconv>

namespace dualqf {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::CharTwo: return "CharTwo";
    case Errc::NotCharTwo: return "NotCharTwo";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::Singular: return "Singular";
    case Errc::NotNested: return "NotNested";
    case Errc::NotInSubspace: return "NotInSubspace";
    case Errc::NotInSHat: return "NotInSHat";
    case Errc::NotAdapted: return "NotAdapted";
    case Errc::RadicalConditionViolated: return "RadicalConditionViolated";
    case Errc::IsotropicVector: return "IsotropicVector";
    case Errc::ZeroRatio: return "ZeroRatio";
    case Errc::ParseError: return "ParseError";
    case Errc::ValidationError: return "ValidationError";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t p) noexcept {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p < 2 || p >= kMaxPrime) {
    throw Error(Errc::InvalidArgument, "prime modulus must lie in [2, 2^31), got " + std::to_string(p));
  }
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  return FieldSpec(FieldKind::Prime, p);
}

FieldSpec make_field(FieldKind kind, std::optional<std::uint64_t> p) {
  if (kind == FieldKind::Rational) return FieldSpec::rational();
  if (!p) throw Error(Errc::InvalidArgument, "prime field requires a modulus");
  return FieldSpec::prime(*p);
}

std::string FieldSpec::name() const {
  if (kind_ == FieldKind::Rational) return "Q";
  return "GF(" + std::to_string(p_) + ")";
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_decimal_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  if (!is_decimal_integer(s)) {
    throw Error(Errc::ParseError, "malformed scalar \"" + std::string(whole) + "\"");
  }
  if (s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

std::uint64_t reduce(const mpz_class& value, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), p);
  return r.get_ui();
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = result * base % p;
    base = base * base % p;
    exp >>= 1U;
  }
  return result;
}

}  // namespace

FieldSpec FieldSpec::parse(std::string_view text) {
  auto t = trim(text);
  if (t == "Q" || t == "QQ" || t == "rational") return rational();
  if (t.substr(0, 2) == "GF") {
    auto rest = trim(t.substr(2));
    if (!rest.empty() && rest.front() == '(' && rest.back() == ')') {
      rest = trim(rest.substr(1, rest.size() - 2));
    }
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), p);
    if (ec == std::errc() && ptr == rest.data() + rest.size() && !rest.empty()) {
      return prime(p);
    }
  }
  throw Error(Errc::ParseError, "unknown field descriptor \"" + std::string(text) + "\"");
}

Scalar Scalar::zero(const FieldSpec& field) {
  Scalar s;
  s.field_ = field;
  return s;
}

Scalar Scalar::one(const FieldSpec& field) { return from_int(field, 1); }

Scalar Scalar::from_int(const FieldSpec& field, std::int64_t value) {
  return from_mpz(field, mpz_class(static_cast<long>(value)));
}

Scalar Scalar::from_mpz(const FieldSpec& field, const mpz_class& value) {
  Scalar s = zero(field);
  if (field.kind() == FieldKind::Rational) {
    s.num_ = value;
  } else {
    s.residue_ = reduce(value, field.modulus());
  }
  return s;
}

Scalar Scalar::from_fraction(const FieldSpec& field, const mpz_class& num, const mpz_class& den) {
  if (field.kind() == FieldKind::Rational) {
    if (den == 0) throw Error(Errc::DivisionByZero, "zero denominator");
    Scalar s = zero(field);
    s.num_ = num;
    s.den_ = den;
    s.normalize();
    return s;
  }
  return from_mpz(field, num) / from_mpz(field, den);
}

Scalar Scalar::parse(const FieldSpec& field, std::string_view text) {
  auto t = trim(text);
  auto slash = t.find('/');
  if (slash == std::string_view::npos) return from_mpz(field, parse_integer(t, text));
  auto num = parse_integer(trim(t.substr(0, slash)), text);
  auto den = parse_integer(trim(t.substr(slash + 1)), text);
  if (den == 0 || (field.kind() == FieldKind::Prime && reduce(den, field.modulus()) == 0)) {
    throw Error(Errc::ParseError, "zero denominator in \"" + std::string(text) + "\"");
  }
  return from_fraction(field, num, den);
}

bool Scalar::is_zero() const noexcept {
  return field_.kind() == FieldKind::Rational ? num_ == 0 : residue_ == 0;
}

bool Scalar::is_one() const noexcept {
  return field_.kind() == FieldKind::Rational ? (num_ == 1 && den_ == 1) : residue_ == 1;
}

std::string Scalar::to_string() const {
  if (field_.kind() == FieldKind::Prime) return std::to_string(residue_);
  if (den_ == 1) return num_.get_str();
  return num_.get_str() + "/" + den_.get_str();
}

void Scalar::require_same_field(const Scalar& other) const {
  if (field_ != other.field_) {
    throw Error(Errc::FieldMismatch, "cannot combine " + field_.name() + " with " + other.field_.name());
  }
}

void Scalar::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  if (g > 1) {
    mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
  if (num_ == 0) den_ = 1;
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (field_.kind() == FieldKind::Rational) {
    s.num_ = -num_;
  } else if (residue_ != 0) {
    s.residue_ = field_.modulus() - residue_;
  }
  return s;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_field(rhs);
  if (field_.kind() == FieldKind::Prime) {
    residue_ = (residue_ + rhs.residue_) % field_.modulus();
    return *this;
  }
  if (den_ == 1 && rhs.den_ == 1) {
    num_ += rhs.num_;
    return *this;
  }
  num_ = num_ * rhs.den_ + rhs.num_ * den_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_field(rhs);
  if (field_.kind() == FieldKind::Prime) {
    residue_ = residue_ * rhs.residue_ % field_.modulus();
    return *this;
  }
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  if (den_ != 1) normalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) { return *this *= invert(rhs); }

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.field_ != b.field_) return false;
  if (a.field_.kind() == FieldKind::Prime) return a.residue_ == b.residue_;
  return a.num_ == b.num_ && a.den_ == b.den_;
}

Scalar invert(const Scalar& a) {
  if (a.is_zero()) throw Error(Errc::DivisionByZero, "zero has no inverse");
  const auto& field = a.field();
  if (field.kind() == FieldKind::Prime) {
    // Fermat: a^(p-2) = a^-1 for prime p.
    return Scalar::from_int(field, static_cast<std::int64_t>(pow_mod(a.residue(), field.modulus() - 2, field.modulus())));
  }
  return Scalar::from_fraction(field, a.denominator(), a.numerator());
}

Scalar halve(const Scalar& a) {
  if (a.field().is_char_two()) throw Error(Errc::CharTwo, "cannot halve in characteristic 2");
  return a / Scalar::from_int(a.field(), 2);
}

}  // namespace dualqf
