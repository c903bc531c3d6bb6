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

#ifndef DUALQF_ERROR_HPP
#define DUALQF_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace dualqf {

/// Failure categories raised by the library. Each one maps onto a stable
/// status code of the C interface (see dualqf.h).
enum class Errc {
  NotPrime,
  DivisionByZero,
  CharTwo,
  NotCharTwo,
  FieldMismatch,
  DimensionMismatch,
  LengthMismatch,
  Singular,
  NotNested,
  NotInSubspace,
  NotInSHat,
  NotAdapted,
  RadicalConditionViolated,
  IsotropicVector,
  ZeroRatio,
  ParseError,
  ValidationError,
  InvalidArgument,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace dualqf

#endif  // DUALQF_ERROR_HPP
