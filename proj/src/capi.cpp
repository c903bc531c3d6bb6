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

#include "dualqf/dualqf.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <vector>

#include "dualqf/dualize.hpp"
#include "dualqf/problem.hpp"

struct dqf_problem {
  dualqf::ProblemFile file;
};

namespace {

thread_local std::string last_error;

dqf_status status_for(dualqf::Errc code) {
  using dualqf::Errc;
  switch (code) {
    case Errc::ParseError: return DQF_ERR_PARSE;
    case Errc::ValidationError:
    case Errc::NotPrime:
    case Errc::FieldMismatch:
    case Errc::DimensionMismatch:
    case Errc::LengthMismatch: return DQF_ERR_VALIDATION;
    case Errc::RadicalConditionViolated: return DQF_ERR_RADICAL_CONDITION;
    case Errc::NotInSubspace:
    case Errc::NotNested: return DQF_ERR_NOT_IN_SUBSPACE;
    case Errc::NotInSHat: return DQF_ERR_NOT_IN_SHAT;
    case Errc::IsotropicVector: return DQF_ERR_ISOTROPIC;
    case Errc::CharTwo:
    case Errc::NotCharTwo: return DQF_ERR_CHARACTERISTIC;
    case Errc::Singular:
    case Errc::DivisionByZero: return DQF_ERR_SINGULAR;
    case Errc::ZeroRatio: return DQF_ERR_ZERO_RATIO;
    case Errc::InvalidArgument:
    case Errc::NotAdapted: return DQF_ERR_USAGE;
  }
  return DQF_ERR_INTERNAL;
}

template <class Fn>
dqf_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    fn();
    return DQF_OK;
  } catch (const dualqf::Error& e) {
    last_error = std::string(dualqf::errc_name(e.code())) + ": " + e.what();
    return status_for(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown failure";
  }
  return DQF_ERR_INTERNAL;
}

dqf_status usage(const char* what) {
  last_error = what;
  return DQF_ERR_USAGE;
}

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* dqf_version(void) { return DUALQF_VERSION; }

const char* dqf_status_string(dqf_status status) {
  switch (status) {
    case DQF_OK: return "ok";
    case DQF_ERR_PARSE: return "parse error";
    case DQF_ERR_VALIDATION: return "validation error";
    case DQF_ERR_RADICAL_CONDITION: return "radical condition violated";
    case DQF_ERR_NOT_IN_SUBSPACE: return "vector not in subspace";
    case DQF_ERR_NOT_IN_SHAT: return "linear form does not annihilate the radical";
    case DQF_ERR_ISOTROPIC: return "isotropic vector";
    case DQF_ERR_CHARACTERISTIC: return "unsupported characteristic";
    case DQF_ERR_SINGULAR: return "singular";
    case DQF_ERR_ZERO_RATIO: return "zero ratio";
    case DQF_ERR_USAGE: return "usage error";
    case DQF_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* dqf_last_error(void) { return last_error.c_str(); }

int dqf_exit_code(dqf_status status) {
  if (status == DQF_OK) return 0;
  return status == DQF_ERR_RADICAL_CONDITION ? 2 : 1;
}

dqf_status dqf_problem_parse(const char* json_text, const char* field_override, dqf_problem** out) {
  if (!json_text || !out) return usage("dqf_problem_parse: null argument");
  *out = nullptr;
  return guarded([&] {
    std::optional<dualqf::FieldSpec> field;
    if (field_override) field = dualqf::FieldSpec::parse(field_override);
    *out = new dqf_problem{dualqf::parse_problem(json_text, field)};
  });
}

void dqf_problem_free(dqf_problem* problem) { delete problem; }

dqf_status dqf_problem_dims(const dqf_problem* problem, size_t* n, size_t* m) {
  if (!problem || !n || !m) return usage("dqf_problem_dims: null argument");
  *n = problem->file.instance.n();
  *m = problem->file.instance.m();
  return DQF_OK;
}

dqf_status dqf_problem_serialize(const dqf_problem* problem, char** out_json) {
  if (!problem || !out_json) return usage("dqf_problem_serialize: null argument");
  *out_json = nullptr;
  return guarded([&] { *out_json = copy_out(dualqf::serialize_problem(problem->file)); });
}

dqf_status dqf_check_condition(const dqf_problem* problem, int* holds) {
  if (!problem || !holds) return usage("dqf_check_condition: null argument");
  return guarded([&] { *holds = dualqf::check_radical_condition(problem->file.instance) ? 1 : 0; });
}

dqf_status dqf_double_dual(const dqf_problem* problem, int* equal) {
  if (!problem || !equal) return usage("dqf_double_dual: null argument");
  return guarded([&] { *equal = dualqf::double_dual_check(problem->file.instance) ? 1 : 0; });
}

dqf_status dqf_run(const dqf_problem* problem, const char* command, unsigned flags, char** out_json) {
  if (!problem || !command || !out_json) return usage("dqf_run: null argument");
  *out_json = nullptr;
  return guarded([&] {
    dualqf::RunOptions options;
    options.half_gram = (flags & DQF_FLAG_HALF_GRAM) != 0;
    *out_json = copy_out(dualqf::run_command(problem->file, command, options));
  });
}

const char* const* dqf_command_names(void) {
  static const std::vector<const char*> names = [] {
    std::vector<const char*> v;
    for (const auto& s : dualqf::command_names()) v.push_back(s.c_str());
    v.push_back(nullptr);
    return v;
  }();
  return names.data();
}

void dqf_string_free(char* s) { std::free(s); }

}  // extern "C"
