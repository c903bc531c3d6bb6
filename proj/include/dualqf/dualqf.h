/* Copyright 2026 The dualqf Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface of libdualqf.
 *
 * A problem file is parsed into an opaque dqf_problem handle; subcommands run
 * against a handle and hand back a JSON document as a heap string owned by the
 * caller (release with dqf_string_free). Every entry point returns a
 * dqf_status; on failure dqf_last_error() describes the most recent error on
 * the calling thread.
 */

#ifndef DUALQF_DUALQF_H
#define DUALQF_DUALQF_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(DUALQF_BUILDING_LIBRARY)
#    define DQF_API __declspec(dllexport)
#  else
#    define DQF_API __declspec(dllimport)
#  endif
#else
#  define DQF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct dqf_problem dqf_problem;

typedef enum dqf_status {
  DQF_OK = 0,
  DQF_ERR_PARSE = 1,               /* malformed JSON, scalar or shape */
  DQF_ERR_VALIDATION = 2,          /* dependent S, bad index, non-prime modulus */
  DQF_ERR_RADICAL_CONDITION = 3,   /* Q does not vanish on the radical */
  DQF_ERR_NOT_IN_SUBSPACE = 4,
  DQF_ERR_NOT_IN_SHAT = 5,
  DQF_ERR_ISOTROPIC = 6,
  DQF_ERR_CHARACTERISTIC = 7,      /* operation needs a different characteristic */
  DQF_ERR_SINGULAR = 8,
  DQF_ERR_ZERO_RATIO = 9,
  DQF_ERR_USAGE = 10,              /* unknown command, missing section, null argument */
  DQF_ERR_INTERNAL = 11
} dqf_status;

/* Flags for dqf_run. */
#define DQF_FLAG_HALF_GRAM 1u

DQF_API const char* dqf_version(void);
DQF_API const char* dqf_status_string(dqf_status status);
/* Message of the last failed call on this thread; "" if none. */
DQF_API const char* dqf_last_error(void);
/* Process exit code for a status: 0 ok, 2 radical condition, 1 otherwise. */
DQF_API int dqf_exit_code(dqf_status status);

/* field_override may be NULL; otherwise a descriptor such as "Q" or "GF(3)". */
DQF_API dqf_status dqf_problem_parse(const char* json_text, const char* field_override, dqf_problem** out);
DQF_API void dqf_problem_free(dqf_problem* problem);
DQF_API dqf_status dqf_problem_dims(const dqf_problem* problem, size_t* n, size_t* m);
DQF_API dqf_status dqf_problem_serialize(const dqf_problem* problem, char** out_json);

DQF_API dqf_status dqf_check_condition(const dqf_problem* problem, int* holds);
DQF_API dqf_status dqf_double_dual(const dqf_problem* problem, int* equal);

/* Runs one subcommand ("radical", "dualize", ...) and returns its document. */
DQF_API dqf_status dqf_run(const dqf_problem* problem, const char* command, unsigned flags, char** out_json);
/* NULL-terminated list of subcommand names; static storage. */
DQF_API const char* const* dqf_command_names(void);

DQF_API void dqf_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* DUALQF_DUALQF_H */
