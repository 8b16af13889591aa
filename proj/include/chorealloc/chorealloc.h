// Copyright 2026 The Authors.
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

/*
 * C interface to the chore allocation solver.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns a ca_status; on
 * failure ca_last_error() describes the problem for the calling thread.
 * Strings returned through char** out-parameters are heap allocated and must
 * be released with ca_string_free.
 */

#ifndef CHOREALLOC_CHOREALLOC_H_
#define CHOREALLOC_CHOREALLOC_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(CHOREALLOC_BUILDING_LIBRARY)
#define CA_API __declspec(dllexport)
#else
#define CA_API __declspec(dllimport)
#endif
#else
#define CA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ca_status {
  CA_OK = 0,
  CA_ERR_INVALID_ARGUMENT = 1, /* null pointer, bad flag value, p < 1 */
  CA_ERR_PARSE = 2,            /* malformed document */
  CA_ERR_VALIDATION = 3,       /* well-formed but semantically invalid */
  CA_ERR_BUDGET = 4,           /* brute-force enumeration refused */
  CA_ERR_INTERNAL = 5,         /* post-run invariant or oracle failure */
} ca_status;

typedef enum ca_criterion {
  CA_CRITERION_LEXIMIN = 0,
  CA_CRITERION_MALFARE = 1,
  CA_CRITERION_USW = 2,
} ca_criterion;

typedef struct ca_instance ca_instance;
typedef struct ca_result ca_result;
typedef struct ca_verify_report ca_verify_report;

CA_API const char* ca_status_string(ca_status status);
CA_API const char* ca_last_error(void);
CA_API void ca_string_free(char* text);

/* Maps "leximin" / "malfare" / "usw". */
CA_API ca_status ca_criterion_from_name(const char* name, ca_criterion* out);

CA_API ca_status ca_instance_from_json(const char* text, ca_instance** out);
CA_API ca_status ca_instance_to_json(const ca_instance* instance, char** out);
CA_API size_t ca_instance_num_agents(const ca_instance* instance);
CA_API size_t ca_instance_num_chores(const ca_instance* instance);
CA_API void ca_instance_free(ca_instance* instance);

/* has_p = 0 means no exponent was given; malfare then fails with
 * CA_ERR_INVALID_ARGUMENT ("p required"). */
CA_API ca_status ca_solve(const ca_instance* instance, ca_criterion criterion,
                          int has_p, double p, int include_trace,
                          ca_result** out);
CA_API ca_status ca_result_to_json(const ca_result* result, char** out);
CA_API size_t ca_result_clean_size(const ca_result* result);
/* Cost c_i of agent i in the solved allocation; -1 if out of range. */
CA_API int64_t ca_result_agent_cost(const ca_result* result, size_t agent);
CA_API void ca_result_free(ca_result* result);

/* max_allocations = 0 selects the default budget. On CA_ERR_BUDGET the
 * required enumeration size is written to *required_budget when non-null. */
CA_API ca_status ca_verify(const ca_instance* instance, ca_criterion criterion,
                           int has_p, double p, uint64_t max_allocations,
                           uint64_t* required_budget, ca_verify_report** out);
CA_API int ca_verify_report_passed(const ca_verify_report* report);
CA_API ca_status ca_verify_report_text(const ca_verify_report* report,
                                       char** out);
CA_API void ca_verify_report_free(ca_verify_report* report);

typedef struct ca_gen_params {
  size_t num_agents;
  size_t num_chores;
  const char* families; /* comma separated; NULL selects the default */
  uint64_t weight_skew; /* 0 is treated as 1 */
  uint64_t seed;
} ca_gen_params;

CA_API ca_status ca_generate(const ca_gen_params* params, char** out);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif  /* CHOREALLOC_CHOREALLOC_H_ */
