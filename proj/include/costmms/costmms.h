/*
 * Copyright 2026 The costmms Authors
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

/* C interface to the costmms library.
 *
 * Instances are opaque handles. Every function that can fail returns a
 * cm_status; on failure cm_last_error() describes the problem for the
 * calling thread. Strings returned through char** are JSON (or JSON lines)
 * owned by the caller and released with cm_string_free. Agent positions
 * are 0-based and follow the order of the instance's "agents" array.
 */

#ifndef COSTMMS_COSTMMS_H_
#define COSTMMS_COSTMMS_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CM_API __declspec(dllexport)
#else
#define CM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cm_status {
  CM_OK = 0,
  CM_NEGATIVE_COST = 1,
  CM_DUPLICATE_GOOD_ID = 2,
  CM_UNKNOWN_GOOD_IN_APPROVAL = 3,
  CM_EMPTY_AGENT_LIST = 4,
  CM_UNKNOWN_GOOD_IN_BUNDLE = 5,
  CM_INSTANCE_TOO_LARGE = 6,
  CM_WRONG_AGENT_COUNT = 7,
  CM_SELECTION_IMPOSSIBLE = 8,
  CM_NOT_LAMINAR = 9,
  CM_RECURSION_LIMIT = 10,
  CM_INVALID_SEQUENCE_INDEX = 11,
  CM_WRONG_GOODS_COUNT = 12,
  CM_TOO_FEW_AGENTS = 13,
  CM_DEGENERATE_RANK = 14,
  CM_INVALID_PARAMETER = 15,
  CM_UNKNOWN_SUITE = 16,
  CM_PARSE_ERROR = 17,
  CM_INVALID_ALLOCATION = 18,
  CM_DUPLICATE_AGENT_ID = 19,
  CM_TOO_MANY_GOODS = 20,
  CM_TOO_FEW_APPROVALS = 21,
  CM_INTERNAL = 22
} cm_status;

typedef struct cm_instance cm_instance;

typedef struct cm_budget {
  size_t max_goods;
  size_t max_agents;
  uint64_t node_limit;
} cm_budget;

typedef struct cm_experiment_config {
  uint64_t seed;
  size_t trials;
  cm_budget budget;
  int csv;    /* nonzero: CSV instead of JSON */
  int timing; /* nonzero: add a runtime column */
} cm_experiment_config;

CM_API cm_budget cm_default_budget(void);

/* Message for the last failed call on this thread; "" if none. */
CM_API const char* cm_last_error(void);
/* Upper camel case name, e.g. "NegativeCost". */
CM_API const char* cm_status_name(cm_status status);
CM_API void cm_string_free(char* s);

CM_API cm_status cm_instance_from_json(const char* json, cm_instance** out);
CM_API void cm_instance_free(cm_instance* inst);
CM_API cm_status cm_instance_to_json(const cm_instance* inst, char** out);
CM_API size_t cm_instance_num_agents(const cm_instance* inst);
CM_API size_t cm_instance_num_goods(const cm_instance* inst);
CM_API uint64_t cm_instance_hash(const cm_instance* inst);

CM_API cm_status cm_gen_random(size_t n, size_t m, uint64_t max_cost, double density,
                               uint64_t seed, cm_instance** out);
CM_API cm_status cm_gen_laminar(size_t n, size_t m, uint64_t max_cost, size_t depth,
                                uint64_t seed, cm_instance** out);

/* Maximin share of one agent over k bundles. */
CM_API cm_status cm_mms_value(const cm_instance* inst, size_t agent, size_t k,
                              const cm_budget* budget, uint64_t* value);
/* Every agent's share with k = n, plus witness partitions. */
CM_API cm_status cm_mms_profile(const cm_instance* inst, const cm_budget* budget, char** json);

/* Both return {"bundles": {...}}. */
CM_API cm_status cm_solve_three_agent(const cm_instance* inst, const cm_budget* budget,
                                      char** allocation);
CM_API cm_status cm_solve_laminar(const cm_instance* inst, const cm_budget* budget, int repair,
                                  char** allocation);

/* mechanism: "prop1", "prop2" or "seq:<1-based csv>". `trace` receives one
 * JSON object per line. Either output pointer may be NULL. */
CM_API cm_status cm_run_mechanism(const cm_instance* inst, const char* mechanism,
                                  char** allocation, char** trace);

/* Checks set *pass to 0 or 1 and write a JSON report. */
CM_API cm_status cm_check_mms(const cm_instance* inst, const char* allocation,
                              const cm_budget* budget, int* pass, char** report);
CM_API cm_status cm_check_po(const cm_instance* inst, const char* allocation, int* pass,
                             char** report);
CM_API cm_status cm_check_laminar(const cm_instance* inst, int* pass, char** report);
/* exhaustive = 0 audits the instance's own profile; otherwise every profile
 * over its goods and agent count. */
CM_API cm_status cm_check_sp(const cm_instance* inst, const char* mechanism, int exhaustive,
                             const cm_budget* budget, int* pass, char** report);

CM_API cm_status cm_replicate_prop3(int* pass, char** report);

CM_API cm_status cm_run_experiment(const char* suite, const cm_experiment_config* config,
                                   int* pass, char** report);

#ifdef __cplusplus
}
#endif

#endif /* COSTMMS_COSTMMS_H_ */
