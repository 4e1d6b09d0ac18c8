// Copyright 2026 The costmms Authors
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

// Exercises the shared library through its C header only.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "costmms/costmms.h"

namespace {

const char* kFive = R"({"goods":[{"id":"g2","cost":2},{"id":"g3","cost":3},{"id":"g4","cost":4},
  {"id":"g5","cost":5},{"id":"g6","cost":6}],
  "agents":[{"id":"a1","approves":["g2","g3","g4","g5","g6"]},
            {"id":"a2","approves":["g2","g3","g4","g5","g6"]}]})";

std::string take(char* s) {
  std::string out = s == nullptr ? "" : s;
  cm_string_free(s);
  return out;
}

TEST_CASE("instance handles") {
  cm_instance* inst = nullptr;
  REQUIRE(cm_instance_from_json(kFive, &inst) == CM_OK);
  CHECK(cm_instance_num_agents(inst) == 2);
  CHECK(cm_instance_num_goods(inst) == 5);
  char* json = nullptr;
  REQUIRE(cm_instance_to_json(inst, &json) == CM_OK);
  const std::string text = take(json);
  cm_instance* again = nullptr;
  REQUIRE(cm_instance_from_json(text.c_str(), &again) == CM_OK);
  CHECK(cm_instance_hash(again) == cm_instance_hash(inst));
  cm_instance_free(again);
  cm_instance_free(inst);
  cm_instance_free(nullptr);
}

TEST_CASE("errors carry status and message") {
  cm_instance* inst = nullptr;
  CHECK(cm_instance_from_json("{\"goods\":[{\"id\":\"a\",\"cost\":-1}],\"agents\":[{\"id\":\"1\",\"approves\":[]}]}", &inst) ==
        CM_NEGATIVE_COST);
  CHECK(inst == nullptr);
  CHECK(std::string(cm_last_error()).size() > 0);
  CHECK(std::string(cm_status_name(CM_NEGATIVE_COST)) == "NegativeCost");
  CHECK(std::string(cm_status_name(CM_OK)) == "Ok");
  CHECK(cm_instance_from_json("not json", &inst) == CM_PARSE_ERROR);
  CHECK(cm_instance_from_json(nullptr, &inst) == CM_INVALID_PARAMETER);
  CHECK(cm_gen_random(0, 3, 1, 0.5, 1, &inst) == CM_INVALID_PARAMETER);
  CHECK(cm_run_experiment("nope", nullptr, nullptr, nullptr) == CM_INVALID_PARAMETER);
  cm_experiment_config config{1, 0, cm_default_budget(), 0, 0};
  CHECK(cm_run_experiment("nope", &config, nullptr, nullptr) == CM_UNKNOWN_SUITE);
}

TEST_CASE("shares, solvers and checks") {
  cm_instance* inst = nullptr;
  REQUIRE(cm_instance_from_json(kFive, &inst) == CM_OK);
  const cm_budget budget = cm_default_budget();
  uint64_t value = 0;
  REQUIRE(cm_mms_value(inst, 0, 2, &budget, &value) == CM_OK);
  CHECK(value == 10);
  CHECK(cm_mms_value(inst, 5, 2, &budget, &value) == CM_INVALID_PARAMETER);

  char* profile = nullptr;
  REQUIRE(cm_mms_profile(inst, &budget, &profile) == CM_OK);
  CHECK(take(profile).find("\"mms\":10") != std::string::npos);

  CHECK(cm_solve_three_agent(inst, &budget, nullptr) == CM_WRONG_AGENT_COUNT);

  char* alloc = nullptr;
  REQUIRE(cm_solve_laminar(inst, &budget, 1, &alloc) == CM_OK);
  const std::string allocation = take(alloc);
  int pass = 0;
  char* report = nullptr;
  REQUIRE(cm_check_mms(inst, allocation.c_str(), &budget, &pass, &report) == CM_OK);
  CHECK(pass == 1);
  take(report);
  REQUIRE(cm_check_po(inst, allocation.c_str(), &pass, nullptr) == CM_OK);
  CHECK(pass == 1);

  const char* uneven = R"({"bundles":{"a1":["g2","g3"],"a2":["g4","g5","g6"]}})";
  REQUIRE(cm_check_mms(inst, uneven, &budget, &pass, &report) == CM_OK);
  CHECK(pass == 0);
  CHECK(take(report).find("\"required\":10") != std::string::npos);
  CHECK(cm_check_mms(inst, R"({"bundles":{"a1":["zz"],"a2":[]}})", &budget, &pass, nullptr) ==
        CM_UNKNOWN_GOOD_IN_BUNDLE);

  REQUIRE(cm_check_laminar(inst, &pass, nullptr) == CM_OK);
  CHECK(pass == 1);
  REQUIRE(cm_check_sp(inst, "prop1", 0, &budget, &pass, nullptr) == CM_OK);
  CHECK(pass == 1);
  CHECK(cm_check_sp(inst, "bogus", 0, &budget, &pass, nullptr) == CM_INVALID_PARAMETER);

  char* trace = nullptr;
  REQUIRE(cm_run_mechanism(inst, "seq:1,2,2,1", &alloc, &trace) == CM_OK);
  take(alloc);
  CHECK(take(trace).find("{\"agent\":1,\"good\":\"g6\",\"turn\":1}") == 0);
  CHECK(cm_run_mechanism(inst, "seq:3", nullptr, nullptr) == CM_INVALID_SEQUENCE_INDEX);
  cm_instance_free(inst);
}

TEST_CASE("generators, certificate and experiments") {
  cm_instance* a = nullptr;
  cm_instance* b = nullptr;
  REQUIRE(cm_gen_laminar(4, 8, 9, 2, 3, &a) == CM_OK);
  REQUIRE(cm_gen_laminar(4, 8, 9, 2, 3, &b) == CM_OK);
  CHECK(cm_instance_hash(a) == cm_instance_hash(b));
  int pass = 0;
  REQUIRE(cm_check_laminar(a, &pass, nullptr) == CM_OK);
  CHECK(pass == 1);
  cm_instance_free(a);
  cm_instance_free(b);

  char* cert = nullptr;
  REQUIRE(cm_replicate_prop3(&pass, &cert) == CM_OK);
  CHECK(pass == 1);
  CHECK(take(cert).find("UNSAT certified") != std::string::npos);

  cm_experiment_config config{7, 5, cm_default_budget(), 1, 0};
  char* report = nullptr;
  REQUIRE(cm_run_experiment("thm1", &config, &pass, &report) == CM_OK);
  CHECK(pass == 1);
  CHECK(take(report).rfind("trial,instance_hash,pass,values\n", 0) == 0);
}

}  // namespace
