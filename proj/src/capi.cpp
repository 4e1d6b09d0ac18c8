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

#include "costmms/costmms.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "costmms/error.hpp"
#include "costmms/experiment.hpp"
#include "costmms/generate.hpp"
#include "costmms/json_io.hpp"
#include "costmms/laminar.hpp"
#include "costmms/mechanisms.hpp"
#include "costmms/strategy.hpp"
#include "costmms/three_agent.hpp"

struct cm_instance {
  costmms::Instance inst;
};

namespace {

using costmms::Errc;
using costmms::Error;

thread_local std::string last_error;

cm_status fail(cm_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <typename F>
cm_status guard(F&& body) {
  try {
    body();
    last_error.clear();
    return CM_OK;
  } catch (const Error& e) {
    return fail(static_cast<cm_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(CM_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(CM_INTERNAL, e.what());
  }
}

void require(const void* p, const char* name) {
  if (p == nullptr) throw Error(Errc::kInvalidParameter, std::string(name) + " must not be null");
}

char* copy_out(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

void emit(char** out, const std::string& text) {
  if (out != nullptr) *out = copy_out(text);
}

costmms::SearchBudget to_budget(const cm_budget* b) {
  if (b == nullptr) return {};
  return costmms::SearchBudget{b->max_goods, b->max_agents, b->node_limit};
}

void set_pass(int* pass, bool value) {
  if (pass != nullptr) *pass = value ? 1 : 0;
}

cm_instance* wrap(costmms::Instance inst) { return new cm_instance{std::move(inst)}; }

}  // namespace

extern "C" {

cm_budget cm_default_budget(void) {
  const costmms::SearchBudget b;
  return cm_budget{b.max_goods, b.max_agents, b.node_limit};
}

const char* cm_last_error(void) { return last_error.c_str(); }

const char* cm_status_name(cm_status status) {
  if (status == CM_OK) return "Ok";
  if (status < CM_NEGATIVE_COST || status > CM_INTERNAL) return "Unknown";
  return costmms::errc_name(static_cast<Errc>(status)).data();
}

void cm_string_free(char* s) { std::free(s); }

cm_status cm_instance_from_json(const char* json, cm_instance** out) {
  return guard([&] {
    require(json, "json");
    require(out, "out");
    *out = wrap(costmms::parse_instance(json));
  });
}

void cm_instance_free(cm_instance* inst) { delete inst; }

cm_status cm_instance_to_json(const cm_instance* inst, char** out) {
  return guard([&] {
    require(inst, "instance");
    require(out, "out");
    *out = copy_out(costmms::dump_instance(inst->inst));
  });
}

size_t cm_instance_num_agents(const cm_instance* inst) {
  return inst == nullptr ? 0 : inst->inst.num_agents();
}

size_t cm_instance_num_goods(const cm_instance* inst) {
  return inst == nullptr ? 0 : inst->inst.num_goods();
}

uint64_t cm_instance_hash(const cm_instance* inst) {
  return inst == nullptr ? 0 : costmms::instance_hash(inst->inst);
}

cm_status cm_gen_random(size_t n, size_t m, uint64_t max_cost, double density, uint64_t seed,
                        cm_instance** out) {
  return guard([&] {
    require(out, "out");
    *out = wrap(costmms::gen_random(n, m, max_cost, density, seed));
  });
}

cm_status cm_gen_laminar(size_t n, size_t m, uint64_t max_cost, size_t depth, uint64_t seed,
                         cm_instance** out) {
  return guard([&] {
    require(out, "out");
    *out = wrap(costmms::gen_laminar(n, m, max_cost, depth, seed));
  });
}

cm_status cm_mms_value(const cm_instance* inst, size_t agent, size_t k, const cm_budget* budget,
                       uint64_t* value) {
  return guard([&] {
    require(inst, "instance");
    require(value, "value");
    if (agent >= inst->inst.num_agents()) {
      throw Error(Errc::kInvalidParameter, "agent index out of range");
    }
    *value = costmms::mms_value(inst->inst, agent, k, to_budget(budget)).value;
  });
}

cm_status cm_mms_profile(const cm_instance* inst, const cm_budget* budget, char** json) {
  return guard([&] {
    require(inst, "instance");
    const auto profile = costmms::mms_profile(inst->inst, to_budget(budget));
    emit(json, costmms::mms_profile_json(inst->inst, profile).dump());
  });
}

cm_status cm_solve_three_agent(const cm_instance* inst, const cm_budget* budget,
                               char** allocation) {
  return guard([&] {
    require(inst, "instance");
    const auto alloc = costmms::solve_three(inst->inst, to_budget(budget));
    emit(allocation, costmms::dump_allocation(inst->inst, alloc));
  });
}

cm_status cm_solve_laminar(const cm_instance* inst, const cm_budget* budget, int repair,
                           char** allocation) {
  return guard([&] {
    require(inst, "instance");
    auto alloc = costmms::solve_laminar(inst->inst, to_budget(budget));
    if (repair) alloc = costmms::pareto_repair(inst->inst, std::move(alloc));
    emit(allocation, costmms::dump_allocation(inst->inst, alloc));
  });
}

cm_status cm_run_mechanism(const cm_instance* inst, const char* mechanism, char** allocation,
                           char** trace) {
  return guard([&] {
    require(inst, "instance");
    require(mechanism, "mechanism");
    const auto seq = costmms::named_sequence(inst->inst, mechanism);
    const auto run = costmms::run_sequential(inst->inst, seq);
    const std::string alloc = costmms::dump_allocation(inst->inst, run.result);
    const std::string lines = costmms::mechanism_trace_lines(inst->inst, run);
    emit(allocation, alloc);
    emit(trace, lines);
  });
}

cm_status cm_check_mms(const cm_instance* inst, const char* allocation, const cm_budget* budget,
                       int* pass, char** report) {
  return guard([&] {
    require(inst, "instance");
    require(allocation, "allocation");
    const auto alloc = costmms::parse_allocation(inst->inst, allocation);
    const auto profile = costmms::mms_profile(inst->inst, to_budget(budget));
    const auto result = costmms::verify_mms(inst->inst, alloc, profile);
    set_pass(pass, result.satisfied);
    emit(report, costmms::mms_report_json(inst->inst, result).dump());
  });
}

cm_status cm_check_po(const cm_instance* inst, const char* allocation, int* pass,
                      char** report) {
  return guard([&] {
    require(inst, "instance");
    require(allocation, "allocation");
    const auto alloc = costmms::parse_allocation(inst->inst, allocation);
    const auto result = costmms::is_pareto_efficient(inst->inst, alloc);
    set_pass(pass, result.efficient);
    emit(report, costmms::pareto_report_json(inst->inst, result).dump());
  });
}

cm_status cm_check_laminar(const cm_instance* inst, int* pass, char** report) {
  return guard([&] {
    require(inst, "instance");
    const auto result = costmms::is_laminar(inst->inst);
    set_pass(pass, result.laminar);
    emit(report, costmms::laminar_report_json(inst->inst, result).dump());
  });
}

cm_status cm_check_sp(const cm_instance* inst, const char* mechanism, int exhaustive,
                      const cm_budget* budget, int* pass, char** report) {
  return guard([&] {
    require(inst, "instance");
    require(mechanism, "mechanism");
    const auto mech = costmms::parse_mechanism(mechanism);
    const auto result =
        exhaustive ? costmms::audit_sp_exhaustive(inst->inst, mech, to_budget(budget))
                   : costmms::audit_sp(inst->inst, mech, costmms::MisreportScope::all(),
                                       to_budget(budget));
    set_pass(pass, result.strategyproof);
    emit(report, costmms::audit_report_json(inst->inst, result).dump());
  });
}

cm_status cm_replicate_prop3(int* pass, char** report) {
  return guard([&] {
    const auto cert = costmms::replicate_prop3();
    set_pass(pass, cert.unsatisfiable);
    emit(report, costmms::prop3_json(cert).dump());
  });
}

cm_status cm_run_experiment(const char* suite, const cm_experiment_config* config, int* pass,
                            char** report) {
  return guard([&] {
    require(suite, "suite");
    require(config, "config");
    costmms::RunConfig run;
    run.seed = config->seed;
    run.trials = config->trials;
    run.budget = to_budget(&config->budget);
    run.format = config->csv ? costmms::ReportFormat::kCsv : costmms::ReportFormat::kJson;
    run.timing = config->timing != 0;
    const auto result = costmms::run_experiment(run, suite);
    set_pass(pass, result.passed());
    emit(report, costmms::render_report(result, run.format));
  });
}

}  // extern "C"
