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

#include "costmms/experiment.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "costmms/error.hpp"
#include "costmms/generate.hpp"
#include "costmms/json_io.hpp"
#include "costmms/laminar.hpp"
#include "costmms/mechanisms.hpp"
#include "costmms/strategy.hpp"
#include "costmms/three_agent.hpp"

namespace costmms {
namespace {

struct Outcome {
  std::uint64_t hash = 0;
  bool pass = false;
  std::vector<std::uint64_t> values;
};

using Trial = std::function<Outcome(Rng&, const SearchBudget&)>;

// MMS values followed by received values.
Outcome judge(const Instance& inst, const Allocation& alloc, const SearchBudget& budget) {
  Outcome out;
  out.hash = instance_hash(inst);
  const MmsProfile mms = mms_profile(inst, budget);
  out.pass = verify_mms(inst, alloc, mms).satisfied && is_pareto_efficient(inst, alloc).efficient;
  out.values = mms.values;
  for (AgentIndex a = 0; a < inst.num_agents(); ++a) {
    out.values.push_back(inst.value(a, alloc.bundles[a]));
  }
  return out;
}

Outcome thm1_trial(Rng& rng, const SearchBudget& budget) {
  static constexpr std::array<double, 3> kDensity = {0.3, 0.6, 1.0};
  const std::size_t m = rng.uniform(0, 8);
  const double density = kDensity[rng.uniform(0, 2)];
  const Instance inst = gen_random(3, m, 20, density, rng.next());
  return judge(inst, solve_three(inst, budget), budget);
}

Outcome thm2_trial(Rng& rng, const SearchBudget& budget) {
  const std::size_t n = rng.uniform(1, 5), m = rng.uniform(0, 10), depth = rng.uniform(1, 3);
  const Instance inst = gen_laminar(n, m, 20, depth, rng.next());
  return judge(inst, pareto_repair(inst, solve_laminar(inst, budget)), budget);
}

// Values: honest value per agent, then the number of deviations tried.
Outcome prop1_trial(Rng& rng, const SearchBudget& budget) {
  const std::size_t n = rng.uniform(1, 3), m = rng.uniform(0, 6);
  const double density = static_cast<double>(rng.uniform(0, 10)) / 10.0;
  const Instance inst = gen_random(n, m, 10, density, rng.next());
  const Mechanism mech = prop1_mechanism();
  const Allocation alloc = mech(inst, inst.approval_profile());
  const AuditReport audit = audit_sp(inst, mech, MisreportScope::all(), budget);
  Outcome out;
  out.hash = instance_hash(inst);
  out.pass = audit.strategyproof && is_pareto_efficient(inst, alloc).efficient;
  for (AgentIndex a = 0; a < n; ++a) out.values.push_back(inst.value(a, alloc.bundles[a]));
  out.values.push_back(audit.deviations_checked);
  return out;
}

Outcome prop2_trial(Rng& rng, const SearchBudget& budget) {
  static constexpr std::array<std::int64_t, 4> kCosts = {1, 2, 3, 5};
  const std::size_t n = rng.uniform(2, 3), m = n + 2;
  const double density = static_cast<double>(rng.uniform(0, 10)) / 10.0;
  RawInstance raw = gen_random(n, m, 0, density, rng.next()).to_raw();
  for (RawGood& g : raw.goods) g.cost = kCosts[rng.uniform(0, kCosts.size() - 1)];
  const Instance inst = Instance::validate(raw);
  const Mechanism mech = prop2_mechanism();
  Outcome out = judge(inst, mech(inst, inst.approval_profile()), budget);
  out.pass = out.pass && audit_sp(inst, mech, MisreportScope::all(), budget).strategyproof;
  return out;
}

// Witness soundness, the n-th share upper bound, scale invariance for
// lambda in {2, 7}, and the bounds on adding a set S of approved goods.
Outcome oracle_trial(Rng& rng, const SearchBudget& budget) {
  const std::size_t n = rng.uniform(1, 4), m = rng.uniform(0, 8);
  const double density = static_cast<double>(rng.uniform(0, 10)) / 10.0;
  const Instance inst = gen_random(n, m, 20, density, rng.next());
  const MmsProfile mms = mms_profile(inst, budget);
  Outcome out;
  out.hash = instance_hash(inst);
  out.values = mms.values;
  out.pass = true;
  for (AgentIndex a = 0; a < n; ++a) {
    const GoodSet approved = inst.approvals(a);
    GoodSet covered;
    Value least = std::numeric_limits<Value>::max();
    for (GoodSet b : mms.witnesses[a]) {
      out.pass = out.pass && (covered & b).empty();
      covered |= b;
      least = std::min(least, inst.cost(b));
    }
    out.pass = out.pass && mms.witnesses[a].size() == n && covered == approved &&
               least == mms.values[a] && mms.values[a] * n <= inst.cost(approved);

    GoodSet extra;
    for (GoodIndex g : approved) {
      if (rng.bernoulli(0.3)) extra.insert(g);
    }
    const Value base = maximin_partition(inst, approved - extra, n, budget).value;
    out.pass = out.pass && base <= mms.values[a] && mms.values[a] <= base + inst.cost(extra);
  }
  for (std::int64_t lambda : {2, 7}) {
    RawInstance raw = inst.to_raw();
    for (RawGood& g : raw.goods) g.cost *= lambda;
    const Instance scaled = Instance::validate(raw);
    const MmsProfile scaled_mms = mms_profile(scaled, budget);
    for (AgentIndex a = 0; a < n; ++a) {
      out.pass = out.pass && scaled_mms.values[a] == mms.values[a] * static_cast<Value>(lambda);
    }
  }
  return out;
}

const std::vector<std::pair<std::string, Trial>>& trial_suites() {
  static const std::vector<std::pair<std::string, Trial>> suites = {
      {"thm1", thm1_trial},     {"thm2", thm2_trial},     {"prop1-sp", prop1_trial},
      {"prop2", prop2_trial},   {"oracle-props", oracle_trial},
  };
  return suites;
}

ExperimentReport run_prop3(const RunConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  const Prop3Certificate cert = replicate_prop3();
  ExperimentReport report;
  report.suite = "prop3";
  TrialRow row;
  row.instance_hash = instance_hash(cert.instance);
  row.pass = cert.unsatisfiable;
  row.values = {cert.consistent_assignments, cert.literal_table_assignments, cert.search_nodes};
  if (config.timing) {
    row.runtime_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  report.rows.push_back(row);
  report.failures = row.pass ? 0 : 1;
  report.summary = cert.unsatisfiable ? "UNSAT certified" : "NOT certified";
  return report;
}

std::string hex(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string values_text(const std::vector<std::uint64_t>& values) {
  std::string out;
  for (std::uint64_t v : values) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

}  // namespace

const std::vector<std::string>& experiment_suites() {
  static const std::vector<std::string> names = {"thm1", "thm2", "prop1-sp",
                                                 "prop2", "prop3", "oracle-props"};
  return names;
}

ExperimentReport run_experiment(const RunConfig& config, const std::string& suite) {
  check_budget(config.budget);
  if (suite == "prop3") return run_prop3(config);
  const auto& suites = trial_suites();
  auto it = std::find_if(suites.begin(), suites.end(),
                         [&](const auto& entry) { return entry.first == suite; });
  if (it == suites.end()) throw Error(Errc::kUnknownSuite, "unknown suite '" + suite + "'");

  ExperimentReport report;
  report.suite = suite;
  for (std::size_t t = 0; t < config.trials; ++t) {
    const auto start = std::chrono::steady_clock::now();
    Rng rng(derive_seed(config.seed, t));
    TrialRow row;
    row.trial = t;
    try {
      Outcome out = it->second(rng, config.budget);
      row.instance_hash = out.hash;
      row.pass = out.pass;
      row.values = std::move(out.values);
    } catch (const Error&) {
      row.pass = false;
    }
    if (config.timing) {
      row.runtime_ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
    if (!row.pass) ++report.failures;
    report.rows.push_back(std::move(row));
  }
  report.summary = std::to_string(config.trials - report.failures) + "/" +
                   std::to_string(config.trials) + " passed";
  return report;
}

std::string render_report(const ExperimentReport& report, ReportFormat format) {
  if (format == ReportFormat::kJson) {
    nlohmann::json rows = nlohmann::json::array();
    for (const TrialRow& r : report.rows) {
      nlohmann::json row = {{"instance_hash", hex(r.instance_hash)},
                            {"pass", r.pass},
                            {"trial", r.trial},
                            {"values", r.values}};
      if (r.runtime_ms) row["runtime_ms"] = *r.runtime_ms;
      rows.push_back(std::move(row));
    }
    nlohmann::json doc = {{"rows", std::move(rows)},
                          {"suite", report.suite},
                          {"summary",
                           {{"failures", report.failures},
                            {"pass", report.passed()},
                            {"text", report.summary},
                            {"trials", report.rows.size()}}}};
    return doc.dump(2) + "\n";
  }
  const bool timing = std::any_of(report.rows.begin(), report.rows.end(),
                                  [](const TrialRow& r) { return r.runtime_ms.has_value(); });
  std::ostringstream out;
  out << "trial,instance_hash,pass,values" << (timing ? ",runtime_ms" : "") << '\n';
  for (const TrialRow& r : report.rows) {
    out << r.trial << ',' << hex(r.instance_hash) << ',' << (r.pass ? "true" : "false") << ','
        << values_text(r.values);
    if (timing) out << ',' << (r.runtime_ms ? *r.runtime_ms : 0.0);
    out << '\n';
  }
  out << "summary,," << (report.passed() ? "true" : "false") << ',' << report.summary
      << (timing ? "," : "") << '\n';
  return out.str();
}

}  // namespace costmms
