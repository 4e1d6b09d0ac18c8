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

// Seeded experiment suites. Each trial draws an instance from a seed
// derived from the run seed and the trial index, runs one solver or
// mechanism, and checks the result against the exact oracles.
//
// CSV columns, in order: trial, instance_hash, pass, values[, runtime_ms].
// `values` is a space-separated list whose meaning depends on the suite. The
// last line has trial = "summary".

#ifndef COSTMMS_EXPERIMENT_HPP_
#define COSTMMS_EXPERIMENT_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "costmms/oracle.hpp"

namespace costmms {

enum class ReportFormat { kJson, kCsv };

struct RunConfig {
  std::uint64_t seed = 0;
  SearchBudget budget;
  ReportFormat format = ReportFormat::kJson;
  std::size_t trials = 100;
  bool timing = false;  // runtime column; off keeps output byte-stable
};

struct TrialRow {
  std::size_t trial = 0;
  std::uint64_t instance_hash = 0;
  bool pass = false;
  std::vector<std::uint64_t> values;
  std::optional<double> runtime_ms;
};

struct ExperimentReport {
  std::string suite;
  std::vector<TrialRow> rows;
  std::size_t failures = 0;
  std::string summary;

  bool passed() const { return failures == 0; }
};

/// Names accepted by run_experiment.
const std::vector<std::string>& experiment_suites();

/// Throws kUnknownSuite.
ExperimentReport run_experiment(const RunConfig& config, const std::string& suite);

std::string render_report(const ExperimentReport& report, ReportFormat format);

}  // namespace costmms

#endif  // COSTMMS_EXPERIMENT_HPP_
