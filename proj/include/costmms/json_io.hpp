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

// JSON forms of instances, allocations and reports.
//
//   instance:   {"agents": [{"approves": [...], "id": "a1"}, ...],
//                "goods": [{"cost": 2, "id": "g1"}, ...]}
//   allocation: {"bundles": {"<agent id>": ["<good id>", ...], ...}}
//
// Output keys are sorted and every good list follows the instance's
// canonical (cost, id) order, so equal values serialize to equal bytes.

#ifndef COSTMMS_JSON_IO_HPP_
#define COSTMMS_JSON_IO_HPP_

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "costmms/instance.hpp"
#include "costmms/laminar.hpp"
#include "costmms/mechanisms.hpp"
#include "costmms/oracle.hpp"
#include "costmms/strategy.hpp"

namespace costmms {

/// Throws kParseError on malformed JSON or a wrong shape.
RawInstance parse_raw_instance(std::string_view text);
Instance parse_instance(std::string_view text);

nlohmann::json instance_json(const Instance& inst);
std::string dump_instance(const Instance& inst);

nlohmann::json goods_json(const Instance& inst, GoodSet set);
nlohmann::json allocation_json(const Instance& inst, const Allocation& alloc);
std::string dump_allocation(const Instance& inst, const Allocation& alloc);

/// Every agent must appear; goods unknown to the instance raise
/// kUnknownGoodInBundle, and a non-partition raises kInvalidAllocation.
Allocation parse_allocation(const Instance& inst, std::string_view text);

nlohmann::json mms_profile_json(const Instance& inst, const MmsProfile& profile);
nlohmann::json mms_report_json(const Instance& inst, const MmsReport& report);
nlohmann::json pareto_report_json(const Instance& inst, const ParetoReport& report);
nlohmann::json laminar_report_json(const Instance& inst, const LaminarCheck& check);
nlohmann::json audit_report_json(const Instance& inst, const AuditReport& report);
nlohmann::json prop3_json(const Prop3Certificate& cert);

/// One JSON object per pick, then completions: {"agent":1,"good":"g3","turn":1}.
/// Agents and turns are 1-based; a skipped turn has "good": null.
std::string mechanism_trace_lines(const Instance& inst, const MechanismRun& run);

/// 64-bit FNV-1a over the canonical instance bytes.
std::uint64_t instance_hash(const Instance& inst);

}  // namespace costmms

#endif  // COSTMMS_JSON_IO_HPP_
