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

#include "costmms/json_io.hpp"

#include <sstream>

#include "costmms/error.hpp"

namespace costmms {

using nlohmann::json;

namespace {

json parse_text(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(Errc::kParseError, std::string("invalid JSON: ") + e.what());
  }
}

const json& member(const json& obj, const char* key, const char* context) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw Error(Errc::kParseError, std::string(context) + " is missing \"" + key + "\"");
  }
  return obj.at(key);
}

std::string string_of(const json& v, const char* context) {
  if (!v.is_string()) throw Error(Errc::kParseError, std::string(context) + " must be a string");
  return v.get<std::string>();
}

json agent_ref(const Instance& inst, AgentIndex a) { return inst.agent(a).id; }

json optional_good(const Instance& inst, std::optional<GoodIndex> g) {
  return g ? json(inst.good(*g).id) : json(nullptr);
}

}  // namespace

RawInstance parse_raw_instance(std::string_view text) {
  const json doc = parse_text(text);
  if (!doc.is_object()) throw Error(Errc::kParseError, "instance must be a JSON object");
  RawInstance raw;
  const json& goods = member(doc, "goods", "instance");
  const json& agents = member(doc, "agents", "instance");
  if (!goods.is_array() || !agents.is_array()) {
    throw Error(Errc::kParseError, "\"goods\" and \"agents\" must be arrays");
  }
  for (const json& g : goods) {
    const json& cost = member(g, "cost", "good");
    if (!cost.is_number_integer()) throw Error(Errc::kParseError, "good cost must be an integer");
    raw.goods.push_back(RawGood{string_of(member(g, "id", "good"), "good id"),
                                cost.get<std::int64_t>()});
  }
  for (const json& a : agents) {
    RawAgent agent{string_of(member(a, "id", "agent"), "agent id"), {}};
    const json& approves = member(a, "approves", "agent");
    if (!approves.is_array()) throw Error(Errc::kParseError, "\"approves\" must be an array");
    for (const json& id : approves) agent.approves.push_back(string_of(id, "approved good"));
    raw.agents.push_back(std::move(agent));
  }
  return raw;
}

Instance parse_instance(std::string_view text) {
  return Instance::validate(parse_raw_instance(text));
}

json goods_json(const Instance& inst, GoodSet set) {
  json out = json::array();
  for (GoodIndex g : set) out.push_back(inst.good(g).id);
  return out;
}

json instance_json(const Instance& inst) {
  json goods = json::array();
  for (const Good& g : inst.goods()) goods.push_back({{"cost", g.cost}, {"id", g.id}});
  json agents = json::array();
  for (const Agent& a : inst.agents()) {
    agents.push_back({{"approves", goods_json(inst, a.approves)}, {"id", a.id}});
  }
  return json{{"agents", std::move(agents)}, {"goods", std::move(goods)}};
}

std::string dump_instance(const Instance& inst) { return instance_json(inst).dump(); }

json allocation_json(const Instance& inst, const Allocation& alloc) {
  check_allocation(inst, alloc);
  json bundles = json::object();
  for (AgentIndex a = 0; a < inst.num_agents(); ++a) {
    bundles[inst.agent(a).id] = goods_json(inst, alloc.bundles[a]);
  }
  return json{{"bundles", std::move(bundles)}};
}

std::string dump_allocation(const Instance& inst, const Allocation& alloc) {
  return allocation_json(inst, alloc).dump();
}

Allocation parse_allocation(const Instance& inst, std::string_view text) {
  const json doc = parse_text(text);
  const json& bundles = member(doc, "bundles", "allocation");
  if (!bundles.is_object()) throw Error(Errc::kParseError, "\"bundles\" must be an object");
  Allocation alloc = empty_allocation(inst.num_agents());
  std::vector<bool> seen(inst.num_agents(), false);
  for (const auto& [agent_id, goods] : bundles.items()) {
    auto a = inst.find_agent(agent_id);
    if (!a) throw Error(Errc::kInvalidAllocation, "unknown agent '" + agent_id + "'");
    if (!goods.is_array()) throw Error(Errc::kParseError, "bundle must be an array");
    std::vector<std::string> ids;
    for (const json& id : goods) ids.push_back(string_of(id, "good id"));
    GoodSet set = inst.resolve_goods(ids);
    if (set.size() != ids.size()) {
      throw Error(Errc::kInvalidAllocation, "bundle of '" + agent_id + "' repeats a good");
    }
    alloc.bundles[*a] = set;
    seen[*a] = true;
  }
  for (AgentIndex a = 0; a < inst.num_agents(); ++a) {
    if (!seen[a]) {
      throw Error(Errc::kInvalidAllocation, "allocation has no bundle for '" + inst.agent(a).id + "'");
    }
  }
  check_allocation(inst, alloc);
  return alloc;
}

json mms_profile_json(const Instance& inst, const MmsProfile& profile) {
  json agents = json::array();
  for (AgentIndex a = 0; a < profile.values.size(); ++a) {
    json witness = json::array();
    for (GoodSet b : profile.witnesses[a]) witness.push_back(goods_json(inst, b));
    agents.push_back({{"agent", agent_ref(inst, a)},
                      {"mms", profile.values[a]},
                      {"witness", std::move(witness)}});
  }
  return json{{"agents", std::move(agents)}, {"bundle_count", profile.bundle_count}};
}

json mms_report_json(const Instance& inst, const MmsReport& report) {
  json shortfalls = json::array();
  for (const Shortfall& s : report.shortfalls) {
    shortfalls.push_back({{"agent", agent_ref(inst, s.agent)},
                          {"received", s.received},
                          {"required", s.required}});
  }
  return json{{"check", "mms"}, {"pass", report.satisfied}, {"shortfalls", std::move(shortfalls)}};
}

json pareto_report_json(const Instance& inst, const ParetoReport& report) {
  return json{{"check", "po"}, {"pass", report.efficient},
              {"witness", optional_good(inst, report.witness)}};
}

json laminar_report_json(const Instance& inst, const LaminarCheck& check) {
  json violation = nullptr;
  if (check.violation) {
    violation = json::array({agent_ref(inst, check.violation->first),
                             agent_ref(inst, check.violation->second)});
  }
  return json{{"check", "laminar"}, {"pass", check.laminar}, {"violation", violation}};
}

json audit_report_json(const Instance& inst, const AuditReport& report) {
  json witness = nullptr;
  if (report.witness) {
    const ManipulationWitness& w = *report.witness;
    json profile = json::array();
    for (GoodSet s : w.profile) profile.push_back(goods_json(inst, s));
    witness = {{"agent", agent_ref(inst, w.agent)},
               {"honest_value", w.honest_value},
               {"manipulated_value", w.manipulated_value},
               {"misreport", goods_json(inst, w.misreport)},
               {"profile", std::move(profile)},
               {"truth", goods_json(inst, w.truth)}};
  }
  return json{{"check", "sp"},
              {"deviations_checked", report.deviations_checked},
              {"pass", report.strategyproof},
              {"witness", std::move(witness)}};
}

json prop3_json(const Prop3Certificate& cert) {
  const Instance& inst = cert.instance;
  auto profile_json = [&](const std::vector<GoodSet>& p) {
    json out = json::array();
    for (GoodSet s : p) out.push_back(goods_json(inst, s));
    return out;
  };
  auto alloc_list = [&](const std::vector<Allocation>& list) {
    json out = json::array();
    for (const Allocation& a : list) out.push_back(profile_json(a.bundles));
    return out;
  };
  json branches = json::array();
  for (const ChainBranch& b : cert.branches) {
    json steps = json::array();
    for (const AxiomChainStep& s : b.steps) {
      steps.push_back({{"admissible", alloc_list(s.admissible)},
                       {"base_count", s.base.size()},
                       {"label", s.label},
                       {"profile", profile_json(s.profile)}});
    }
    branches.push_back({{"contradiction", b.contradiction}, {"name", b.name}, {"steps", std::move(steps)}});
  }
  json family = json::array();
  for (std::size_t i = 0; i < cert.family.size(); ++i) {
    family.push_back({{"base_count", cert.family_base_sizes[i]}, {"profile", profile_json(cert.family[i])}});
  }
  return json{{"branches", std::move(branches)},
              {"consistent_assignments", cert.consistent_assignments},
              {"family", std::move(family)},
              {"literal_table_assignments", cert.literal_table_assignments},
              {"search_nodes", cert.search_nodes},
              {"summary", cert.unsatisfiable ? "UNSAT certified" : "NOT certified"},
              {"unsatisfiable", cert.unsatisfiable}};
}

std::string mechanism_trace_lines(const Instance& inst, const MechanismRun& run) {
  std::ostringstream out;
  for (const PickEvent& e : run.trace) {
    out << json{{"agent", e.agent + 1}, {"good", optional_good(inst, e.good)}, {"turn", e.turn + 1}}.dump()
        << '\n';
  }
  for (const CompletionEvent& c : run.completion) {
    out << json{{"agent", c.agent + 1}, {"good", inst.good(c.good).id}, {"turn", nullptr}}.dump()
        << '\n';
  }
  return out.str();
}

std::uint64_t instance_hash(const Instance& inst) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : dump_instance(inst)) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace costmms
