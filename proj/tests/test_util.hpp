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

// Small builders shared by the test files.

#ifndef COSTMMS_TESTS_TEST_UTIL_HPP_
#define COSTMMS_TESTS_TEST_UTIL_HPP_

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "costmms/instance.hpp"

namespace costmms::testing {

// Goods g1..gm with the given costs. approvals[a] lists 1-based good
// numbers approved by agent a + 1; agents are a1..an.
inline Instance make_instance(const std::vector<std::int64_t>& costs,
                              const std::vector<std::vector<int>>& approvals) {
  RawInstance raw;
  for (std::size_t g = 0; g < costs.size(); ++g) {
    raw.goods.push_back(RawGood{"g" + std::to_string(g + 1), costs[g]});
  }
  for (std::size_t a = 0; a < approvals.size(); ++a) {
    RawAgent agent{"a" + std::to_string(a + 1), {}};
    for (int g : approvals[a]) agent.approves.push_back("g" + std::to_string(g));
    raw.agents.push_back(std::move(agent));
  }
  return Instance::validate(raw);
}

inline std::vector<int> all_of(std::size_t m) {
  std::vector<int> out;
  for (std::size_t g = 1; g <= m; ++g) out.push_back(static_cast<int>(g));
  return out;
}

inline GoodSet goods(const Instance& inst, std::initializer_list<const char*> ids) {
  std::vector<std::string> v(ids.begin(), ids.end());
  return inst.resolve_goods(v);
}

// Sorted costs of a set, for comparing partitions without caring about ids.
inline std::vector<Value> cost_list(const Instance& inst, GoodSet set) {
  std::vector<Value> out;
  for (GoodIndex g : set) out.push_back(inst.cost(g));
  return out;
}

}  // namespace costmms::testing

#endif  // COSTMMS_TESTS_TEST_UTIL_HPP_
