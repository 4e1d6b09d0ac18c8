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

// Seeded instance generators. Bounded integers and coin flips are derived
// from std::mt19937_64 by hand so outputs do not depend on the standard
// library's distribution implementations.

#ifndef COSTMMS_GENERATE_HPP_
#define COSTMMS_GENERATE_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "costmms/instance.hpp"

namespace costmms {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [lo, hi] by rejection sampling.
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);
  /// True with probability p, using 53 random bits.
  bool bernoulli(double p);

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[uniform(0, i - 1)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

/// Seed for trial `index` of a run seeded with `seed` (splitmix64).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Goods g1..gm with costs uniform in [0, max_cost]; agents a1..an approve
/// each good independently with probability `density`. Throws
/// kInvalidParameter.
Instance gen_random(std::size_t n, std::size_t m, std::uint64_t max_cost, double density,
                    std::uint64_t seed);

/// Random laminar family: the goods are split into root blocks, and each
/// block is split again down to `depth` levels. Every agent approves one
/// uniformly chosen node. Throws kInvalidParameter.
Instance gen_laminar(std::size_t n, std::size_t m, std::uint64_t max_cost, std::size_t depth,
                     std::uint64_t seed);

}  // namespace costmms

#endif  // COSTMMS_GENERATE_HPP_
