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

#ifndef COSTMMS_ERROR_HPP_
#define COSTMMS_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace costmms {

// Numeric values are part of the C API (see costmms.h) and must not change.
enum class Errc : int {
  kNegativeCost = 1,
  kDuplicateGoodId = 2,
  kUnknownGoodInApproval = 3,
  kEmptyAgentList = 4,
  kUnknownGoodInBundle = 5,
  kInstanceTooLarge = 6,
  kWrongAgentCount = 7,
  kSelectionImpossible = 8,
  kNotLaminar = 9,
  kRecursionLimit = 10,
  kInvalidSequenceIndex = 11,
  kWrongGoodsCount = 12,
  kTooFewAgents = 13,
  kDegenerateRank = 14,
  kInvalidParameter = 15,
  kUnknownSuite = 16,
  kParseError = 17,
  kInvalidAllocation = 18,
  kDuplicateAgentId = 19,
  kTooManyGoods = 20,
  kTooFewApprovals = 21,
  kInternal = 22,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Internal invariant checks. A failure means a bug in this library, not bad
// input, so it is reported as kInternal.
#define COSTMMS_CHECK(cond, msg)                                      \
  do {                                                                \
    if (!(cond)) {                                                    \
      throw ::costmms::Error(::costmms::Errc::kInternal,              \
                             std::string("invariant violated: ") + msg); \
    }                                                                 \
  } while (0)

}  // namespace costmms

#endif  // COSTMMS_ERROR_HPP_
