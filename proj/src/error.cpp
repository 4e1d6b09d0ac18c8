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

#include "costmms/error.hpp"

namespace costmms {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::kNegativeCost: return "NegativeCost";
    case Errc::kDuplicateGoodId: return "DuplicateGoodId";
    case Errc::kUnknownGoodInApproval: return "UnknownGoodInApproval";
    case Errc::kEmptyAgentList: return "EmptyAgentList";
    case Errc::kUnknownGoodInBundle: return "UnknownGoodInBundle";
    case Errc::kInstanceTooLarge: return "InstanceTooLarge";
    case Errc::kWrongAgentCount: return "WrongAgentCount";
    case Errc::kSelectionImpossible: return "SelectionImpossible";
    case Errc::kNotLaminar: return "NotLaminar";
    case Errc::kRecursionLimit: return "RecursionLimit";
    case Errc::kInvalidSequenceIndex: return "InvalidSequenceIndex";
    case Errc::kWrongGoodsCount: return "WrongGoodsCount";
    case Errc::kTooFewAgents: return "TooFewAgents";
    case Errc::kDegenerateRank: return "DegenerateRank";
    case Errc::kInvalidParameter: return "InvalidParameter";
    case Errc::kUnknownSuite: return "UnknownSuite";
    case Errc::kParseError: return "ParseError";
    case Errc::kInvalidAllocation: return "InvalidAllocation";
    case Errc::kDuplicateAgentId: return "DuplicateAgentId";
    case Errc::kTooManyGoods: return "TooManyGoods";
    case Errc::kTooFewApprovals: return "TooFewApprovals";
    case Errc::kInternal: return "Internal";
  }
  return "Unknown";
}

}  // namespace costmms
