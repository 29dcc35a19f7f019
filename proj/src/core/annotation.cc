// core/annotation.cc

// Copyright 2026  The spokenkit authors

// See ../../COPYING for clarification regarding multiple authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "core/annotation.h"

namespace spoken {

const char *MechanismName(RangingMechanism m) {
  switch (m) {
    case RangingMechanism::kScale: return "scale";
    case RangingMechanism::kEvent: return "event";
    case RangingMechanism::kComponent: return "component";
  }
  return "?";
}

RangingMechanism MechanismOf(const Range &range) {
  switch (range.index()) {
    case 0: return RangingMechanism::kScale;
    case 1: return RangingMechanism::kEvent;
    default: return RangingMechanism::kComponent;
  }
}

}  // namespace spoken
