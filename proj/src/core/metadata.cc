// core/metadata.cc

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

#include "core/metadata.h"

namespace spoken {

const std::string &Person::DisplayName() const {
  if (!name.empty()) return name;
  if (!abbr.empty()) return abbr;
  return id;
}

const Person *Metadata::FindParticipant(const std::string &id) const {
  for (const auto &p : participants)
    if (p.id == id) return &p;
  return nullptr;
}

}  // namespace spoken
