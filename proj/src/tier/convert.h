// tier/convert.h

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

#ifndef SPOKEN_TIER_CONVERT_H_
#define SPOKEN_TIER_CONVERT_H_

#include <map>
#include <string>
#include <vector>

#include "core/document.h"
#include "tier/tier-file.h"

namespace spoken {

struct ToCoreOptions {
  // Tier category -> data category pid used as the qualifier feature.
  std::map<std::string, std::string> category_pids;
};

/// One timeline (seconds), one layer per tier, one annotation "<tier>#k"
/// per event with a single qualifier category=text, speakers as
/// participants.
Document ToCore(const TierDocument &td, const ToCoreOptions &options = {});

/// Something of the document that tiers cannot express.
struct ResidueItem {
  std::string id;
  std::string reason;

  bool operator==(const ResidueItem &) const = default;
};

struct FromCoreResult {
  TierDocument document;
  std::vector<ResidueItem> residue;
};

/// Every layer becomes a tier holding the layer's event-ranged annotations
/// with exactly one qualifier.  Annotations ranged otherwise, on another
/// timeline, with several qualifiers or overlapping an earlier event of
/// their layer go to the residue, as do word forms and seg trees.
FromCoreResult FromCore(const Document &doc);

}  // namespace spoken

#endif  // SPOKEN_TIER_CONVERT_H_
