// core/annotation-ops.h

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

#ifndef SPOKEN_CORE_ANNOTATION_OPS_H_
#define SPOKEN_CORE_ANNOTATION_OPS_H_

#include <string>
#include <string_view>
#include <vector>

#include "base/error.h"
#include "core/document.h"
#include "core/temporal.h"

namespace spoken {

struct OverlapPair {
  std::string first;   // annotation ids, ordered by (start, end, id)
  std::string second;
  EventInterval shared;
  TemporalRelation relation;  // of first to second
};

struct OverlapReport {
  std::vector<OverlapPair> pairs;
  // Annotations left out because they have no resolvable event interval.
  size_t skipped = 0;
};

/// Every pair of event-ranged annotations on the same timeline that share
/// time.  Pairs that only meet are excluded.
OverlapReport OverlapsReport(const Document &doc);

/// Gives every annotation without a range a fresh interval after the
/// previous event, built from synthetic points ("~auto1", ...) appended to
/// that event's timeline.  Idempotent.
Document SequenceImplicit(const Document &doc);

/// One LEVEL_INCOHERENT finding per annotation of `level` whose source,
/// ranging mechanism or qualifier features fall outside the level's
/// declaration.  Throws ReferenceError for an unknown level.
Findings CheckLevelCoherence(const Document &doc, std::string_view level);

/// Interval of an annotation when it is a non-empty event interval on a
/// known timeline.
const EventInterval *ResolvedInterval(const Document &doc, const Annotation &a);

}  // namespace spoken

#endif  // SPOKEN_CORE_ANNOTATION_OPS_H_
