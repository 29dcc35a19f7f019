// core/temporal.h

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

#ifndef SPOKEN_CORE_TEMPORAL_H_
#define SPOKEN_CORE_TEMPORAL_H_

#include <cstddef>
#include <optional>
#include <string_view>

#include "core/annotation.h"
#include "core/timeline.h"

namespace spoken {

/// The thirteen interval relations.  Intervals are half-open, so a shared
/// boundary is kMeets.
enum class TemporalRelation {
  kBefore,
  kMeets,
  kOverlaps,
  kStarts,
  kDuring,
  kFinishes,
  kEquals,
  kFinishedBy,
  kContains,
  kStartedBy,
  kOverlappedBy,
  kMetBy,
  kAfter,
};

constexpr int kNumTemporalRelations = 13;

const char *RelationName(TemporalRelation r);
std::optional<TemporalRelation> ParseRelation(std::string_view name);
TemporalRelation Inverse(TemporalRelation r);

/// True for the relations where the two intervals share some time.
bool SharesTime(TemporalRelation r);

/// Index interval [start, end).
struct IndexInterval {
  size_t start = 0;
  size_t end = 0;
};

/// Throws Error if either interval is empty (start >= end).
TemporalRelation Relation(IndexInterval a, IndexInterval b);

/// Both intervals must name `timeline`; throws IncomparableError otherwise
/// and ReferenceError for unknown points.
TemporalRelation Relation(const Timeline &timeline, const EventInterval &a,
                          const EventInterval &b);

IndexInterval ToIndexInterval(const Timeline &timeline, const EventInterval &e);

}  // namespace spoken

#endif  // SPOKEN_CORE_TEMPORAL_H_
