// core/temporal.cc

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

#include "core/temporal.h"

#include "base/error.h"

namespace spoken {

namespace {

const char *const kRelationNames[kNumTemporalRelations] = {
    "before",   "meets",      "overlaps",  "starts",       "during",
    "finishes", "equals",     "finishedBy", "contains",    "startedBy",
    "overlappedBy", "metBy",  "after",
};

}  // namespace

const char *RelationName(TemporalRelation r) {
  return kRelationNames[static_cast<int>(r)];
}

std::optional<TemporalRelation> ParseRelation(std::string_view name) {
  for (int i = 0; i < kNumTemporalRelations; ++i)
    if (name == kRelationNames[i]) return static_cast<TemporalRelation>(i);
  return std::nullopt;
}

TemporalRelation Inverse(TemporalRelation r) {
  // The enumeration is laid out symmetrically around kEquals.
  return static_cast<TemporalRelation>(kNumTemporalRelations - 1 -
                                       static_cast<int>(r));
}

bool SharesTime(TemporalRelation r) {
  switch (r) {
    case TemporalRelation::kBefore:
    case TemporalRelation::kMeets:
    case TemporalRelation::kMetBy:
    case TemporalRelation::kAfter:
      return false;
    default:
      return true;
  }
}

TemporalRelation Relation(IndexInterval a, IndexInterval b) {
  if (a.start >= a.end || b.start >= b.end)
    throw Error("interval relations need non-empty intervals");
  if (a.end < b.start) return TemporalRelation::kBefore;
  if (a.end == b.start) return TemporalRelation::kMeets;
  if (b.end < a.start) return TemporalRelation::kAfter;
  if (b.end == a.start) return TemporalRelation::kMetBy;
  if (a.start == b.start) {
    if (a.end == b.end) return TemporalRelation::kEquals;
    return a.end < b.end ? TemporalRelation::kStarts : TemporalRelation::kStartedBy;
  }
  if (a.end == b.end)
    return a.start > b.start ? TemporalRelation::kFinishes
                             : TemporalRelation::kFinishedBy;
  if (a.start < b.start)
    return a.end < b.end ? TemporalRelation::kOverlaps : TemporalRelation::kContains;
  return a.end < b.end ? TemporalRelation::kDuring : TemporalRelation::kOverlappedBy;
}

IndexInterval ToIndexInterval(const Timeline &timeline, const EventInterval &e) {
  return {timeline.IndexOf(e.start), timeline.IndexOf(e.end)};
}

TemporalRelation Relation(const Timeline &timeline, const EventInterval &a,
                          const EventInterval &b) {
  if (a.timeline != b.timeline)
    throw IncomparableError("intervals lie on different timelines '" + a.timeline +
                            "' and '" + b.timeline + "'");
  if (a.timeline != timeline.id())
    throw IncomparableError("interval is not on timeline '" + timeline.id() + "'");
  return Relation(ToIndexInterval(timeline, a), ToIndexInterval(timeline, b));
}

}  // namespace spoken
