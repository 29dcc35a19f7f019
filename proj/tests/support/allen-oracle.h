// tests/support/allen-oracle.h

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

#ifndef SPOKEN_TESTS_SUPPORT_ALLEN_ORACLE_H_
#define SPOKEN_TESTS_SUPPORT_ALLEN_ORACLE_H_

#include <array>
#include <cstddef>
#include <vector>

#include "core/temporal.h"

namespace spoken {
namespace testing {

/// The thirteen relations written out one predicate each, straight from
/// their endpoint definitions.  Used to check that exactly one holds.
inline std::array<bool, kNumTemporalRelations> AllenPredicates(IndexInterval a,
                                                              IndexInterval b) {
  const size_t as = a.start, ae = a.end, bs = b.start, be = b.end;
  std::array<bool, kNumTemporalRelations> p{};
  auto set = [&p](TemporalRelation r, bool v) { p[static_cast<int>(r)] = v; };
  set(TemporalRelation::kBefore, ae < bs);
  set(TemporalRelation::kMeets, ae == bs);
  set(TemporalRelation::kOverlaps, as < bs && bs < ae && ae < be);
  set(TemporalRelation::kStarts, as == bs && ae < be);
  set(TemporalRelation::kDuring, bs < as && ae < be);
  set(TemporalRelation::kFinishes, bs < as && ae == be);
  set(TemporalRelation::kEquals, as == bs && ae == be);
  set(TemporalRelation::kFinishedBy, as < bs && ae == be);
  set(TemporalRelation::kContains, as < bs && be < ae);
  set(TemporalRelation::kStartedBy, as == bs && be < ae);
  set(TemporalRelation::kOverlappedBy, bs < as && as < be && be < ae);
  set(TemporalRelation::kMetBy, be == as);
  set(TemporalRelation::kAfter, be < as);
  return p;
}

/// All non-empty intervals over `points` points.
inline std::vector<IndexInterval> AllIntervals(size_t points) {
  std::vector<IndexInterval> out;
  for (size_t s = 0; s < points; ++s)
    for (size_t e = s + 1; e < points; ++e) out.push_back({s, e});
  return out;
}

/// Whether the two intervals share at least one unit of time, by counting
/// cells rather than comparing endpoints.
inline bool SharesCell(IndexInterval a, IndexInterval b) {
  for (size_t c = a.start; c < a.end; ++c)
    if (b.start <= c && c < b.end) return true;
  return false;
}

}  // namespace testing
}  // namespace spoken

#endif  // SPOKEN_TESTS_SUPPORT_ALLEN_ORACLE_H_
