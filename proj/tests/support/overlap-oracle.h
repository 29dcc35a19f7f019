// tests/support/overlap-oracle.h

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

#ifndef SPOKEN_TESTS_SUPPORT_OVERLAP_ORACLE_H_
#define SPOKEN_TESTS_SUPPORT_OVERLAP_ORACLE_H_

#include <map>
#include <set>
#include <string>
#include <utility>

#include "core/annotation-ops.h"
#include "support/allen-oracle.h"

namespace spoken {
namespace testing {

/// Unordered annotation pair -> "start,end" of the shared stretch.
using PairSet = std::map<std::pair<std::string, std::string>, std::string>;

inline std::pair<std::string, std::string> Unordered(std::string a, std::string b) {
  if (b < a) std::swap(a, b);
  return {a, b};
}

/// O(n^2) check over every pair of annotations, cell by cell.
inline PairSet BruteForceOverlaps(const Document &doc) {
  PairSet out;
  const auto &as = doc.annotations;
  for (size_t i = 0; i < as.size(); ++i) {
    for (size_t j = 0; j < as.size(); ++j) {
      if (i == j) continue;
      const EventInterval *x = ResolvedInterval(doc, as[i]);
      const EventInterval *y = ResolvedInterval(doc, as[j]);
      if (!x || !y || x->timeline != y->timeline) continue;
      const Timeline &t = *doc.FindTimeline(x->timeline);
      IndexInterval a = ToIndexInterval(t, *x), b = ToIndexInterval(t, *y);
      std::set<size_t> cells;
      for (size_t c = a.start; c < a.end; ++c)
        if (b.start <= c && c < b.end) cells.insert(c);
      if (cells.empty()) continue;
      out[Unordered(as[i].id, as[j].id)] =
          t.points()[*cells.begin()].id + "," + t.points()[*cells.rbegin() + 1].id;
    }
  }
  return out;
}

inline PairSet ReportedPairs(const OverlapReport &report) {
  PairSet out;
  for (const auto &p : report.pairs)
    out[Unordered(p.first, p.second)] = p.shared.start + "," + p.shared.end;
  return out;
}

}  // namespace testing
}  // namespace spoken

#endif  // SPOKEN_TESTS_SUPPORT_OVERLAP_ORACLE_H_
