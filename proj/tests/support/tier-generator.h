// tests/support/tier-generator.h

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

#ifndef SPOKEN_TESTS_SUPPORT_TIER_GENERATOR_H_
#define SPOKEN_TESTS_SUPPORT_TIER_GENERATOR_H_

#include <random>
#include <string>

#include "tier/tier-file.h"

namespace spoken {
namespace testing {

/// A valid tier document: up to 3 speakers, 25 points (some without
/// offsets), 5 tiers and 20 non-overlapping events with awkward text.
inline TierDocument RandomTierDocument(std::mt19937 &rng) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  static const char *const kWords[] = {"oui", "très", "bien", "ça", "dépend", "A & B",
                                       "<x>", "((cough))", "  padded ", ""};
  TierDocument td;
  int speakers = pick(0, 3);
  for (int i = 0; i < speakers; ++i)
    td.speakers.push_back({"S" + std::to_string(i), pick(0, 1) ? "Name " + std::to_string(i) : ""});
  int points = pick(2, 25);
  for (int i = 0; i < points; ++i) {
    TierPoint p{"p" + std::to_string(i), std::nullopt};
    if (pick(0, 2)) p.offset = i * 0.25;
    td.points.push_back(p);
  }
  static const char *const kCategories[] = {"verbal", "gesture", "translation", "incident"};
  int tiers = pick(0, 5), budget = 20;
  for (int i = 0; i < tiers; ++i) {
    Tier t;
    t.id = "tier" + std::to_string(i);
    if (speakers > 0 && pick(0, 3)) t.speaker = td.speakers[pick(0, speakers - 1)].id;
    t.category = kCategories[pick(0, 3)];
    int cursor = 0;
    while (budget > 0 && pick(0, 4)) {
      int start = cursor + pick(0, 2), end = start + 1 + pick(0, 3);
      if (end >= points) break;
      std::string text = kWords[pick(0, 9)];
      if (pick(0, 1)) text += std::string(" ") + kWords[pick(0, 9)];
      t.events.push_back({td.points[start].id, td.points[end].id, text});
      cursor = end;
      --budget;
    }
    td.tiers.push_back(std::move(t));
  }
  return td;
}

}  // namespace testing
}  // namespace spoken

#endif  // SPOKEN_TESTS_SUPPORT_TIER_GENERATOR_H_
