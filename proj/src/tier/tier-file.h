// tier/tier-file.h

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

#ifndef SPOKEN_TIER_TIER_FILE_H_
#define SPOKEN_TIER_TIER_FILE_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "base/error.h"

namespace spoken {

struct TierSpeaker {
  std::string id;
  std::string name;

  bool operator==(const TierSpeaker &) const = default;
};

struct TierPoint {
  std::string id;
  std::optional<double> offset;  // seconds

  bool operator==(const TierPoint &) const = default;
};

struct TierEvent {
  std::string start;
  std::string end;
  std::string text;

  bool operator==(const TierEvent &) const = default;
};

struct Tier {
  std::string id;
  std::string speaker;  // empty when the tier belongs to no speaker
  std::string category;
  std::vector<TierEvent> events;

  bool operator==(const Tier &) const = default;
};

/// A score: speakers, one ordered list of time points, and tiers of
/// non-overlapping events between those points.
struct TierDocument {
  std::vector<TierSpeaker> speakers;
  std::vector<TierPoint> points;
  std::vector<Tier> tiers;

  const TierSpeaker *FindSpeaker(std::string_view id) const;
  const Tier *FindTier(std::string_view id) const;
  /// Position of a point in the timeline, or -1.
  int PointIndex(std::string_view id) const;

  bool operator==(const TierDocument &) const = default;
};

/// Throws ParseError naming the line for duplicate ids, unknown speakers,
/// tiers or points, events that do not move forward in time and events that
/// overlap another event of their tier.
void CheckTierDocument(const TierDocument &doc);

/// One physical line of a tier file and what it declared.
struct TierLine {
  enum class Kind { kOther, kSpeaker, kPoint, kTier, kEvent };
  Kind kind = Kind::kOther;
  size_t index = 0;  // speaker, point or tier
  size_t event = 0;  // event within tier `index`
  std::string text;
  std::string canonical;  // canonical form of what the line declared
};

/// A parsed tier file.  The lines keep comments, blank lines and the
/// spelling of every declaration so unchanged files serialize byte for
/// byte.
struct TierFile {
  TierDocument document;
  std::vector<TierLine> lines;
  bool final_newline = true;
};

/// Format, one record per line, fields separated by tabs:
///   @speaker  id  name
///   @point    id  offset-in-seconds or "-"
///   @tier     id  speaker or "-"  category
///   event     tier  start  end  text
/// Lines starting with '#' are comments.  Points are ordered as declared;
/// a tier is declared before its events.
/// Throws ParseError with the line number.
TierFile ParseTier(std::string_view text);

/// Lines whose declaration is unchanged are written as read, changed ones
/// in canonical form.  When declarations were added or removed the whole
/// document is written canonically.
std::string SerializeTier(const TierFile &file);

/// Canonical form: speakers, points, tiers, then events tier by tier.
std::string SerializeTier(const TierDocument &doc);

}  // namespace spoken

#endif  // SPOKEN_TIER_TIER_FILE_H_
