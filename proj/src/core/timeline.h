// core/timeline.h

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

#ifndef SPOKEN_CORE_TIMELINE_H_
#define SPOKEN_CORE_TIMELINE_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "base/xml.h"

namespace spoken {

enum class TimeUnit { kMs, kS, kSymbolic };

const char *UnitName(TimeUnit unit);
std::optional<TimeUnit> ParseUnit(std::string_view s);

struct TimePoint {
  std::string id;
  size_t index = 0;
  std::optional<double> offset;  // in the timeline unit, non-negative
  bool synthetic = false;        // made up by implicit sequencing
  xml::Attributes extra_attributes;

  bool operator==(const TimePoint &) const = default;
};

enum class Ordering { kBefore, kEqual, kAfter };

const char *OrderingName(Ordering o);

/// Totally ordered symbolic points.  Order is the ordinal index (document
/// order of declaration); offsets are advisory.
class Timeline {
 public:
  Timeline() = default;
  Timeline(std::string id, TimeUnit unit) : id_(std::move(id)), unit_(unit) {}

  const std::string &id() const { return id_; }
  void set_id(std::string id) { id_ = std::move(id); }
  TimeUnit unit() const { return unit_; }
  void set_unit(TimeUnit unit) { unit_ = unit; }

  /// Built from anchor declarations in the transcript rather than from an
  /// explicit timeline; never serialized as such.
  bool derived() const { return derived_; }
  void set_derived(bool d) { derived_ = d; }
  /// Point the offsets are measured from, if declared.
  const std::string &origin() const { return origin_; }
  void set_origin(std::string o) { origin_ = std::move(o); }

  xml::Attributes &extra_attributes() { return extra_attributes_; }
  const xml::Attributes &extra_attributes() const { return extra_attributes_; }

  /// Appends a point at the next index.  Throws Error on a duplicate id or a
  /// negative offset.
  const TimePoint &AddPoint(std::string id, std::optional<double> offset = {},
                            bool synthetic = false);
  bool Contains(std::string_view id) const { return index_.count(id) > 0; }
  /// nullptr when absent.
  const TimePoint *Find(std::string_view id) const;
  /// Throws ReferenceError naming `id` when absent.
  size_t IndexOf(std::string_view id) const;

  const std::vector<TimePoint> &points() const { return points_; }
  TimePoint &mutable_point(size_t index) { return points_.at(index); }
  size_t size() const { return points_.size(); }

  /// Renames a point in place (used when synthetic points are materialized).
  void RenamePoint(size_t index, std::string new_id);

  bool HasSyntheticPoints() const;

  bool operator==(const Timeline &other) const;

 private:
  std::string id_;
  TimeUnit unit_ = TimeUnit::kSymbolic;
  bool derived_ = false;
  std::string origin_;
  xml::Attributes extra_attributes_;
  std::vector<TimePoint> points_;
  std::map<std::string, size_t, std::less<>> index_;
};

/// Orders two points by index.  Contradicting offsets do not change the
/// answer; they are a validation finding.
Ordering ComparePoints(const Timeline &timeline, std::string_view a,
                       std::string_view b);

}  // namespace spoken

#endif  // SPOKEN_CORE_TIMELINE_H_
