// core/timeline.cc

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

#include "core/timeline.h"

#include "base/error.h"

namespace spoken {

const char *UnitName(TimeUnit unit) {
  switch (unit) {
    case TimeUnit::kMs: return "ms";
    case TimeUnit::kS: return "s";
    case TimeUnit::kSymbolic: return "symbolic";
  }
  return "?";
}

std::optional<TimeUnit> ParseUnit(std::string_view s) {
  if (s == "ms") return TimeUnit::kMs;
  if (s == "s") return TimeUnit::kS;
  if (s == "symbolic") return TimeUnit::kSymbolic;
  return std::nullopt;
}

const char *OrderingName(Ordering o) {
  switch (o) {
    case Ordering::kBefore: return "before";
    case Ordering::kEqual: return "equal";
    case Ordering::kAfter: return "after";
  }
  return "?";
}

const TimePoint &Timeline::AddPoint(std::string id, std::optional<double> offset,
                                    bool synthetic) {
  if (id.empty()) throw Error("time point needs an identifier");
  if (index_.count(id))
    throw Error("duplicate time point '" + id + "' on timeline '" + id_ + "'");
  if (offset && *offset < 0)
    throw Error("time point '" + id + "' has a negative offset");
  TimePoint p;
  p.id = std::move(id);
  p.index = points_.size();
  p.offset = offset;
  p.synthetic = synthetic;
  index_.emplace(p.id, p.index);
  points_.push_back(std::move(p));
  return points_.back();
}

const TimePoint *Timeline::Find(std::string_view id) const {
  auto it = index_.find(id);
  return it == index_.end() ? nullptr : &points_[it->second];
}

size_t Timeline::IndexOf(std::string_view id) const {
  auto it = index_.find(id);
  if (it == index_.end())
    throw ReferenceError("unknown time point on timeline '" + id_ + "'",
                         std::string(id));
  return it->second;
}

void Timeline::RenamePoint(size_t index, std::string new_id) {
  TimePoint &p = points_.at(index);
  if (new_id == p.id) return;
  if (index_.count(new_id)) throw Error("time point '" + new_id + "' already exists");
  index_.erase(p.id);
  p.id = std::move(new_id);
  index_.emplace(p.id, index);
}

bool Timeline::HasSyntheticPoints() const {
  for (const auto &p : points_)
    if (p.synthetic) return true;
  return false;
}

bool Timeline::operator==(const Timeline &o) const {
  return id_ == o.id_ && unit_ == o.unit_ && derived_ == o.derived_ &&
         origin_ == o.origin_ && extra_attributes_ == o.extra_attributes_ &&
         points_ == o.points_;
}

Ordering ComparePoints(const Timeline &timeline, std::string_view a,
                       std::string_view b) {
  size_t ia = timeline.IndexOf(a), ib = timeline.IndexOf(b);
  if (ia < ib) return Ordering::kBefore;
  if (ia > ib) return Ordering::kAfter;
  return Ordering::kEqual;
}

}  // namespace spoken
