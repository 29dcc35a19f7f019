// core/annotation-ops.cc

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

#include "core/annotation-ops.h"

#include <algorithm>
#include <set>
#include <tuple>

#include "base/text-utils.h"

namespace spoken {

const EventInterval *ResolvedInterval(const Document &doc, const Annotation &a) {
  if (!a.range) return nullptr;
  const auto *e = std::get_if<EventInterval>(&*a.range);
  if (!e) return nullptr;
  const Timeline *t = doc.FindTimeline(e->timeline);
  if (!t) return nullptr;
  const TimePoint *s = t->Find(e->start), *f = t->Find(e->end);
  if (!s || !f || s->index >= f->index) return nullptr;
  return e;
}

OverlapReport OverlapsReport(const Document &doc) {
  struct Item {
    const Annotation *annotation;
    const Timeline *timeline;
    IndexInterval interval;
  };
  OverlapReport report;
  std::vector<Item> items;
  for (const auto &a : doc.annotations) {
    const EventInterval *e = ResolvedInterval(doc, a);
    if (!e) {
      ++report.skipped;
      continue;
    }
    const Timeline *t = doc.FindTimeline(e->timeline);
    items.push_back({&a, t, ToIndexInterval(*t, *e)});
  }
  std::sort(items.begin(), items.end(), [](const Item &x, const Item &y) {
    return std::tie(x.interval.start, x.interval.end, x.annotation->id) <
           std::tie(y.interval.start, y.interval.end, y.annotation->id);
  });
  for (size_t i = 0; i < items.size(); ++i) {
    for (size_t j = i + 1; j < items.size(); ++j) {
      const Item &x = items[i], &y = items[j];
      if (x.timeline != y.timeline) continue;
      TemporalRelation r = Relation(x.interval, y.interval);
      if (!SharesTime(r)) continue;
      size_t start = std::max(x.interval.start, y.interval.start);
      size_t end = std::min(x.interval.end, y.interval.end);
      EventInterval shared{x.timeline->points()[start].id,
                           x.timeline->points()[end].id, x.timeline->id()};
      report.pairs.push_back(
          {x.annotation->id, y.annotation->id, std::move(shared), r});
    }
  }
  return report;
}

namespace {

int NextAutoNumber(const Document &doc) {
  int next = 1;
  for (const auto &t : doc.timelines) {
    for (const auto &p : t.points()) {
      if (p.id.rfind("~auto", 0) != 0) continue;
      auto n = ParseNumber(std::string_view(p.id).substr(5));
      if (n && *n >= next) next = static_cast<int>(*n) + 1;
    }
  }
  return next;
}

}  // namespace

Document SequenceImplicit(const Document &doc) {
  Document out = doc;
  int next = NextAutoNumber(out);
  std::string previous_timeline;
  for (auto &a : out.annotations) {
    if (a.range) {
      if (const auto *e = std::get_if<EventInterval>(&*a.range))
        if (out.FindTimeline(e->timeline)) previous_timeline = e->timeline;
      continue;
    }
    if (previous_timeline.empty()) {
      if (out.timelines.empty()) out.timelines.emplace_back("~timeline", TimeUnit::kSymbolic);
      previous_timeline = out.timelines.front().id();
    }
    Timeline *t = out.FindTimeline(previous_timeline);
    std::string start = "~auto" + std::to_string(next++);
    std::string end = "~auto" + std::to_string(next++);
    t->AddPoint(start, std::nullopt, true);
    t->AddPoint(end, std::nullopt, true);
    a.range = EventInterval{start, end, previous_timeline};
  }
  return out;
}

Findings CheckLevelCoherence(const Document &doc, std::string_view level_id) {
  const Level *level = doc.FindLevel(level_id);
  if (!level) throw ReferenceError("unknown level", std::string(level_id));
  std::set<std::string, std::less<>> layers;
  for (const auto &l : doc.layers)
    if (l.level == level_id) layers.insert(l.id);
  Findings findings;
  for (const auto &a : doc.annotations) {
    if (!layers.count(a.layer)) continue;
    std::vector<std::string> problems;
    if (!level->sources.empty() &&
        std::find(level->sources.begin(), level->sources.end(), a.source) ==
            level->sources.end())
      problems.push_back("source '" + a.source + "' is not a source of the level");
    if (a.range && MechanismOf(*a.range) != level->mechanism)
      problems.push_back(std::string("ranged by ") + MechanismName(MechanismOf(*a.range)) +
                         ", level expects " + MechanismName(level->mechanism));
    if (!level->category_selection.empty()) {
      for (const auto &q : a.qualifiers) {
        const auto &sel = level->category_selection;
        if (std::find(sel.begin(), sel.end(), q.feature.text) == sel.end())
          problems.push_back("feature '" + q.feature.text +
                             "' is not in the category selection");
      }
    }
    if (!problems.empty())
      findings.push_back({"LEVEL_INCOHERENT", a.id,
                          "level '" + level->id + "': " + Join(problems, "; ")});
  }
  return findings;
}

}  // namespace spoken
