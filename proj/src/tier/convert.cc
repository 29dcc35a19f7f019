// tier/convert.cc

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

#include "tier/convert.h"

#include "core/annotation-ops.h"

namespace spoken {

Document ToCore(const TierDocument &td, const ToCoreOptions &options) {
  CheckTierDocument(td);
  Document doc;
  for (const auto &s : td.speakers) {
    Person p;
    p.id = s.id;
    p.name = s.name;
    doc.metadata.participants.push_back(std::move(p));
  }
  Timeline timeline("~timeline", TimeUnit::kS);
  for (const auto &p : td.points) timeline.AddPoint(p.id, p.offset);
  doc.timelines.push_back(std::move(timeline));
  doc.sources.push_back({kPrimarySource, SourceRef::Kind::kPrimary, "", {}});
  doc.levels.push_back({kTranscriptLevel, {kPrimarySource}, RangingMechanism::kEvent, {}});

  for (const Tier &t : td.tiers) {
    doc.layers.push_back({t.id, t.id, kTranscriptLevel, t.speaker, t.category});
    auto pid = options.category_pids.find(t.category);
    CategoryRef feature = pid == options.category_pids.end() ? CategoryRef::Name(t.category)
                                                             : CategoryRef::Pid(pid->second);
    for (size_t k = 0; k < t.events.size(); ++k) {
      const TierEvent &e = t.events[k];
      Annotation a;
      a.id = t.id + "#" + std::to_string(k + 1);
      a.source = kPrimarySource;
      a.range = EventInterval{e.start, e.end, "~timeline"};
      a.qualifiers.push_back({feature, CategoryRef::Name(e.text)});
      a.layer = t.id;
      doc.annotations.push_back(std::move(a));
    }
  }
  return doc;
}

namespace {

double ToSeconds(double offset, TimeUnit unit) {
  return unit == TimeUnit::kMs ? offset / 1000 : offset;
}

const Timeline *ChooseTimeline(const Document &doc) {
  for (const auto &a : doc.annotations)
    if (const EventInterval *e = ResolvedInterval(doc, a)) return doc.FindTimeline(e->timeline);
  for (const auto &t : doc.timelines)
    if (!t.derived()) return &t;
  return doc.timelines.empty() ? nullptr : &doc.timelines.front();
}

void CollectSegTrees(const Document &doc, std::vector<ResidueItem> *residue) {
  int generated = 0;
  for (size_t i = 0; i < doc.transcript.body.size(); ++i) {
    const auto *content = ContentOf(doc.transcript.body[i]);
    if (!content) continue;
    for (const Inline &in : *content)
      if (const Seg *s = in.As<Seg>())
        residue->push_back({s->id.empty() ? "seg#" + std::to_string(++generated) : s->id,
                            "seg tree of type '" + s->type + "' in " +
                                ElementNameOf(doc.transcript.body[i]) + " " +
                                std::to_string(i + 1)});
  }
}

}  // namespace

FromCoreResult FromCore(const Document &doc) {
  FromCoreResult result;
  TierDocument &td = result.document;
  auto &residue = result.residue;

  for (const auto &p : doc.metadata.participants)
    if (!p.id.empty()) td.speakers.push_back({p.id, p.name.empty() ? p.abbr : p.name});

  const Timeline *timeline = ChooseTimeline(doc);
  if (timeline)
    for (const auto &p : timeline->points()) {
      TierPoint point{p.id, std::nullopt};
      if (p.offset) point.offset = ToSeconds(*p.offset, timeline->unit());
      td.points.push_back(std::move(point));
    }

  for (const Layer &layer : doc.layers) {
    Tier tier;
    tier.id = layer.id;
    tier.speaker = layer.speaker;
    tier.category = layer.category;
    std::vector<std::pair<size_t, size_t>> taken;
    for (const Annotation &a : doc.annotations) {
      if (a.layer != layer.id) continue;
      if (tier.category.empty() && !a.qualifiers.empty())
        tier.category = a.qualifiers[0].feature.text;
      const EventInterval *e = ResolvedInterval(doc, a);
      if (!e) {
        std::string how = !a.range ? "has no range"
                          : std::holds_alternative<EventInterval>(*a.range)
                              ? "has an unresolved interval"
                              : std::string("is ranged by ") + MechanismName(MechanismOf(*a.range));
        residue.push_back({a.id, "annotation " + how});
        continue;
      }
      if (!timeline || e->timeline != timeline->id()) {
        residue.push_back({a.id, "annotation lies on timeline '" + e->timeline + "'"});
        continue;
      }
      if (a.qualifiers.size() != 1) {
        residue.push_back(
            {a.id, "annotation carries " + std::to_string(a.qualifiers.size()) + " qualifiers"});
        continue;
      }
      size_t s = timeline->IndexOf(e->start), f = timeline->IndexOf(e->end);
      bool overlaps = false;
      for (const auto &[ts, tf] : taken) overlaps = overlaps || (s < tf && ts < f);
      if (overlaps) {
        residue.push_back({a.id, "annotation overlaps another event of layer '" + layer.id + "'"});
        continue;
      }
      taken.emplace_back(s, f);
      tier.events.push_back({e->start, e->end, a.qualifiers[0].value.text});
    }
    if (tier.category.empty()) tier.category = "annotation";
    if (!tier.speaker.empty() && !td.FindSpeaker(tier.speaker))
      td.speakers.push_back({tier.speaker, ""});
    td.tiers.push_back(std::move(tier));
  }

  for (const Annotation &a : doc.annotations)
    if (!a.layer.empty() && !doc.FindLayer(a.layer))
      residue.push_back({a.id, "annotation names undeclared layer '" + a.layer + "'"});
    else if (a.layer.empty())
      residue.push_back({a.id, "annotation belongs to no layer"});

  for (const WordForm &w : doc.word_forms) {
    std::string span = w.tokens.empty() ? "no tokens"
                                        : "tokens " + w.tokens.front() + ".." + w.tokens.back();
    residue.push_back({w.id, "word form over " + span});
  }
  CollectSegTrees(doc, &residue);
  return result;
}

}  // namespace spoken
