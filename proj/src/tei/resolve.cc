// tei/resolve.cc

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

#include "tei/resolve.h"

#include <algorithm>
#include <optional>
#include <set>

#include "base/text-utils.h"

namespace spoken {
namespace tei {

const char kAnchorTimeline[] = "~anchors";
const char kComponentLevel[] = "~components";

std::string CategoryOfElement(std::string_view element) {
  if (element == "u") return "verbal";
  if (element == "kinesic") return "gesture";
  if (element == "incident") return "incident";
  if (element == "vocal") return "vocal";
  return std::string(element);
}

std::string ElementOfCategory(std::string_view category) {
  if (category == "verbal") return "u";
  if (category == "gesture") return "kinesic";
  if (category == "incident") return "incident";
  if (category == "vocal") return "vocal";
  return "";
}

std::string DefaultLayerId(std::string_view category, std::string_view speaker) {
  std::string id(category);
  if (!speaker.empty()) id += "_" + std::string(speaker);
  return id;
}

namespace {

struct PointRef {
  const Timeline *timeline;
  size_t index;
};

class Resolver {
 public:
  Resolver(Document *doc, Findings *findings) : doc_(*doc), findings_(findings) {}

  void Run();

 private:
  void BuildAnchorTimeline();
  std::optional<PointRef> Locate(const std::string &ref) const;
  std::optional<Range> IntervalOf(const std::vector<std::string> &refs,
                                  const std::string &who_for_message);
  Layer &EnsureLayer(const std::string &id, const std::string &category,
                     const std::string &speaker);
  std::string NextId(const std::string &element, const std::string &who);
  void AddAnnotation(std::string id, std::optional<Range> range, std::string feature,
                     std::string value, const std::string &layer, size_t item);
  void CollectTokens();
  void Note(std::string code, std::string location, std::string message) {
    findings_->push_back({std::move(code), std::move(location), std::move(message)});
  }

  Document &doc_;
  Findings *findings_;
  std::vector<Layer> layers_;
  std::vector<Annotation> annotations_;
  std::map<std::string, int> counters_;
  std::set<std::string> element_ids_;
};

void Resolver::BuildAnchorTimeline() {
  doc_.timelines.erase(std::remove_if(doc_.timelines.begin(), doc_.timelines.end(),
                                      [](const Timeline &t) { return t.derived(); }),
                       doc_.timelines.end());
  Timeline derived(kAnchorTimeline, TimeUnit::kSymbolic);
  derived.set_derived(true);
  auto declare = [&](const Anchor &a) {
    if (a.id.empty() || !a.synch.empty()) return;
    if (derived.Contains(a.id)) {
      Note("DUP_ID", a.id, "anchor '" + a.id + "' declared twice; the first is used");
      return;
    }
    derived.AddPoint(a.id);
  };
  for (const auto &item : doc_.transcript.body) {
    if (auto *a = std::get_if<Anchor>(&item)) declare(*a);
    if (const auto *content = ContentOf(item))
      ForEachInline(*content, [&](const Inline &in) {
        if (auto *a = in.As<Anchor>()) declare(*a);
      });
  }
  if (derived.size() > 0) doc_.timelines.push_back(std::move(derived));
}

std::optional<PointRef> Resolver::Locate(const std::string &ref) const {
  std::string id = StripHash(ref);
  for (const auto &t : doc_.timelines)
    if (const TimePoint *p = t.Find(id)) return PointRef{&t, p->index};
  return std::nullopt;
}

std::optional<Range> Resolver::IntervalOf(const std::vector<std::string> &refs,
                                          const std::string &location) {
  std::vector<PointRef> points;
  bool dangling = false;
  for (const auto &r : refs) {
    auto p = Locate(r);
    if (!p) {
      Note("DANGLING_REF", location, "time point '" + StripHash(r) + "' is not declared");
      dangling = true;
      continue;
    }
    points.push_back(*p);
  }
  if (dangling || points.empty()) return std::nullopt;
  const Timeline *t = points.front().timeline;
  size_t lo = points.front().index, hi = lo;
  for (const auto &p : points) {
    if (p.timeline != t) {
      Note("UNRESOLVED", location, "anchors lie on different timelines");
      return std::nullopt;
    }
    lo = std::min(lo, p.index);
    hi = std::max(hi, p.index);
  }
  if (lo == hi) {
    Note("UNRESOLVED", location, "fewer than two distinct time points");
    return std::nullopt;
  }
  return EventInterval{t->points()[lo].id, t->points()[hi].id, t->id()};
}

Layer &Resolver::EnsureLayer(const std::string &id, const std::string &category,
                             const std::string &speaker) {
  for (auto &l : layers_)
    if (l.id == id) return l;
  layers_.push_back({id, id, kTranscriptLevel, speaker, category});
  return layers_.back();
}

std::string Resolver::NextId(const std::string &element, const std::string &who) {
  std::string key = who.empty() ? element : element + "_" + who;
  return key + "#" + std::to_string(++counters_[key]);
}

void Resolver::AddAnnotation(std::string id, std::optional<Range> range,
                             std::string feature, std::string value,
                             const std::string &layer, size_t item) {
  Annotation a;
  a.id = std::move(id);
  a.source = kPrimarySource;
  a.range = std::move(range);
  a.qualifiers.push_back({CategoryRef::Name(std::move(feature)),
                          CategoryRef::Name(std::move(value))});
  a.layer = layer;
  a.body_item = item;
  annotations_.push_back(std::move(a));
}

void Resolver::CollectTokens() {
  doc_.tokens.clear();
  int generated = 0;
  for (const auto &item : doc_.transcript.body) {
    const auto *content = ContentOf(item);
    if (!content) continue;
    ForEachInline(*content, [&](const Inline &in) {
      if (auto *w = in.As<Word>()) {
        std::string id = w->id.empty() ? "~w" + std::to_string(++generated) : w->id;
        doc_.tokens.push_back({id, NormalizeSpace(PlainText(w->children)),
                               ComponentRefs{{id}}});
      }
      auto note_id = [&](const std::string &id) {
        if (!id.empty()) element_ids_.insert(id);
      };
      if (auto *w = in.As<Word>()) note_id(w->id);
      if (auto *s = in.As<Seg>()) note_id(s->id);
      if (auto *e = in.As<Event>()) note_id(e->id);
    });
  }
}

void Resolver::Run() {
  BuildAnchorTimeline();
  if (doc_.sources.empty())
    doc_.sources.push_back({kPrimarySource, SourceRef::Kind::kPrimary, "", {}});
  if (!doc_.FindLevel(kTranscriptLevel))
    doc_.levels.push_back(
        {kTranscriptLevel, {kPrimarySource}, RangingMechanism::kEvent, {}});
  CollectTokens();

  const auto &body = doc_.transcript.body;
  for (size_t i = 0; i < body.size(); ++i) {
    const BodyItem &item = body[i];
    if (auto *u = std::get_if<Utterance>(&item)) {
      std::string category = CategoryOfElement("u");
      std::string layer = u->label.empty() ? DefaultLayerId(category, u->who) : u->label;
      EnsureLayer(layer, category, u->who);
      std::string id = u->id.empty() ? NextId("u", u->who) : u->id;
      std::vector<std::string> refs;
      ForEachInline(u->content, [&](const Inline &in) {
        if (auto *a = in.As<Anchor>()) refs.push_back(a->synch.empty() ? a->id : a->synch);
      });
      std::optional<Range> range;
      if (!refs.empty()) range = IntervalOf(refs, id);
      AddAnnotation(id, std::move(range), category, NormalizeSpace(PlainText(u->content)),
                    layer, i);
    } else if (auto *e = std::get_if<Event>(&item)) {
      std::string element = EventElementName(e->kind);
      std::string category = CategoryOfElement(element);
      std::string layer = e->label.empty() ? DefaultLayerId(category, e->who) : e->label;
      EnsureLayer(layer, category, e->who);
      std::string id = e->id.empty() ? NextId(element, e->who) : e->id;
      std::optional<Range> range;
      if (!e->start.empty() && !e->end.empty()) {
        auto s = Locate(e->start), f = Locate(e->end);
        if (!s) Note("DANGLING_REF", id, "time point '" + e->start + "' is not declared");
        if (!f) Note("DANGLING_REF", id, "time point '" + e->end + "' is not declared");
        if (s && f) {
          if (s->timeline != f->timeline || s->index >= f->index)
            Note("UNRESOLVED", id, "start does not precede end on one timeline");
          else
            range = EventInterval{e->start, e->end, s->timeline->id()};
        }
      } else if (!e->start.empty() || !e->end.empty()) {
        Note("UNRESOLVED", id, "only one of start and end is given");
      }
      AddAnnotation(id, std::move(range), category,
                    e->desc ? *e->desc : e->type, layer, i);
    } else if (auto *g = std::get_if<SpanGroup>(&item)) {
      if (g->type == "wordForm") continue;
      std::string category = g->type.empty() ? "span" : g->type;
      std::string speaker = StripHash(g->corresp);
      std::string layer = g->label.empty() ? DefaultLayerId(category, speaker) : g->label;
      EnsureLayer(layer, category, speaker);
      int by_component = 0, by_time = 0;
      for (const auto &s : g->spans) {
        std::string id = s.id.empty() ? NextId("span", layer) : s.id;
        std::string from = StripHash(s.from), to = StripHash(s.to.empty() ? s.from : s.to);
        std::optional<Range> range;
        auto pf = Locate(from), pt = Locate(to);
        if (pf && pt && pf->timeline == pt->timeline && pf->index < pt->index) {
          range = EventInterval{from, to, pf->timeline->id()};
        } else if (element_ids_.count(from) && element_ids_.count(to)) {
          ComponentRefs refs{{from}};
          if (to != from) refs.targets.push_back(to);
          range = refs;
        } else {
          Note("UNRESOLVED", id, "span '" + from + "'..'" + to + "' does not resolve");
        }
        if (range) (std::holds_alternative<ComponentRefs>(*range) ? by_component : by_time)++;
        AddAnnotation(id, std::move(range), category,
                      s.text.empty() ? s.ana : s.text, layer, i);
      }
      // Spans over elements rather than time form a level of their own.
      if (by_component > 0 && by_time == 0) {
        if (!doc_.FindLevel(kComponentLevel))
          doc_.levels.push_back(
              {kComponentLevel, {kPrimarySource}, RangingMechanism::kComponent, {}});
        EnsureLayer(layer, category, speaker).level = kComponentLevel;
      }
    }
  }

  for (const auto &a : doc_.annotations)
    if (!a.body_item) annotations_.push_back(a);
  for (const auto &l : doc_.layers) {
    bool present = false;
    for (const auto &n : layers_) present = present || n.id == l.id;
    if (!present) layers_.push_back(l);
  }
  doc_.annotations = std::move(annotations_);
  doc_.layers = std::move(layers_);
  doc_.word_forms = ExtractSpans(doc_, findings_);
}

}  // namespace

Document ResolveAnchors(const Document &doc, Findings *findings) {
  Document out = doc;
  Findings local;
  Resolver(&out, findings ? findings : &local).Run();
  return out;
}

std::vector<WordForm> ExtractSpans(const Document &doc, Findings *findings) {
  Findings local;
  if (!findings) findings = &local;
  std::map<std::string, size_t> token_index;
  for (size_t i = 0; i < doc.tokens.size(); ++i)
    token_index.emplace(doc.tokens[i].id, i);
  std::optional<TagsetLibrary> lib;
  try {
    lib = DocumentLibrary(doc);
  } catch (const Error &) {
    lib.reset();
  }

  std::vector<WordForm> out;
  int generated = 0;
  for (const auto &item : doc.transcript.body) {
    const auto *g = std::get_if<SpanGroup>(&item);
    if (!g || g->type != "wordForm") continue;
    for (const auto &s : g->spans) {
      std::string id = s.id.empty() ? "wordForm#" + std::to_string(++generated) : s.id;
      std::string from = StripHash(s.from), to = StripHash(s.to.empty() ? s.from : s.to);
      auto f = token_index.find(from), t = token_index.find(to);
      if (f == token_index.end() || t == token_index.end()) {
        for (const auto *missing : {&from, &to})
          if (!token_index.count(*missing))
            findings->push_back({"DANGLING_REF", id, "token '" + *missing + "' not found"});
        continue;
      }
      if (f->second > t->second) {
        findings->push_back({"SPAN_ORDER", id, "'" + from + "' comes after '" + to + "'"});
        continue;
      }
      WordForm wf;
      wf.id = id;
      wf.group = g->type;
      std::vector<std::string> surfaces;
      for (size_t i = f->second; i <= t->second; ++i) {
        wf.tokens.push_back(doc.tokens[i].id);
        surfaces.push_back(doc.tokens[i].surface);
      }
      wf.orth = Join(surfaces, " ");
      std::string ana = StripHash(s.ana);
      if (!ana.empty()) {
        if (const LexicalForm *form = doc.FindLexicalForm(ana)) {
          wf.lexical_ref = ana;
          if (!form->orth.empty()) wf.orth = form->orth;
          for (const auto &[name, value] : form->grammar)
            if (!value.empty() && !wf.features.Find(name))
              wf.features.Add(name, FSValue::Symbol(value));
        } else {
          try {
            wf.features = ResolveAna(doc, lib ? *lib : TagsetLibrary(), ana);
          } catch (const ReferenceError &) {
            findings->push_back({"DANGLING_REF", id, "analysis '" + ana + "' not found"});
          }
        }
      }
      out.push_back(std::move(wf));
    }
  }
  return out;
}

TagsetLibrary DocumentLibrary(const Document &doc) {
  return BuildLibrary(doc.AllFeatures(), doc.AllTags());
}

FeatureStructure ResolveAna(const Document &doc, const TagsetLibrary &lib,
                            std::string_view ref) {
  std::string id = StripHash(ref);
  if (const TagDefinition *t = lib.FindTag(id)) return t->expanded;
  if (const NamedStructure *s = doc.FindStructure(id)) return s->fs;
  throw ReferenceError("unknown analysis reference", std::string(ref));
}

std::map<std::string, int> SegStats(const Document &doc) {
  std::map<std::string, int> stats;
  for (const auto &item : doc.transcript.body) {
    const auto *content = ContentOf(item);
    if (!content) continue;
    ForEachInline(*content, [&](const Inline &in) {
      if (auto *s = in.As<Seg>()) ++stats[s->type];
    });
  }
  return stats;
}

}  // namespace tei
}  // namespace spoken
