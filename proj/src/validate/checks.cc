// validate/checks.cc

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

#include "validate/checks.h"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "base/text-utils.h"
#include "core/annotation-ops.h"
#include "featstruct/tagset.h"

namespace spoken {

namespace {

// One element of the body with enough context to check it and to name it.
struct Element {
  std::string name;
  std::string id;
  std::string location;
  const Utterance *utterance = nullptr;
  const Event *event = nullptr;
  const Anchor *anchor = nullptr;
  const Word *word = nullptr;
  const SpanGroup *group = nullptr;
  const Span *span = nullptr;
  const xml::Node *node = nullptr;
};

std::vector<Element> BodyElements(const Document &doc) {
  std::vector<Element> out;
  std::map<std::string, int> item_counts;
  for (const BodyItem &item : doc.transcript.body) {
    std::string name = ElementNameOf(item);
    std::string path = "body/" + name + "[" + std::to_string(++item_counts[name]) + "]";
    Element e;
    e.name = name;
    e.location = path;
    std::visit(
        [&](const auto &v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, Opaque>) {
            e.node = &v.node;
          } else {
            e.id = v.id;
            if constexpr (std::is_same_v<T, Utterance>) e.utterance = &v;
            if constexpr (std::is_same_v<T, Event>) e.event = &v;
            if constexpr (std::is_same_v<T, Anchor>) e.anchor = &v;
            if constexpr (std::is_same_v<T, SpanGroup>) e.group = &v;
          }
        },
        item);
    if (!e.id.empty()) e.location = e.id;
    out.push_back(e);

    std::map<std::string, int> inline_counts;
    auto nested = [&](const std::string &child, const std::string &id) {
      std::string loc = "(" + path + "//" + child + ")[" +
                        std::to_string(++inline_counts[child]) + "]";
      return id.empty() ? loc : id;
    };
    if (const auto *content = ContentOf(item)) {
      ForEachInline(*content, [&](const Inline &in) {
        Element c;
        std::visit(
            [&](const auto &v) {
              using T = std::decay_t<decltype(v)>;
              if constexpr (std::is_same_v<T, Anchor>) {
                c.name = "anchor";
                c.id = v.id;
                c.anchor = &v;
              } else if constexpr (std::is_same_v<T, Event>) {
                c.name = EventElementName(v.kind);
                c.id = v.id;
                c.event = &v;
              } else if constexpr (std::is_same_v<T, Seg>) {
                c.name = "seg";
                c.id = v.id;
              } else if constexpr (std::is_same_v<T, Word>) {
                c.name = v.element;
                c.id = v.id;
                c.word = &v;
              } else if constexpr (std::is_same_v<T, Opaque>) {
                c.name = v.node.name;
                c.node = &v.node;
              }
            },
            in.value);
        if (c.name.empty()) return;
        c.location = nested(c.name, c.id);
        out.push_back(c);
      });
    }
    if (const SpanGroup *g = e.group)
      for (const Span &s : g->spans) {
        Element c;
        c.name = "span";
        c.id = s.id;
        c.location = nested("span", s.id);
        c.group = g;
        c.span = &s;
        out.push_back(c);
      }
  }
  return out;
}

void NodeIds(const xml::Node &node, std::vector<std::string> *out) {
  if (!node.is_element()) return;
  if (const std::string *id = node.Attr("xml:id")) out->push_back(*id);
  for (const auto &c : node.children) NodeIds(c, out);
}

void NodeIds(const std::vector<xml::Node> &nodes, std::vector<std::string> *out) {
  for (const auto &n : nodes) NodeIds(n, out);
}

void RecordingIds(const Recording &r, std::vector<std::string> *out) {
  out->push_back(r.id);
  NodeIds(r.extra_children, out);
  for (const auto &b : r.broadcast) RecordingIds(b, out);
}

// Every identifier the document declares, in document order.  Generated
// ids are left out; they never reach the markup.
std::vector<std::string> DeclaredIds(const Document &doc) {
  std::vector<std::string> ids;
  const Metadata &m = doc.metadata;
  for (const auto &r : m.recordings) RecordingIds(r, &ids);
  for (const auto &a : m.applications) {
    ids.push_back(a.id);
    NodeIds(a.extra_children, &ids);
  }
  for (const auto &p : m.participants) {
    ids.push_back(p.id);
    NodeIds(p.extra_children, &ids);
  }
  for (const auto &[container, nodes] : m.extras) NodeIds(nodes, &ids);
  for (const auto &t : doc.timelines) {
    if (t.derived()) continue;
    ids.push_back(t.id());
    for (const auto &p : t.points())
      if (!p.synthetic) ids.push_back(p.id);
  }
  for (const Element &e : BodyElements(doc)) {
    ids.push_back(e.id);
    if (e.node) NodeIds(*e.node, &ids);
    if (e.event) NodeIds(e.event->extra_children, &ids);
  }
  for (const auto &lib : doc.feature_libraries) {
    ids.push_back(lib.id);
    for (const auto &f : lib.features) ids.push_back(f.feature.id);
  }
  for (const auto &lib : doc.tag_libraries) {
    ids.push_back(lib.id);
    for (const auto &t : lib.tags) ids.push_back(t.id);
  }
  for (const auto &s : doc.structures) ids.push_back(s.id);
  for (const auto &e : doc.lexical_entries) {
    ids.push_back(e.id);
    NodeIds(e.extra_children, &ids);
    for (const auto &f : e.forms) {
      ids.push_back(f.id);
      NodeIds(f.extra_children, &ids);
    }
  }
  NodeIds(doc.back_extras, &ids);
  ids.erase(std::remove_if(ids.begin(), ids.end(),
                           [](const std::string &id) { return id.empty() || id[0] == '~'; }),
            ids.end());
  return ids;
}

// Pointers into another document ("other.xml#x", "http://...") are not
// checked.
bool IsLocalRef(std::string_view ref) {
  size_t hash = ref.find('#');
  return !ref.empty() && (hash == std::string_view::npos || hash == 0) &&
         ref.find("://") == std::string_view::npos;
}

struct PointLocation {
  const Timeline *timeline = nullptr;
  size_t index = 0;
};

std::optional<PointLocation> LocatePoint(const Document &doc, std::string_view ref) {
  std::string id = StripHash(ref);
  for (const auto &t : doc.timelines)
    if (const TimePoint *p = t.Find(id)) return PointLocation{&t, p->index};
  return std::nullopt;
}

std::vector<Feature> LibraryFeatures(const Document &doc, const tei::TagsetFile *tagset) {
  std::vector<Feature> features = doc.AllFeatures();
  if (tagset)
    for (const auto &lib : tagset->feature_libraries)
      for (const auto &f : lib.features) features.push_back(f.feature);
  return features;
}

std::vector<TagDecl> LibraryTags(const Document &doc, const tei::TagsetFile *tagset) {
  std::vector<TagDecl> tags = doc.AllTags();
  if (tagset)
    for (const auto &lib : tagset->tag_libraries)
      tags.insert(tags.end(), lib.tags.begin(), lib.tags.end());
  return tags;
}

std::vector<NamedStructure> LibraryStructures(const Document &doc,
                                              const tei::TagsetFile *tagset) {
  std::vector<NamedStructure> out = doc.structures;
  if (tagset) out.insert(out.end(), tagset->structures.begin(), tagset->structures.end());
  return out;
}

// @ana references of the body with the location of their element.
struct AnaUse {
  std::string ref;
  std::string location;
  bool word_form = false;
};

std::vector<AnaUse> AnaUses(const std::vector<Element> &elements) {
  std::vector<AnaUse> out;
  for (const Element &e : elements) {
    const std::string *ana = e.word ? &e.word->ana : e.span ? &e.span->ana : nullptr;
    if (!ana) continue;
    bool word_form = e.group && e.group->type == "wordForm";
    for (const auto &ref : SplitWhitespace(*ana)) out.push_back({ref, e.location, word_form});
  }
  return out;
}

}  // namespace

Findings CheckIds(const Document &doc) {
  Findings out;
  std::map<std::string, int> counts;
  std::vector<std::string> order;
  for (const auto &id : DeclaredIds(doc))
    if (counts[id]++ == 0) order.push_back(id);
  for (const auto &f : doc.load_findings)
    if (f.code == "DUP_ID") out.push_back(f);
  for (const auto &id : order) {
    if (counts[id] > 1)
      out.push_back({"DUP_ID", id,
                     "identifier '" + id + "' is declared " + std::to_string(counts[id]) +
                         " times"});
    if (IsBadIdentifier(id))
      out.push_back({"BAD_ID", id, "identifier '" + id + "' contains '#' or blanks"});
  }
  return out;
}

Findings CheckRefs(const Document &doc, const tei::TagsetFile *tagset) {
  Findings out;
  std::vector<Element> elements = BodyElements(doc);
  std::set<std::string, std::less<>> declared, persons, tokens, features, ana_targets;
  for (const auto &id : DeclaredIds(doc)) declared.insert(id);
  for (const auto &p : doc.metadata.participants) persons.insert(p.id);
  for (const auto &t : doc.tokens) tokens.insert(t.id);
  for (const auto &f : LibraryFeatures(doc, tagset)) features.insert(StripHash(f.id));
  ana_targets = declared;
  for (const auto &f : features) ana_targets.insert(f);
  for (const auto &t : LibraryTags(doc, tagset)) ana_targets.insert(StripHash(t.id));
  for (const auto &s : LibraryStructures(doc, tagset)) ana_targets.insert(StripHash(s.id));
  for (const auto &e : doc.lexical_entries)
    for (const auto &f : e.forms) ana_targets.insert(f.id);

  auto check = [&](const std::string &ref, const std::string &location, const char *attribute,
                   const std::function<bool(const std::string &)> &resolves) {
    if (!IsLocalRef(ref)) return;
    std::string id = StripHash(ref);
    if (!resolves(id))
      out.push_back({"DANGLING_REF", location,
                     std::string("@") + attribute + ": '" + id + "' is not declared"});
  };
  auto in = [](const auto &set) {
    return [&set](const std::string &id) { return set.count(id) > 0; };
  };
  auto is_point = [&](const std::string &id) { return LocatePoint(doc, id).has_value(); };
  auto person_or_element = [&](const std::string &id) {
    return persons.count(id) > 0 || declared.count(id) > 0;
  };

  for (const Element &e : elements) {
    if (e.utterance && !e.utterance->who.empty())
      check(e.utterance->who, e.location, "who", in(persons));
    if (e.event) {
      if (!e.event->who.empty()) check(e.event->who, e.location, "who", in(persons));
      if (!e.event->start.empty()) check(e.event->start, e.location, "start", is_point);
      if (!e.event->end.empty()) check(e.event->end, e.location, "end", is_point);
    }
    if (e.anchor && !e.anchor->synch.empty())
      check(e.anchor->synch, e.location, "synch", is_point);
    if (e.group && !e.span && !e.group->corresp.empty())
      for (const auto &ref : SplitWhitespace(e.group->corresp))
        check(ref, e.location, "corresp", person_or_element);
    if (e.span) {
      bool word_form = e.group->type == "wordForm";
      auto target = [&](const std::string &id) {
        return word_form ? tokens.count(id) > 0 || declared.count(id) > 0
                         : is_point(id) || declared.count(id) > 0;
      };
      if (!e.span->from.empty()) check(e.span->from, e.location, "from", target);
      if (!e.span->to.empty()) check(e.span->to, e.location, "to", target);
    }
  }
  for (const AnaUse &use : AnaUses(elements))
    check(use.ref, use.location, "ana", in(ana_targets));

  for (const auto &tag : LibraryTags(doc, tagset))
    for (const auto &ref : tag.feats) check(ref, tag.id, "feats", in(features));
  for (const auto &t : doc.timelines)
    if (!t.origin().empty())
      check(t.origin(), t.id(), "origin",
            [&t](const std::string &id) { return t.Contains(id); });
  for (size_t i = 0; i < doc.metadata.applications.size(); ++i) {
    const AppInfo &app = doc.metadata.applications[i];
    std::string location =
        app.id.empty() ? "(teiHeader//application)[" + std::to_string(i + 1) + "]" : app.id;
    for (const auto &target : app.targets) check(target, location, "target", person_or_element);
  }

  std::set<std::string, std::less<>> annotation_ids;
  for (const auto &a : doc.annotations) annotation_ids.insert(a.id);
  for (const auto &a : doc.annotations) {
    if (a.body_item) continue;
    if (!a.source.empty() && !doc.FindSource(a.source))
      out.push_back({"DANGLING_REF", a.id, "source '" + a.source + "' is not declared"});
    if (!a.layer.empty() && !doc.FindLayer(a.layer))
      out.push_back({"DANGLING_REF", a.id, "layer '" + a.layer + "' is not declared"});
    if (!a.range) continue;
    if (const auto *e = std::get_if<EventInterval>(&*a.range)) {
      const Timeline *t = doc.FindTimeline(e->timeline);
      if (!t)
        out.push_back({"DANGLING_REF", a.id, "timeline '" + e->timeline + "' is not declared"});
      else
        for (const auto &p : {e->start, e->end})
          if (!t->Contains(p))
            out.push_back({"DANGLING_REF", a.id,
                           "point '" + p + "' is not on timeline '" + t->id() + "'"});
    } else if (const auto *c = std::get_if<ComponentRefs>(&*a.range)) {
      for (const auto &target : c->targets)
        if (!declared.count(target) && !tokens.count(target) && !annotation_ids.count(target))
          out.push_back({"DANGLING_REF", a.id, "component '" + target + "' is not declared"});
    }
  }
  for (const auto &w : doc.word_forms)
    for (const auto &t : w.tokens)
      if (!tokens.count(t))
        out.push_back({"DANGLING_REF", w.id, "token '" + t + "' is not declared"});
  return out;
}

Findings CheckTemporal(const Document &doc) {
  Findings out;
  for (const Element &e : BodyElements(doc)) {
    if (e.utterance) {
      std::map<const Timeline *, size_t> latest;
      std::string went_back;
      ForEachInline(e.utterance->content, [&](const Inline &in) {
        const Anchor *a = in.As<Anchor>();
        if (!a || !went_back.empty()) return;
        auto p = LocatePoint(doc, a->synch.empty() ? a->id : a->synch);
        if (!p) return;
        auto it = latest.find(p->timeline);
        if (it != latest.end() && p->index < it->second)
          went_back = p->timeline->points()[p->index].id;
        else
          latest[p->timeline] = p->index;
      });
      if (!went_back.empty())
        out.push_back({"ANCHOR_ORDER", e.location,
                       "anchor '" + went_back + "' comes before an earlier anchor in time"});
    }
    if (e.word) {
      std::string anchor;
      ForEachInline(e.word->children, [&](const Inline &in) {
        if (const Anchor *a = in.As<Anchor>(); a && anchor.empty())
          anchor = a->synch.empty() ? a->id : a->synch;
      });
      if (!anchor.empty())
        out.push_back({"ANCHOR_IN_TOKEN", e.location,
                       "anchor '" + anchor + "' inside <" + e.name +
                           ">; anchors belong between tokens"});
    }
    if (e.event && !e.event->start.empty() && !e.event->end.empty()) {
      auto s = LocatePoint(doc, e.event->start), f = LocatePoint(doc, e.event->end);
      if (s && f && s->timeline == f->timeline && s->index > f->index)
        out.push_back({"ANCHOR_ORDER", e.location,
                       "ends at '" + e.event->end + "' before it starts at '" +
                           e.event->start + "'"});
    }
  }
  for (const auto &t : doc.timelines) {
    std::optional<double> highest;
    std::string highest_id;
    for (const auto &p : t.points()) {
      if (!p.offset) continue;
      if (highest && *p.offset < *highest)
        out.push_back({"OFFSET_ORDER", p.id,
                       "offset " + FormatNumber(*p.offset) + " is smaller than " +
                           FormatNumber(*highest) + " of earlier point '" + highest_id + "'"});
      else {
        highest = p.offset;
        highest_id = p.id;
      }
    }
  }
  return out;
}

Findings CheckSpans(const Document &doc) {
  Findings out;
  std::vector<Element> elements = BodyElements(doc);
  std::map<std::string, size_t> position;
  for (size_t i = 0; i < elements.size(); ++i)
    if (!elements[i].id.empty()) position.emplace(elements[i].id, i);
  for (const Element &e : elements) {
    if (!e.span || e.span->from.empty() || e.span->to.empty()) continue;
    std::string from = StripHash(e.span->from), to = StripHash(e.span->to);
    auto pf = LocatePoint(doc, from), pt = LocatePoint(doc, to);
    bool reversed = false;
    if (pf && pt && pf->timeline == pt->timeline) {
      reversed = pf->index > pt->index;
    } else {
      auto f = position.find(from), t = position.find(to);
      reversed = f != position.end() && t != position.end() && f->second > t->second;
    }
    if (reversed)
      out.push_back({"SPAN_ORDER", e.location, "'" + from + "' comes after '" + to + "'"});
  }
  return out;
}

Findings CheckTagset(const Document &doc, const tei::TagsetFile *tagset,
                     const Registry *registry, const std::optional<std::string> &language) {
  Findings out;
  std::vector<Feature> features = LibraryFeatures(doc, tagset);
  std::vector<TagDecl> tags = LibraryTags(doc, tagset);

  // Expand tag by tag so one broken declaration does not hide the others.
  std::map<std::string, FeatureStructure> expanded;
  bool features_ok = true;
  try {
    BuildLibrary(features, {});
  } catch (const LibraryError &) {
    features_ok = false;
  }
  if (features_ok)
    for (const auto &tag : tags) {
      try {
        TagsetLibrary one = BuildLibrary(features, {tag});
        expanded.emplace(StripHash(tag.id), one.tags().front().expanded);
      } catch (const LibraryError &e) {
        for (const auto &p : e.problems())
          if (p.kind == LibraryProblem::Kind::kDuplicateFeatureName)
            out.push_back({"TAG_CONFLICT", tag.id, p.detail});
      }
    }
  std::map<std::string, FeatureStructure> structures;
  for (const auto &s : LibraryStructures(doc, tagset)) structures.emplace(StripHash(s.id), s.fs);
  std::map<std::string, const LexicalForm *> forms;
  for (const auto &e : doc.lexical_entries)
    for (const auto &f : e.forms) forms.emplace(f.id, &f);
  std::set<std::string> declared;
  for (const auto &id : DeclaredIds(doc)) declared.insert(id);
  std::set<std::string> tag_ids;
  for (const auto &t : tags) tag_ids.insert(StripHash(t.id));

  auto check_domain = [&](const FeatureStructure &fs, const std::string &location) {
    if (!registry) return;
    for (const auto &[path, value] : Flatten(fs)) {
      if (value.kind() != FSValue::Kind::kSymbol) continue;
      std::string name = path.substr(path.rfind('/') + 1);
      const DataCategory *feature = registry->FindByName(name);
      if (!feature || feature->kind != DataCategory::Kind::kComplex) continue;
      const DataCategory *v = registry->FindByName(value.text());
      if (!v) {
        out.push_back({"DOMAIN_VIOLATION", location,
                       name + "=" + value.text() + ": value is not a registered category"});
        continue;
      }
      std::optional<std::string_view> lang;
      if (language) lang = *language;
      ValueVerdict verdict = ValidateValue(*registry, feature->pid, v->pid, lang);
      if (verdict != ValueVerdict::kOk)
        out.push_back({"DOMAIN_VIOLATION", location,
                       name + "=" + value.text() + ": " + VerdictName(verdict) +
                           (language ? " for language '" + *language + "'" : "")});
    }
  };

  for (const AnaUse &use : AnaUses(BodyElements(doc))) {
    if (!IsLocalRef(use.ref)) continue;
    std::string id = StripHash(use.ref);
    if (auto it = expanded.find(id); it != expanded.end()) {
      check_domain(it->second, use.location);
    } else if (auto s = structures.find(id); s != structures.end()) {
      check_domain(s->second, use.location);
    } else if (auto f = forms.find(id); f != forms.end()) {
      FeatureStructure fs;
      for (const auto &[name, value] : f->second->grammar)
        if (!value.empty()) fs.Set(name, FSValue::Symbol(value));
      check_domain(fs, use.location);
    } else if (tag_ids.count(id)) {
      out.push_back({"UNKNOWN_TAG", use.location, "tag '" + id + "' cannot be expanded"});
    } else if (declared.count(id)) {
      out.push_back({"UNKNOWN_TAG", use.location,
                     "'" + id + "' is neither a tag nor a feature structure"});
    }
  }

  std::vector<std::string> names;
  for (const auto &f : features) names.push_back(f.name);
  if (registry)
    for (const auto &c : registry->categories()) names.push_back(c.name);
  std::set<std::string> reported;
  for (const auto &f : features) {
    if (registry && registry->FindByName(f.name)) continue;
    for (const auto &other : names)
      if (other != f.name && EqualsIgnoreCase(other, f.name) && reported.insert(f.name).second)
        out.push_back({"FEATURE_NAME_MISMATCH", f.id.empty() ? f.name : f.id,
                       "feature name '" + f.name + "' differs from '" + other +
                           "' only in case"});
  }
  return out;
}

Report ValidateAll(const Document &doc, const ValidateOptions &options,
                   const Findings &parse_findings) {
  Findings all;
  auto add = [&all](Findings f) { all.insert(all.end(), f.begin(), f.end()); };
  add(CheckIds(doc));
  add(CheckRefs(doc, options.tagset));
  add(CheckTemporal(doc));
  add(CheckSpans(doc));
  add(CheckTagset(doc, options.tagset, options.registry, options.language));
  for (const auto &level : doc.levels) add(CheckLevelCoherence(doc, level.id));
  static const std::set<std::string> kDerived = {"DUP_ID", "BAD_ID", "DANGLING_REF",
                                                 "SPAN_ORDER"};
  for (const auto &f : parse_findings)
    if (!kDerived.count(f.code)) all.push_back(f);
  return MakeReport(all, options.severities);
}

}  // namespace spoken
