// tei/writer.cc

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

#include "tei/writer.h"

#include <map>
#include <set>

#include "base/error.h"
#include "base/text-utils.h"
#include "base/xml.h"
#include "tei/fs-markup.h"
#include "tei/reader.h"
#include "tei/resolve.h"

namespace spoken {
namespace tei {

namespace {

using xml::Node;

void SetIf(Node *n, std::string_view name, const std::string &value) {
  if (!value.empty()) n->SetAttr(name, value);
}

void SetRef(Node *n, std::string_view name, const std::string &id) {
  if (!id.empty()) n->SetAttr(name, "#" + id);
}

void AddAttributes(Node *n, const xml::Attributes &attrs) {
  for (const auto &a : attrs) n->SetAttr(a.name, a.value);
}

Node TextElement(std::string name, const std::string &text) {
  Node n = Node::Element(std::move(name));
  if (!text.empty()) n.AppendText(text);
  return n;
}

void AppendAll(Node *n, const std::vector<Node> &children) {
  for (const auto &c : children) n->Append(c);
}

const std::vector<Node> &Extras(const Metadata &md, const std::string &key) {
  static const std::vector<Node> kEmpty;
  auto it = md.extras.find(key);
  return it == md.extras.end() ? kEmpty : it->second;
}

Node WriteRecording(const Recording &r) {
  Node n = Node::Element("recording");
  SetIf(&n, "xml:id", r.id);
  SetIf(&n, "type", r.type);
  AddAttributes(&n, r.extra_attributes);
  if (!r.equipment.empty()) n.AppendElement("equipment").Append(TextElement("p", r.equipment));
  if (!r.date.empty()) n.Append(TextElement("date", r.date));
  if (r.has_broadcast) {
    Node &b = n.AppendElement("broadcast");
    for (const auto &inner : r.broadcast) b.Append(WriteRecording(inner));
  }
  AppendAll(&n, r.extra_children);
  return n;
}

Node WritePerson(const Person &p) {
  Node n = Node::Element("person");
  SetIf(&n, "xml:id", p.id);
  SetIf(&n, "sex", p.sex);
  SetIf(&n, "age", p.age);
  AddAttributes(&n, p.extra_attributes);
  if (!p.name.empty() || !p.abbr.empty()) {
    Node &pn = n.AppendElement("persName");
    if (!p.name.empty()) pn.AppendText(p.name);
    if (!p.abbr.empty()) pn.Append(TextElement("abbr", p.abbr));
    pn.verbatim = true;
  }
  if (p.birth) {
    Node &b = n.AppendElement("birth");
    SetIf(&b, "when", p.birth->when);
    if (!p.birth->date.empty()) b.Append(TextElement("date", p.birth->date));
    if (!p.birth->place.empty()) {
      Node place = TextElement("name", p.birth->place);
      place.SetAttr("type", "place");
      b.Append(std::move(place));
    }
  }
  if (p.has_lang_knowledge) {
    Node &lk = n.AppendElement("langKnowledge");
    SetIf(&lk, "tags", p.lang_tags);
    for (const auto &l : p.languages) {
      Node known = TextElement("langKnown", l.label);
      SetIf(&known, "tag", l.tag);
      SetIf(&known, "level", l.level);
      lk.Append(std::move(known));
    }
  }
  AppendAll(&n, p.extra_children);
  return n;
}

Node WriteHeader(const Metadata &md) {
  Node header = Node::Element("teiHeader");
  Node &fd = header.AppendElement("fileDesc");
  Node &ts = fd.AppendElement("titleStmt");
  ts.Append(TextElement("title", md.title));
  AppendAll(&ts, Extras(md, "titleStmt"));
  Node &ps = fd.AppendElement("publicationStmt");
  if (!md.publication.empty() || Extras(md, "publicationStmt").empty())
    ps.Append(TextElement("p", md.publication));
  AppendAll(&ps, Extras(md, "publicationStmt"));
  Node &sd = fd.AppendElement("sourceDesc");
  bool has_recordings = !md.recordings.empty() || !Extras(md, "recordingStmt").empty();
  if (!md.source.empty() || (!has_recordings && Extras(md, "sourceDesc").empty()))
    sd.Append(TextElement("p", md.source));
  if (has_recordings) {
    Node &rs = sd.AppendElement("recordingStmt");
    for (const auto &r : md.recordings) rs.Append(WriteRecording(r));
    AppendAll(&rs, Extras(md, "recordingStmt"));
  }
  AppendAll(&sd, Extras(md, "sourceDesc"));
  AppendAll(&fd, Extras(md, "fileDesc"));

  bool has_apps = !md.applications.empty() || !Extras(md, "appInfo").empty();
  if (has_apps || !Extras(md, "encodingDesc").empty()) {
    Node &ed = header.AppendElement("encodingDesc");
    if (has_apps) {
      Node &ai = ed.AppendElement("appInfo");
      for (const auto &a : md.applications) {
        Node &app = ai.AppendElement("application");
        SetIf(&app, "xml:id", a.id);
        SetIf(&app, "ident", a.ident);
        SetIf(&app, "version", a.version);
        AddAttributes(&app, a.extra_attributes);
        if (!a.label.empty()) app.Append(TextElement("label", a.label));
        for (const auto &t : a.targets) app.AppendElement("ptr").SetAttr("target", t);
        AppendAll(&app, a.extra_children);
      }
      AppendAll(&ai, Extras(md, "appInfo"));
    }
    AppendAll(&ed, Extras(md, "encodingDesc"));
  }

  bool has_partic = !md.participants.empty() || !Extras(md, "particDesc").empty();
  bool has_lang = !md.language_usage.empty() || !Extras(md, "langUsage").empty();
  if (has_partic || has_lang || md.setting || !Extras(md, "profileDesc").empty()) {
    Node &pd = header.AppendElement("profileDesc");
    if (has_partic) {
      Node &pa = pd.AppendElement("particDesc");
      for (const auto &p : md.participants) pa.Append(WritePerson(p));
      AppendAll(&pa, Extras(md, "particDesc"));
    }
    if (md.setting) pd.Append(TextElement("settingDesc", *md.setting));
    if (has_lang) {
      Node &lu = pd.AppendElement("langUsage");
      for (const auto &l : md.language_usage) lu.Append(TextElement("language", l));
      AppendAll(&lu, Extras(md, "langUsage"));
    }
    AppendAll(&pd, Extras(md, "profileDesc"));
  }

  if (!md.revisions.empty() || !Extras(md, "revisionDesc").empty()) {
    Node &rd = header.AppendElement("revisionDesc");
    for (const auto &r : md.revisions) {
      Node c = TextElement("change", r.text);
      SetIf(&c, "when", r.when);
      SetIf(&c, "who", r.who);
      rd.Append(std::move(c));
    }
    AppendAll(&rd, Extras(md, "revisionDesc"));
  }
  AppendAll(&header, Extras(md, "teiHeader"));
  return header;
}

Node WriteTimeline(const Timeline &t) {
  Node n = Node::Element("timeline");
  if (!IsGeneratedId(t.id())) n.SetAttr("xml:id", t.id());
  bool unit_in_extras = false;
  for (const auto &a : t.extra_attributes()) unit_in_extras = unit_in_extras || a.name == "unit";
  if (!unit_in_extras) n.SetAttr("unit", UnitName(t.unit()));
  SetRef(&n, "origin", t.origin());
  AddAttributes(&n, t.extra_attributes());
  for (const auto &p : t.points()) {
    Node &w = n.AppendElement("when");
    w.SetAttr("xml:id", p.id);
    if (p.offset) w.SetAttr("interval", FormatNumber(*p.offset));
    AddAttributes(&w, p.extra_attributes);
  }
  return n;
}

Node WriteAnchor(const Anchor &a) {
  Node n = Node::Element("anchor");
  SetIf(&n, "xml:id", a.id);
  SetRef(&n, "synch", a.synch);
  AddAttributes(&n, a.extra_attributes);
  return n;
}

Node WriteEvent(const Event &e) {
  Node n = Node::Element(EventElementName(e.kind));
  SetIf(&n, "xml:id", e.id);
  SetRef(&n, "who", e.who);
  SetIf(&n, "type", e.type);
  SetRef(&n, "start", e.start);
  SetRef(&n, "end", e.end);
  SetIf(&n, "n", e.label);
  AddAttributes(&n, e.extra_attributes);
  if (e.desc) {
    Node d = TextElement("desc", *e.desc);
    d.verbatim = true;
    n.Append(std::move(d));
  }
  AppendAll(&n, e.extra_children);
  return n;
}

void WriteInline(const std::vector<Inline> &content, Node *parent);

Node WriteInlineItem(const Inline &item) {
  if (auto *t = item.As<TextRun>()) return Node::Text(t->text);
  if (auto *a = item.As<Anchor>()) return WriteAnchor(*a);
  if (auto *e = item.As<Event>()) return WriteEvent(*e);
  if (auto *s = item.As<Seg>()) {
    Node n = Node::Element("seg");
    SetIf(&n, "xml:id", s->id);
    SetIf(&n, "type", s->type);
    SetIf(&n, "subtype", s->subtype);
    AddAttributes(&n, s->extra_attributes);
    WriteInline(s->children, &n);
    return n;
  }
  if (auto *w = item.As<Word>()) {
    Node n = Node::Element(w->element);
    SetIf(&n, "xml:id", w->id);
    SetIf(&n, "ana", w->ana);
    AddAttributes(&n, w->extra_attributes);
    WriteInline(w->children, &n);
    return n;
  }
  return item.As<Opaque>()->node;
}

void WriteInline(const std::vector<Inline> &content, Node *parent) {
  for (const auto &item : content) parent->Append(WriteInlineItem(item));
  // Whitespace inside mixed content is data; never re-indent it.
  parent->verbatim = true;
}

Node WriteUtterance(const Utterance &u) {
  Node n = Node::Element("u");
  SetIf(&n, "xml:id", u.id);
  SetRef(&n, "who", u.who);
  SetIf(&n, "n", u.label);
  AddAttributes(&n, u.extra_attributes);
  WriteInline(u.content, &n);
  return n;
}

Node WriteSpanGroup(const SpanGroup &g) {
  Node n = Node::Element("spanGrp");
  SetIf(&n, "xml:id", g.id);
  SetIf(&n, "type", g.type);
  SetIf(&n, "corresp", g.corresp);
  SetIf(&n, "n", g.label);
  AddAttributes(&n, g.extra_attributes);
  for (const auto &s : g.spans) {
    Node sp = TextElement("span", s.text);
    SetIf(&sp, "xml:id", s.id);
    SetIf(&sp, "from", s.from);
    SetIf(&sp, "to", s.to);
    SetIf(&sp, "ana", s.ana);
    AddAttributes(&sp, s.extra_attributes);
    n.Append(std::move(sp));
  }
  return n;
}

Node WriteBodyItem(const BodyItem &item) {
  if (auto *u = std::get_if<Utterance>(&item)) return WriteUtterance(*u);
  if (auto *e = std::get_if<Event>(&item)) return WriteEvent(*e);
  if (auto *a = std::get_if<Anchor>(&item)) return WriteAnchor(*a);
  if (auto *p = std::get_if<Paragraph>(&item)) {
    Node n = Node::Element("p");
    SetIf(&n, "xml:id", p->id);
    AddAttributes(&n, p->extra_attributes);
    WriteInline(p->content, &n);
    return n;
  }
  if (auto *g = std::get_if<SpanGroup>(&item)) return WriteSpanGroup(*g);
  return std::get<Opaque>(item).node;
}

// Body items for annotations that exist only in the pivot, one group per
// layer in layer order.
std::vector<BodyItem> SynthesizeItems(const Document &doc) {
  std::map<std::string, std::vector<const Annotation *>> by_layer;
  std::set<std::string> layers_in_body;
  for (const auto &a : doc.annotations) {
    if (a.body_item) layers_in_body.insert(a.layer);
    else by_layer[a.layer].push_back(&a);
  }
  // Layers can also be kept by empty span groups already in the body.
  for (const auto &item : doc.transcript.body)
    if (auto *g = std::get_if<SpanGroup>(&item))
      layers_in_body.insert(g->label.empty()
                                ? DefaultLayerId(g->type.empty() ? "span" : g->type,
                                                 StripHash(g->corresp))
                                : g->label);

  std::vector<Layer> layers = doc.layers;
  for (const auto &[id, anns] : by_layer) {
    if (doc.FindLayer(id)) continue;
    Layer l;
    l.id = id;
    l.category = anns[0]->qualifiers.empty() ? "" : anns[0]->qualifiers[0].feature.text;
    layers.push_back(l);
  }

  std::vector<BodyItem> out;
  for (const Layer &layer : layers) {
    auto it = by_layer.find(layer.id);
    bool has = it != by_layer.end();
    if (!has && layers_in_body.count(layer.id)) continue;
    std::string category = layer.category.empty() ? "span" : layer.category;
    std::string label =
        layer.id == DefaultLayerId(category, layer.speaker) ? "" : layer.id;
    std::string element = ElementOfCategory(category);
    if (!has || element.empty()) {
      SpanGroup g;
      g.type = category;
      if (!layer.speaker.empty()) g.corresp = "#" + layer.speaker;
      g.label = label;
      if (has) {
        for (const Annotation *a : it->second) {
          Span s;
          if (a->range) {
            if (auto *e = std::get_if<EventInterval>(&*a->range)) {
              s.from = "#" + e->start;
              s.to = "#" + e->end;
            } else if (auto *c = std::get_if<ComponentRefs>(&*a->range)) {
              if (!c->targets.empty()) {
                s.from = "#" + c->targets.front();
                s.to = "#" + c->targets.back();
              }
            }
          }
          if (!a->qualifiers.empty()) s.text = a->qualifiers[0].value.text;
          g.spans.push_back(std::move(s));
        }
      }
      out.push_back(std::move(g));
      continue;
    }
    for (const Annotation *a : it->second) {
      std::string value = a->qualifiers.empty() ? "" : a->qualifiers[0].value.text;
      const EventInterval *e = nullptr;
      if (a->range) e = std::get_if<EventInterval>(&*a->range);
      if (element == "u") {
        Utterance u;
        u.who = layer.speaker;
        u.label = label;
        if (e) u.content.push_back({Anchor{"", e->start, {}}});
        if (!value.empty()) u.content.push_back({TextRun{value}});
        if (e) u.content.push_back({Anchor{"", e->end, {}}});
        out.push_back(std::move(u));
      } else {
        Event ev;
        ev.kind = *ParseEventElement(element);
        ev.who = layer.speaker;
        ev.label = label;
        if (e) {
          ev.start = e->start;
          ev.end = e->end;
        }
        ev.desc = value;
        out.push_back(std::move(ev));
      }
    }
  }
  return out;
}

Node WriteBack(const Document &doc) {
  Node back = Node::Element("back");
  for (const auto &l : doc.feature_libraries) back.Append(WriteFLib(l));
  for (const auto &l : doc.tag_libraries) back.Append(WriteFvLib(l));
  for (const auto &s : doc.structures) {
    Node fs = WriteFs(s.fs);
    if (!s.id.empty()) fs.SetAttr("xml:id", s.id);
    back.Append(std::move(fs));
  }
  for (const auto &e : doc.lexical_entries) {
    Node &entry = back.AppendElement("entry");
    SetIf(&entry, "xml:id", e.id);
    for (const auto &f : e.forms) {
      Node &form = entry.AppendElement("form");
      SetIf(&form, "type", f.type);
      SetIf(&form, "xml:id", f.id);
      if (!f.orth.empty()) form.Append(TextElement("orth", f.orth));
      if (!f.grammar.empty()) {
        Node &gg = form.AppendElement("gramGrp");
        for (const auto &[name, value] : f.grammar) gg.Append(TextElement(name, value));
      }
      AppendAll(&form, f.extra_children);
    }
    AppendAll(&entry, e.extra_children);
  }
  AppendAll(&back, doc.back_extras);
  return back;
}

bool HasSyntheticPoints(const Document &doc) {
  for (const auto &t : doc.timelines)
    if (t.HasSyntheticPoints()) return true;
  return false;
}

}  // namespace

std::string SerializeDocument(const Document &input, const SerializeOptions &options) {
  const Document *doc = &input;
  Document materialized;
  if (HasSyntheticPoints(input)) {
    if (!options.materialize_timeline)
      throw Error(
          "the document contains synthetic time points from implicit sequencing; "
          "materialize the timeline to write them");
    materialized = MaterializeTimeline(input);
    doc = &materialized;
  }

  Node root = Node::Element("TEI");
  root.SetAttr("xmlns", kTeiNamespace);
  root.Append(WriteHeader(doc->metadata));
  Node &text = root.AppendElement("text");
  for (const auto &t : doc->timelines)
    if (!t.derived()) text.Append(WriteTimeline(t));
  Node &body = text.AppendElement("body");
  AddAttributes(&body, doc->transcript.body_attributes);
  for (const auto &item : doc->transcript.body) body.Append(WriteBodyItem(item));
  for (const auto &item : SynthesizeItems(*doc)) body.Append(WriteBodyItem(item));
  Node back = WriteBack(*doc);
  if (back.HasElementChildren()) text.Append(std::move(back));
  return xml::Write(root);
}

Document MaterializeTimeline(const Document &doc) {
  Document out = doc;
  std::set<std::string> taken;
  for (const auto &t : out.timelines)
    for (const auto &p : t.points()) taken.insert(p.id);
  std::map<std::string, std::string> renamed;
  for (auto &t : out.timelines) {
    for (size_t i = 0; i < t.size(); ++i) {
      const TimePoint &p = t.points()[i];
      if (!p.synthetic) continue;
      std::string base = p.id.substr(p.id.rfind('~') == 0 ? 1 : 0);
      std::string id = base;
      for (int k = 2; taken.count(id); ++k) id = base + "_" + std::to_string(k);
      taken.insert(id);
      renamed[p.id] = id;
      t.RenamePoint(i, id);
      t.mutable_point(i).synthetic = false;
    }
  }
  if (renamed.empty()) return out;

  std::map<size_t, std::vector<Anchor>> before, after;

  for (auto &a : out.annotations) {
    if (!a.range) continue;
    auto *e = std::get_if<EventInterval>(&*a.range);
    if (!e) continue;
    bool start_new = renamed.count(e->start) > 0, end_new = renamed.count(e->end) > 0;
    if (start_new) e->start = renamed[e->start];
    if (end_new) e->end = renamed[e->end];
    if (!a.body_item || !(start_new || end_new)) continue;
    const Timeline *t = out.FindTimeline(e->timeline);
    bool derived = t && t->derived();
    BodyItem &item = out.transcript.body[*a.body_item];
    if (auto *u = std::get_if<Utterance>(&item)) {
      auto anchor = [&](const std::string &id) {
        return derived ? Anchor{id, "", {}} : Anchor{"", id, {}};
      };
      if (start_new) u->content.insert(u->content.begin(), {anchor(e->start)});
      if (end_new) u->content.push_back({anchor(e->end)});
    } else if (auto *ev = std::get_if<Event>(&item)) {
      ev->start = e->start;
      ev->end = e->end;
      // Points of the anchor timeline exist only where an anchor declares
      // them, so the event gets declarations next to it.
      if (derived) {
        if (start_new) before[*a.body_item].push_back(Anchor{e->start, "", {}});
        if (end_new) after[*a.body_item].push_back(Anchor{e->end, "", {}});
      }
    }
  }
  if (before.empty() && after.empty()) return out;
  std::vector<BodyItem> body;
  std::vector<size_t> new_index(out.transcript.body.size());
  for (size_t i = 0; i < out.transcript.body.size(); ++i) {
    for (auto &anchor : before[i]) body.push_back(std::move(anchor));
    new_index[i] = body.size();
    body.push_back(std::move(out.transcript.body[i]));
    for (auto &anchor : after[i]) body.push_back(std::move(anchor));
  }
  out.transcript.body = std::move(body);
  for (auto &a : out.annotations)
    if (a.body_item) a.body_item = new_index[*a.body_item];
  return out;
}

}  // namespace tei
}  // namespace spoken
