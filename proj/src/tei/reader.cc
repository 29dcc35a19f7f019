// tei/reader.cc

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

#include "tei/reader.h"

#include <initializer_list>

#include "base/text-utils.h"
#include "base/xml.h"
#include "tei/fs-markup.h"
#include "tei/resolve.h"

namespace spoken {
namespace tei {

const char kTeiNamespace[] = "http://www.tei-c.org/ns/1.0";

namespace {

using xml::Node;

xml::Attributes ExtraAttributes(const Node &n, std::initializer_list<const char *> known) {
  xml::Attributes out;
  for (const auto &a : n.attributes) {
    bool is_known = false;
    for (const char *k : known) is_known = is_known || a.name == k;
    if (!is_known) out.push_back(a);
  }
  return out;
}

Node Preserved(const Node &n) {
  Node copy = n;
  copy.verbatim = true;
  return copy;
}

std::string Text(const Node &n) { return NormalizeSpace(n.TextContent()); }

const Node *Child(const Node &n, std::string_view name) {
  for (const auto &c : n.children)
    if (c.IsElement(name)) return &c;
  return nullptr;
}

class Reader {
 public:
  explicit Reader(Findings *warnings) : warnings_(warnings) {}

  Document Read(const Node &root);

 private:
  void Warn(std::string code, const Node &n, std::string message) {
    warnings_->push_back({std::move(code), "line " + std::to_string(n.line),
                          std::move(message)});
  }

  void ReadHeader(const Node &header, Metadata *md);
  void ReadFileDesc(const Node &fd, Metadata *md);
  void ReadEncodingDesc(const Node &ed, Metadata *md);
  void ReadProfileDesc(const Node &pd, Metadata *md);
  Recording ReadRecording(const Node &r);
  AppInfo ReadApplication(const Node &a);
  Person ReadPerson(const Node &p);

  void ReadText(const Node &text, Document *doc);
  void ReadTimeline(const Node &tl, Document *doc);
  void ReadBody(const Node &body, Document *doc);
  void ReadBack(const Node &back, Document *doc);

  std::vector<Inline> ReadInline(const Node &parent);
  Event ReadEvent(const Node &n, Event::Kind kind);
  Anchor ReadAnchor(const Node &n);
  Utterance ReadUtterance(const Node &n);
  SpanGroup ReadSpanGroup(const Node &n);
  LexicalEntry ReadEntry(const Node &n);

  Findings *warnings_;
  int unnamed_timelines_ = 0;
};

Document Reader::Read(const Node &root) {
  if (root.name != "TEI" && root.name != "TEI.2")
    throw ParseError("root element is <" + root.name + ">, expected <TEI>", root.line);
  const std::string *ns = root.Attr("xmlns");
  if (!ns) Warn("NO_NAMESPACE", root, "TEI namespace not declared");
  else if (*ns != kTeiNamespace)
    Warn("NO_NAMESPACE", root, "unexpected namespace '" + *ns + "'");
  const Node *header = Child(root, "teiHeader");
  if (!header) throw ParseError("missing <teiHeader>", root.line);
  Document doc;
  ReadHeader(*header, &doc.metadata);
  for (const auto &c : root.children) {
    if (c.IsElement("text")) ReadText(c, &doc);
    else if (c.is_element() && !c.IsElement("teiHeader"))
      doc.back_extras.push_back(Preserved(c));
  }
  return doc;
}

void Reader::ReadHeader(const Node &header, Metadata *md) {
  const Node *fd = Child(header, "fileDesc");
  if (!fd) throw ParseError("missing <fileDesc> in the header", header.line);
  for (const auto &c : header.children) {
    if (!c.is_element()) continue;
    if (c.name == "fileDesc") {
      ReadFileDesc(c, md);
    } else if (c.name == "encodingDesc") {
      ReadEncodingDesc(c, md);
    } else if (c.name == "profileDesc") {
      ReadProfileDesc(c, md);
    } else if (c.name == "revisionDesc") {
      for (const auto &ch : c.children) {
        if (ch.IsElement("change"))
          md->revisions.push_back({ch.AttrOr("when"), ch.AttrOr("who"), Text(ch)});
        else if (ch.is_element())
          md->extras["revisionDesc"].push_back(Preserved(ch));
      }
    } else {
      md->extras["teiHeader"].push_back(Preserved(c));
    }
  }
}

void Reader::ReadFileDesc(const Node &fd, Metadata *md) {
  bool title = false, publication = false, source = false;
  for (const auto &c : fd.children) {
    if (!c.is_element()) continue;
    if (c.name == "titleStmt") {
      title = true;
      for (const auto &ch : c.children) {
        if (ch.IsElement("title") && md->title.empty()) md->title = Text(ch);
        else if (ch.is_element()) md->extras["titleStmt"].push_back(Preserved(ch));
      }
    } else if (c.name == "publicationStmt") {
      publication = true;
      for (const auto &ch : c.children) {
        if (ch.IsElement("p") && md->publication.empty()) md->publication = Text(ch);
        else if (ch.is_element()) md->extras["publicationStmt"].push_back(Preserved(ch));
      }
    } else if (c.name == "sourceDesc") {
      source = true;
      for (const auto &ch : c.children) {
        if (ch.IsElement("p") && md->source.empty()) {
          md->source = Text(ch);
        } else if (ch.IsElement("recordingStmt")) {
          for (const auto &r : ch.children) {
            if (r.IsElement("recording")) md->recordings.push_back(ReadRecording(r));
            else if (r.is_element()) md->extras["recordingStmt"].push_back(Preserved(r));
          }
        } else if (ch.is_element()) {
          md->extras["sourceDesc"].push_back(Preserved(ch));
        }
      }
    } else {
      md->extras["fileDesc"].push_back(Preserved(c));
    }
  }
  if (!title) Warn("MISSING_METADATA", fd, "file description lacks <titleStmt>");
  if (!publication) Warn("MISSING_METADATA", fd, "file description lacks <publicationStmt>");
  if (!source) Warn("MISSING_METADATA", fd, "file description lacks <sourceDesc>");
}

Recording Reader::ReadRecording(const Node &r) {
  Recording rec;
  rec.id = r.AttrOr("xml:id");
  rec.type = r.AttrOr("type");
  rec.extra_attributes = ExtraAttributes(r, {"xml:id", "type"});
  for (const auto &c : r.children) {
    if (!c.is_element()) continue;
    if (c.name == "equipment") {
      rec.equipment = Text(c);
    } else if (c.name == "date") {
      rec.date = Text(c);
    } else if (c.name == "broadcast") {
      rec.has_broadcast = true;
      for (const auto &b : c.children) {
        if (b.IsElement("recording")) rec.broadcast.push_back(ReadRecording(b));
        else if (b.is_element()) rec.extra_children.push_back(Preserved(b));
      }
    } else {
      rec.extra_children.push_back(Preserved(c));
    }
  }
  return rec;
}

void Reader::ReadEncodingDesc(const Node &ed, Metadata *md) {
  for (const auto &c : ed.children) {
    if (!c.is_element()) continue;
    if (c.name == "appInfo") {
      for (const auto &a : c.children) {
        if (a.IsElement("application")) md->applications.push_back(ReadApplication(a));
        else if (a.is_element()) md->extras["appInfo"].push_back(Preserved(a));
      }
    } else {
      md->extras["encodingDesc"].push_back(Preserved(c));
    }
  }
}

AppInfo Reader::ReadApplication(const Node &a) {
  AppInfo app;
  app.id = a.AttrOr("xml:id");
  app.ident = a.AttrOr("ident");
  app.version = a.AttrOr("version");
  app.extra_attributes = ExtraAttributes(a, {"xml:id", "ident", "version"});
  for (const auto &c : a.children) {
    if (c.IsElement("label") && app.label.empty()) app.label = Text(c);
    else if (c.IsElement("ptr") && c.Attr("target") && c.attributes.size() == 1)
      app.targets.push_back(c.AttrOr("target"));
    else if (c.is_element()) app.extra_children.push_back(Preserved(c));
  }
  return app;
}

void Reader::ReadProfileDesc(const Node &pd, Metadata *md) {
  for (const auto &c : pd.children) {
    if (!c.is_element()) continue;
    // "partDesc" is how the element is sometimes misspelled.
    if (c.name == "particDesc" || c.name == "partDesc") {
      for (const auto &p : c.children) {
        if (p.IsElement("person")) md->participants.push_back(ReadPerson(p));
        else if (p.is_element()) md->extras["particDesc"].push_back(Preserved(p));
      }
    } else if (c.name == "settingDesc" && !md->setting) {
      md->setting = Text(c);
    } else if (c.name == "langUsage") {
      for (const auto &l : c.children) {
        if (l.IsElement("language")) md->language_usage.push_back(Text(l));
        else if (l.is_element()) md->extras["langUsage"].push_back(Preserved(l));
      }
    } else {
      md->extras["profileDesc"].push_back(Preserved(c));
    }
  }
}

Person Reader::ReadPerson(const Node &p) {
  Person person;
  person.id = p.AttrOr("xml:id");
  person.sex = p.AttrOr("sex");
  person.age = p.AttrOr("age");
  person.extra_attributes = ExtraAttributes(p, {"xml:id", "sex", "age"});
  for (const auto &c : p.children) {
    if (!c.is_element()) continue;
    if (c.name == "persName" && c.attributes.empty()) {
      std::string name;
      for (const auto &n : c.children) {
        if (n.IsElement("abbr")) person.abbr = Text(n);
        else if (n.is_text()) name += n.text;
        else if (n.is_element()) name += n.TextContent();
      }
      person.name = NormalizeSpace(name);
    } else if (c.name == "birth" && !person.birth) {
      Birth b;
      b.when = c.AttrOr("when");
      for (const auto &n : c.children) {
        if (n.IsElement("date")) b.date = Text(n);
        else if (n.IsElement("name") || n.IsElement("placeName")) b.place = Text(n);
      }
      person.birth = b;
    } else if (c.name == "langKnowledge") {
      person.has_lang_knowledge = true;
      person.lang_tags = c.AttrOr("tags");
      for (const auto &n : c.children)
        if (n.IsElement("langKnown"))
          person.languages.push_back({n.AttrOr("tag"), n.AttrOr("level"), Text(n)});
    } else {
      person.extra_children.push_back(Preserved(c));
    }
  }
  return person;
}

void Reader::ReadText(const Node &text, Document *doc) {
  for (const auto &c : text.children) {
    if (!c.is_element()) continue;
    if (c.name == "timeline") ReadTimeline(c, doc);
    else if (c.name == "body") ReadBody(c, doc);
    else if (c.name == "back") ReadBack(c, doc);
    else doc->back_extras.push_back(Preserved(c));
  }
}

void Reader::ReadTimeline(const Node &tl, Document *doc) {
  std::string id = tl.AttrOr("xml:id");
  if (id.empty()) {
    id = "~timeline";
    if (unnamed_timelines_++ > 0) id += std::to_string(unnamed_timelines_);
  }
  if (doc->FindTimeline(id)) {
    Warn("DUP_ID", tl, "timeline '" + id + "' declared twice; the second is ignored");
    return;
  }
  Timeline t(id, TimeUnit::kSymbolic);
  std::string unit = tl.AttrOr("unit");
  if (auto u = ParseUnit(unit)) {
    t.set_unit(*u);
  } else if (!unit.empty()) {
    Warn("UNKNOWN_UNIT", tl, "unknown time unit '" + unit + "', read as symbolic");
    t.extra_attributes().push_back({"unit", unit});
  }
  t.set_origin(StripHash(tl.AttrOr("origin")));
  for (const auto &a : ExtraAttributes(tl, {"xml:id", "unit", "origin"}))
    t.extra_attributes().push_back(a);
  for (const auto &w : tl.children) {
    if (!w.IsElement("when")) continue;
    std::string pid = w.AttrOr("xml:id");
    if (pid.empty()) {
      Warn("UNNAMED_POINT", w, "<when> without xml:id ignored");
      continue;
    }
    if (t.Contains(pid)) {
      doc->load_findings.push_back(
          {"DUP_ID", pid, "time point '" + pid + "' declared twice"});
      continue;
    }
    std::optional<double> offset;
    if (const std::string *iv = w.Attr("interval")) {
      offset = ParseNumber(Trim(*iv));
      if (!offset || *offset < 0) {
        Warn("BAD_OFFSET", w, "offset '" + *iv + "' of '" + pid + "' ignored");
        offset.reset();
      }
    }
    t.AddPoint(pid, offset);
    TimePoint &p = t.mutable_point(t.size() - 1);
    p.extra_attributes = ExtraAttributes(w, {"xml:id", "interval"});
  }
  doc->timelines.push_back(std::move(t));
}

void Reader::ReadBody(const Node &body, Document *doc) {
  auto &items = doc->transcript.body;
  doc->transcript.body_attributes = body.attributes;
  for (const auto &c : body.children) {
    if (c.kind == Node::Kind::kComment) continue;
    if (c.is_text()) {
      if (!IsBlank(c.text)) items.push_back(Opaque{c});
      continue;
    }
    if (c.name == "u") {
      items.push_back(ReadUtterance(c));
    } else if (auto kind = ParseEventElement(c.name)) {
      items.push_back(ReadEvent(c, *kind));
    } else if (c.name == "anchor") {
      items.push_back(ReadAnchor(c));
    } else if (c.name == "p") {
      Paragraph p;
      p.id = c.AttrOr("xml:id");
      p.extra_attributes = ExtraAttributes(c, {"xml:id"});
      p.content = ReadInline(c);
      items.push_back(std::move(p));
    } else if (c.name == "spanGrp") {
      items.push_back(ReadSpanGroup(c));
    } else if (c.name == "timeline") {
      ReadTimeline(c, doc);
    } else {
      items.push_back(Opaque{Preserved(c)});
    }
  }
}

Utterance Reader::ReadUtterance(const Node &n) {
  Utterance u;
  u.id = n.AttrOr("xml:id");
  u.who = StripHash(n.AttrOr("who"));
  u.label = n.AttrOr("n");
  u.extra_attributes = ExtraAttributes(n, {"xml:id", "who", "n"});
  u.content = ReadInline(n);
  return u;
}

Event Reader::ReadEvent(const Node &n, Event::Kind kind) {
  Event e;
  e.kind = kind;
  e.id = n.AttrOr("xml:id");
  e.who = StripHash(n.AttrOr("who"));
  e.type = n.AttrOr("type");
  e.start = StripHash(n.AttrOr("start"));
  e.end = StripHash(n.AttrOr("end"));
  e.label = n.AttrOr("n");
  e.extra_attributes =
      ExtraAttributes(n, {"xml:id", "who", "type", "start", "end", "n"});
  for (const auto &c : n.children) {
    if (c.IsElement("desc") && !e.desc && c.attributes.empty()) e.desc = Text(c);
    else if (c.is_element()) e.extra_children.push_back(Preserved(c));
  }
  return e;
}

Anchor Reader::ReadAnchor(const Node &n) {
  Anchor a;
  a.id = n.AttrOr("xml:id");
  a.synch = StripHash(n.AttrOr("synch"));
  a.extra_attributes = ExtraAttributes(n, {"xml:id", "synch"});
  return a;
}

std::vector<Inline> Reader::ReadInline(const Node &parent) {
  std::vector<Inline> out;
  for (const auto &c : parent.children) {
    if (c.kind == Node::Kind::kComment) continue;
    if (c.is_text()) {
      if (!out.empty())
        if (auto *t = out.back().As<TextRun>()) {
          t->text += c.text;
          continue;
        }
      out.push_back({TextRun{c.text}});
      continue;
    }
    if (c.name == "anchor") {
      out.push_back({ReadAnchor(c)});
    } else if (auto kind = ParseEventElement(c.name)) {
      out.push_back({ReadEvent(c, *kind)});
    } else if (c.name == "seg") {
      Seg s;
      s.id = c.AttrOr("xml:id");
      s.type = c.AttrOr("type");
      s.subtype = c.AttrOr("subtype");
      s.extra_attributes = ExtraAttributes(c, {"xml:id", "type", "subtype"});
      s.children = ReadInline(c);
      out.push_back({std::move(s)});
    } else if (c.name == "w" || c.name == "pc") {
      Word w;
      w.element = c.name;
      w.id = c.AttrOr("xml:id");
      w.ana = c.AttrOr("ana");
      w.extra_attributes = ExtraAttributes(c, {"xml:id", "ana"});
      w.children = ReadInline(c);
      out.push_back({std::move(w)});
    } else {
      out.push_back({Opaque{Preserved(c)}});
    }
  }
  return out;
}

SpanGroup Reader::ReadSpanGroup(const Node &n) {
  SpanGroup g;
  g.id = n.AttrOr("xml:id");
  g.type = n.AttrOr("type");
  g.corresp = n.AttrOr("corresp");
  g.label = n.AttrOr("n");
  g.extra_attributes = ExtraAttributes(n, {"xml:id", "type", "corresp", "n"});
  for (const auto &c : n.children) {
    if (c.IsElement("span")) {
      Span s;
      s.id = c.AttrOr("xml:id");
      s.from = c.AttrOr("from");
      s.to = c.AttrOr("to");
      s.ana = c.AttrOr("ana");
      s.text = Text(c);
      s.extra_attributes = ExtraAttributes(c, {"xml:id", "from", "to", "ana"});
      g.spans.push_back(std::move(s));
    } else if (c.is_element()) {
      Warn("UNSUPPORTED", c, "<" + c.name + "> inside <spanGrp> ignored");
    }
  }
  return g;
}

LexicalEntry Reader::ReadEntry(const Node &n) {
  LexicalEntry entry;
  entry.id = n.AttrOr("xml:id");
  for (const auto &c : n.children) {
    if (!c.is_element()) continue;
    if (c.name != "form") {
      entry.extra_children.push_back(Preserved(c));
      continue;
    }
    LexicalForm form;
    form.id = c.AttrOr("xml:id");
    form.type = c.AttrOr("type");
    for (const auto &f : c.children) {
      if (!f.is_element()) continue;
      if (f.name == "orth" && form.orth.empty()) {
        form.orth = Text(f);
      } else if (f.name == "gramGrp") {
        for (const auto &g : f.children)
          if (g.is_element()) form.grammar.emplace_back(g.name, Text(g));
      } else {
        form.extra_children.push_back(Preserved(f));
      }
    }
    entry.forms.push_back(std::move(form));
  }
  return entry;
}

void Reader::ReadBack(const Node &back, Document *doc) {
  for (const auto &c : back.children) {
    if (!c.is_element()) continue;
    if (c.name == "fLib") {
      doc->feature_libraries.push_back(ParseFLib(c));
    } else if (c.name == "fvLib") {
      doc->tag_libraries.push_back(ParseFvLib(c));
    } else if (c.name == "fs") {
      FeatureStructure fs = ParseFs(c);
      doc->structures.push_back({fs.id(), fs});
    } else if (c.name == "entry") {
      doc->lexical_entries.push_back(ReadEntry(c));
    } else {
      doc->back_extras.push_back(Preserved(c));
    }
  }
}

}  // namespace

ParseResult ParseDocument(std::string_view text) {
  ParseResult result;
  Node root = xml::Parse(text);
  Reader reader(&result.warnings);
  Document doc = reader.Read(root);
  result.document = ResolveAnchors(doc, &result.warnings);
  return result;
}

}  // namespace tei
}  // namespace spoken
