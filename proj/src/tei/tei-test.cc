// tei/tei-test.cc

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

#include <random>

#include "base/text-utils.h"
#include "base/xml.h"
#include "core/annotation-ops.h"
#include "doctest.h"
#include "tei/conventions.h"
#include "tei/fs-markup.h"
#include "tei/reader.h"
#include "tei/resolve.h"
#include "tei/writer.h"

namespace spoken {
namespace tei {
namespace {

const char *const kFixtures[] = {
    "dialogue.xml",      "intext_overlap.xml", "recording.xml",   "person.xml",
    "tags.xml",       "category_flib.xml",  "chat.xml",        "pomme_de_terre.xml",
    "shared_token.xml", "seg.xml",          "raw_text.xml",    "unanchored.xml",
    "empty_body.xml", "dangling_synch.xml", "offset_order.xml", "single_utterance.xml"};

ParseResult Load(const std::string &name) { return ParseDocument(ReadFile(name)); }

bool HasFinding(const Findings &findings, const std::string &code,
                const std::string &needle) {
  for (const auto &f : findings)
    if (f.code == code && (f.location + " " + f.message).find(needle) != std::string::npos)
      return true;
  return false;
}

const EventInterval &IntervalOf(const Document &doc, const std::string &id) {
  const Annotation *a = doc.FindAnnotation(id);
  REQUIRE(a);
  REQUIRE(a->range);
  const auto *e = std::get_if<EventInterval>(&*a->range);
  REQUIRE(e);
  return *e;
}

std::string Replace(std::string text, const std::string &from, const std::string &to) {
  size_t at = text.find(from);
  REQUIRE(at != std::string::npos);
  return text.replace(at, from.size(), to);
}

std::string Header(const std::string &extra = "") {
  return "<TEI xmlns=\"http://www.tei-c.org/ns/1.0\"><teiHeader><fileDesc>"
         "<titleStmt><title>t</title></titleStmt>"
         "<publicationStmt><p>p</p></publicationStmt>"
         "<sourceDesc><p>s</p></sourceDesc></fileDesc>" +
         extra + "</teiHeader>";
}

std::string Wrap(const std::string &text_content) {
  return Header() + "<text>" + text_content + "</text></TEI>";
}

// Leftmost "((X))" removal with X free of parentheses, written as a scanner.
std::string StripDoubleParens(const std::string &s) {
  std::string out;
  size_t i = 0;
  while (i < s.size()) {
    if (s.compare(i, 2, "((") == 0) {
      size_t j = i + 2;
      while (j < s.size() && s[j] != '(' && s[j] != ')') ++j;
      if (s.compare(j, 2, "))") == 0) {
        i = j + 2;
        continue;
      }
    }
    out += s[i++];
  }
  return out;
}

}  // namespace

TEST_CASE("dialogue document") {
  auto [doc, warnings] = Load("dialogue.xml");
  CHECK(warnings.empty());
  CHECK(doc.load_findings.empty());
  REQUIRE(doc.metadata.participants.size() == 2);
  CHECK(doc.metadata.participants[0].abbr == "Peter Black");
  CHECK(doc.metadata.participants[1].abbr == "Judith White");
  CHECK(doc.metadata.title == "Title");

  REQUIRE(doc.timelines.size() == 1);
  const Timeline &t = doc.timelines[0];
  CHECK(t.unit() == TimeUnit::kMs);
  std::vector<std::string> ids;
  for (const auto &p : t.points()) ids.push_back(p.id);
  CHECK(ids == std::vector<std::string>{"T1", "T2", "T3", "T4", "T4bar", "T5", "T6", "T7"});

  int utterances = 0, incidents = 0;
  for (const auto &item : doc.transcript.body) {
    if (std::holds_alternative<Utterance>(item)) ++utterances;
    if (auto *e = std::get_if<Event>(&item)) {
      CHECK(e->kind == Event::Kind::kIncident);
      CHECK(e->desc == "right hand raised");
      CHECK(e->start == "T3");
      CHECK(e->end == "T5");
      ++incidents;
    }
  }
  CHECK(utterances == 3);
  CHECK(incidents == 1);

  const EventInterval &spk1 = IntervalOf(doc, "u_SPK1#1");
  CHECK(spk1.start == "T3");
  CHECK(spk1.end == "T6");
  const EventInterval &inc = IntervalOf(doc, "incident_SPK0#1");
  CHECK(inc.start == "T3");
  CHECK(inc.end == "T5");
  CHECK(IntervalOf(doc, "u_SPK0#1").start == "T1");
  CHECK(IntervalOf(doc, "u_SPK0#1").end == "T4");
  CHECK(IntervalOf(doc, "u_SPK0#2").start == "T6");
  CHECK(IntervalOf(doc, "u_SPK0#2").end == "T7");

  const Annotation *a = doc.FindAnnotation("u_SPK1#1");
  REQUIRE(a->qualifiers.size() == 1);
  CHECK(a->qualifiers[0].value.text == "Alors ça depend un petit peu.");
  CHECK(a->layer == "verbal_SPK1");
}

TEST_CASE("recording and application") {
  auto [doc, warnings] = Load("recording.xml");
  CHECK(warnings.empty());
  REQUIRE(doc.metadata.recordings.size() == 1);
  const Recording &r = doc.metadata.recordings[0];
  CHECK(r.type == "audio");
  CHECK(r.equipment == "Two microphones, standard 44.1 KHz sampling frequency");
  CHECK(r.date == "12 Jan 2010");
  REQUIRE(doc.metadata.applications.size() == 1);
  const AppInfo &app = doc.metadata.applications[0];
  CHECK(app.ident == "EXMARaLDA");
  CHECK(app.version == "1.4.4");
  CHECK(app.label == "EXMARaLDAPartitur-Editor");
  CHECK(app.targets == std::vector<std::string>{"#dialog2", "#dialog132"});
}

TEST_CASE("person") {
  auto [doc, warnings] = Load("person.xml");
  CHECK(warnings.empty());
  REQUIRE(doc.metadata.participants.size() == 1);
  const Person &p = doc.metadata.participants[0];
  CHECK(p.sex == "2");
  CHECK(p.age == "infant");
  REQUIRE(p.birth);
  CHECK(p.birth->when == "2010");
  CHECK(p.birth->date == "12 Jan 2010");
  CHECK(p.birth->place == "Berlin, Germany");
  REQUIRE(p.languages.size() == 1);
  CHECK(p.languages[0].tag == "de");
  CHECK(p.languages[0].level == "first");
  CHECK(p.languages[0].label == "German");
  CHECK(doc.metadata.setting == "Recorded at home.");
  REQUIRE(doc.metadata.revisions.size() == 1);
  CHECK(doc.metadata.revisions[0].who == "#LR");
}

TEST_CASE("parse errors and warnings") {
  CHECK_THROWS_AS(ParseDocument("<TEI><teiHeader>"), ParseError);
  CHECK_THROWS_AS(ParseDocument("<TEI xmlns=\"http://www.tei-c.org/ns/1.0\"/>"), ParseError);
  CHECK_THROWS_AS(
      ParseDocument("<TEI xmlns=\"http://www.tei-c.org/ns/1.0\"><teiHeader/></TEI>"),
      ParseError);
  CHECK_THROWS_AS(ParseDocument("<html/>"), ParseError);

  auto r = ParseDocument("<TEI><teiHeader><fileDesc/></teiHeader><text><body/></text></TEI>");
  CHECK(HasFinding(r.warnings, "NO_NAMESPACE", ""));
  CHECK(HasFinding(r.warnings, "MISSING_METADATA", "titleStmt"));
}

TEST_CASE("timeline placement and offsets") {
  std::string inside = Wrap(
      "<body><timeline unit=\"s\" xml:id=\"TL\" origin=\"#a\"><when xml:id=\"a\"/>"
      "<when xml:id=\"b\" interval=\"1.5\"/></timeline>"
      "<u who=\"#X\"><anchor synch=\"#a\"/>hi<anchor synch=\"b\"/></u></body>");
  auto [doc, warnings] = ParseDocument(inside);
  CHECK(warnings.empty());
  const Timeline *t = doc.FindTimeline("TL");
  REQUIRE(t);
  CHECK(t->unit() == TimeUnit::kS);
  CHECK(t->origin() == "a");
  CHECK(t->points()[1].offset == 1.5);
  CHECK(IntervalOf(doc, "u_X#1").end == "b");

  // The serializer moves the timeline next to the body.
  std::string out = SerializeDocument(doc);
  CHECK(out.find("<timeline") < out.find("<body"));
  CHECK(ParseDocument(out).document == doc);
}

TEST_CASE("unknown time unit is kept") {
  auto r = ParseDocument(Wrap("<timeline unit=\"frames\"><when xml:id=\"a\"/></timeline><body/>"));
  CHECK(HasFinding(r.warnings, "UNKNOWN_UNIT", "frames"));
  std::string out = SerializeDocument(r.document);
  CHECK(out.find("unit=\"frames\"") != std::string::npos);
}

TEST_CASE("round trip on every fixture") {
  for (const char *name : kFixtures) {
    CAPTURE(name);
    Document first = Load(name).document;
    std::string once = SerializeDocument(first);
    Document second = ParseDocument(once).document;
    CHECK(second == first);
    CHECK(SerializeDocument(second) == once);
  }
}

TEST_CASE("serialization details") {
  SUBCASE("entities") {
    auto [doc, warnings] =
        ParseDocument(Wrap("<body><u who=\"#X\">A &amp; B &lt; C</u></body>"));
    std::string out = SerializeDocument(doc);
    CHECK(out.find("A &amp; B &lt; C") != std::string::npos);
    CHECK(doc.annotations[0].qualifiers[0].value.text == "A & B < C");
  }
  SUBCASE("attributes alphabetical") {
    Document doc = Load("dialogue.xml").document;
    std::string out = SerializeDocument(doc);
    CHECK(out.find("<incident end=\"#T5\" start=\"#T3\" type=\"nv\" who=\"#SPK0\">") !=
          std::string::npos);
    CHECK(out.rfind("<?xml version=\"1.0\" encoding=\"UTF-8\"?>", 0) == 0);
  }
  SUBCASE("empty body") {
    Document doc = Load("empty_body.xml").document;
    std::string out = SerializeDocument(doc);
    CHECK(out.find("<body/>") != std::string::npos);
    CHECK(out.find("<back") == std::string::npos);
    auto again = ParseDocument(out);
    CHECK(again.warnings.empty());
    CHECK(again.document == doc);
  }
}

TEST_CASE("foreign elements survive") {
  std::string text = Header("<xenoData><foo:bar xmlns:foo=\"urn:x\" z=\"1\" a=\"2\">x</foo:bar>"
                            "</xenoData>") +
                     "<text><body><u who=\"#X\">before <foo:q xmlns:foo=\"urn:x\">q</foo:q> after"
                     "</u><note>n</note></body></text></TEI>";
  Document doc = ParseDocument(text).document;
  std::string out = SerializeDocument(doc);
  CHECK(out.find("<foo:bar a=\"2\" xmlns:foo=\"urn:x\" z=\"1\">x</foo:bar>") !=
        std::string::npos);
  CHECK(out.find("<foo:q xmlns:foo=\"urn:x\">q</foo:q>") != std::string::npos);
  CHECK(out.find("<note>n</note>") != std::string::npos);
  CHECK(ParseDocument(out).document == doc);
}

TEST_CASE("synthetic points need materialization") {
  Document doc = SequenceImplicit(Load("unanchored.xml").document);
  CHECK_THROWS_AS(SerializeDocument(doc), Error);

  std::string out = SerializeDocument(doc, {true});
  Document back = ParseDocument(out).document;
  REQUIRE(back.timelines.size() == 1);
  CHECK_FALSE(back.timelines[0].HasSyntheticPoints());
  // Every event gets its own pair of points, strictly after the previous one.
  CHECK(back.timelines[0].size() == 6);
  CHECK(IntervalOf(back, "u_SPK1#1").start == "auto1");
  CHECK(IntervalOf(back, "u_SPK2#1").start == "auto3");
  CHECK(IntervalOf(back, "u_SPK1#2").end == "auto6");
  Document m = MaterializeTimeline(doc);
  CHECK(m.timelines == back.timelines);
  CHECK(m.annotations == back.annotations);
  CHECK(m.transcript == back.transcript);
  CHECK(m.layers == back.layers);
  CHECK(m.metadata == back.metadata);
  CHECK(m == back);
}

TEST_CASE("materialization on an anchor-derived timeline") {
  Document doc = SequenceImplicit(Load("intext_overlap.xml").document);
  Document m = MaterializeTimeline(doc);
  std::string out = SerializeDocument(m);
  Document back = ParseDocument(out).document;
  for (const auto &a : back.annotations) {
    CAPTURE(a.id);
    CHECK(ResolvedInterval(back, a) != nullptr);
  }
  CHECK(SerializeDocument(back) == out);
}

TEST_CASE("resolve anchors") {
  SUBCASE("dangling point") {
    auto [doc, warnings] = Load("dangling_synch.xml");
    CHECK(HasFinding(warnings, "DANGLING_REF", "T99"));
    CHECK_FALSE(doc.annotations[0].range);
  }
  SUBCASE("bare and hashed references agree") {
    auto a = ParseDocument(Wrap("<timeline><when xml:id=\"a\"/><when xml:id=\"b\"/></timeline>"
                                "<body><kinesic who=\"X\" start=\"a\" end=\"b\"/></body>"));
    auto b = ParseDocument(Wrap("<timeline><when xml:id=\"a\"/><when xml:id=\"b\"/></timeline>"
                                "<body><kinesic who=\"#X\" start=\"#a\" end=\"#b\"/></body>"));
    CHECK(a.document == b.document);
    CHECK(IntervalOf(a.document, "kinesic_X#1").end == "b");
  }
  SUBCASE("in-text anchors") {
    auto [doc, warnings] = Load("intext_overlap.xml");
    CHECK(HasFinding(warnings, "DUP_ID", "tp2u"));
    const Timeline *t = doc.FindTimeline(kAnchorTimeline);
    REQUIRE(t);
    CHECK(t->derived());
    CHECK(t->size() == 2);
    const Annotation *kinesic = doc.FindAnnotation("kinesic_SPK1#1");
    REQUIRE(kinesic);
    CHECK_FALSE(kinesic->range);
  }
  SUBCASE("order and text are untouched") {
    for (const char *name : kFixtures) {
      CAPTURE(name);
      Document doc = Load(name).document;
      Findings findings;
      Document again = ResolveAnchors(doc, &findings);
      CHECK(again.transcript == doc.transcript);
      CHECK(again == doc);
    }
  }
}

TEST_CASE("word forms") {
  SUBCASE("compound") {
    Document doc = Load("pomme_de_terre.xml").document;
    CHECK(doc.load_findings.empty());
    REQUIRE(doc.word_forms.size() == 1);
    const WordForm &w = doc.word_forms[0];
    CHECK(w.tokens == std::vector<std::string>{"t1", "t2", "t3"});
    CHECK(w.lexical_ref == "pomme_de_terre_sing");
    CHECK(w.orth == "pomme de terre");
    const FSValue *number = w.features.Find("number");
    REQUIRE(number);
    CHECK(number->text() == "singular");
    CHECK(w.group == "wordForm");
  }
  SUBCASE("single token") {
    Document doc = ParseDocument(Replace(ReadFile("pomme_de_terre.xml"),
                                         "from=\"#t1\" to=\"#t3\"",
                                         "from=\"#t2\" to=\"#t2\"")).document;
    REQUIRE(doc.word_forms.size() == 1);
    CHECK(doc.word_forms[0].tokens == std::vector<std::string>{"t2"});
  }
  SUBCASE("shared token") {
    Document doc = Load("shared_token.xml").document;
    CHECK(doc.load_findings.empty());
    REQUIRE(doc.word_forms.size() == 2);
    CHECK(doc.word_forms[0].tokens == std::vector<std::string>{"t1", "t2"});
    CHECK(doc.word_forms[1].tokens == std::vector<std::string>{"t2", "t3"});
    CHECK(doc.word_forms[1].orth == "b c");
  }
  SUBCASE("defects") {
    std::string text = ReadFile("pomme_de_terre.xml");
    std::string reversed =
        Replace(text, "from=\"#t1\" to=\"#t3\"", "from=\"#t3\" to=\"#t1\"");
    CHECK(HasFinding(ParseDocument(reversed).warnings, "SPAN_ORDER", "t3"));
    std::string dangling = Replace(text, "to=\"#t3\"", "to=\"#t9\"");
    CHECK(HasFinding(ParseDocument(dangling).warnings, "DANGLING_REF", "t9"));
    std::string no_entry = Replace(text, "ana=\"#pomme", "ana=\"#xomme");
    CHECK(HasFinding(ParseDocument(no_entry).warnings, "DANGLING_REF",
                     "xomme_de_terre_sing"));
  }
}

TEST_CASE("analysis references") {
  Document doc = Load("chat.xml").document;
  TagsetLibrary lib = DocumentLibrary(doc);
  FeatureStructure fs = ResolveAna(doc, lib, "#Ncms__");
  REQUIRE(fs.size() == 3);
  CHECK(fs.Find("partOfSpeech")->text() == "commonNoun");
  CHECK(fs.Find("grammaticalGender")->text() == "masculine");
  CHECK(fs.Find("grammaticalNumber")->text() == "singular");
  CHECK(ResolveAna(doc, lib, "Ncfs__").Find("grammaticalGender")->text() == "feminine");

  std::vector<std::string> surfaces;
  for (const auto &t : doc.tokens) surfaces.push_back(t.surface);
  CHECK(surfaces == std::vector<std::string>{"Le", "petit", "chat", "est", "mort", "."});

  Document inline_fs = ParseDocument(Wrap(
      "<body/><back><fs xml:id=\"x1\" type=\"agr\"><f name=\"num\"><symbol value=\"pl\"/></f>"
      "</fs></back>")).document;
  FeatureStructure x = ResolveAna(inline_fs, DocumentLibrary(inline_fs), "#x1");
  CHECK(x.type() == "agr");
  CHECK(x.Find("num")->text() == "pl");

  try {
    ResolveAna(doc, lib, "#NoSuchTag");
    FAIL("expected ReferenceError");
  } catch (const ReferenceError &e) {
    CHECK(std::string(e.what()).find("NoSuchTag") != std::string::npos);
  }
}

TEST_CASE("tagset files") {
  TagsetFile file = ReadTagsetFile(ReadFile("tags.xml"));
  CHECK(file.feature_libraries.size() == 3);
  REQUIRE(file.tag_libraries.size() == 1);
  CHECK(file.tag_libraries[0].tags.size() == 2);
  TagsetLibrary lib = BuildTagset(file);
  CHECK(lib.FindTag("Ncms__"));
  CHECK(lib.FindFeature("NC"));

  TagsetFile verbatim = ReadTagsetFile(ReadFile("category_flib.xml"));
  REQUIRE(verbatim.feature_libraries.size() == 1);
  const LibraryFeature &f = verbatim.feature_libraries[0].features[0];
  CHECK(f.feature.id == "#NC");
  CHECK(f.id_on_value);
  CHECK(f.feature.name == "partOfSPeech");
}

TEST_CASE("feature structure markup") {
  xml::Node node = xml::Parse(
      "<fs type=\"t\"><f name=\"a\"><binary value=\"true\"/></f>"
      "<f name=\"b\"><numeric value=\"2.5\"/></f><f name=\"c\"><string>x y</string></f>"
      "<f name=\"d\"><fs><f name=\"e\"><symbol value=\"s\"/></f></fs></f></fs>");
  FeatureStructure fs = ParseFs(node);
  CHECK(fs.type() == "t");
  CHECK(fs.Find("a")->binary());
  CHECK(fs.Find("b")->numeric() == 2.5);
  CHECK(fs.Find("c")->text() == "x y");
  CHECK(fs.Find("d")->fs().Find("e")->text() == "s");
  CHECK(ParseFs(WriteFs(fs)) == fs);
  CHECK_THROWS_AS(ParseFs(xml::Parse("<fs><f name=\"a\"><vColl/></f></fs>")), ParseError);
}

TEST_CASE("conventions") {
  ConventionRules rules = BuiltinRules();
  auto promote = [&](const std::string &text, Findings *findings = nullptr) {
    Utterance u;
    u.who = "X";
    u.content.push_back({TextRun{text}});
    return PromoteConventions(u, rules, findings);
  };

  SUBCASE("example") {
    Utterance u = promote("Alors ça dépend ((cough)) un petit peu.");
    REQUIRE(u.content.size() == 3);
    CHECK(u.content[0].As<TextRun>()->text == "Alors ça dépend ");
    const Event *e = u.content[1].As<Event>();
    REQUIRE(e);
    CHECK(e->kind == Event::Kind::kVocal);
    CHECK(e->desc == "cough");
    CHECK(u.content[2].As<TextRun>()->text == " un petit peu.");
    CHECK(PromoteConventions(u, rules) == u);
  }
  SUBCASE("plain text unchanged") {
    Utterance u = promote("nothing here");
    REQUIRE(u.content.size() == 1);
    CHECK(u.content[0].As<TextRun>()->text == "nothing here");
  }
  SUBCASE("two markers") {
    Utterance u = promote("((a)) ((b))");
    REQUIRE(u.content.size() == 3);
    CHECK(u.content[0].As<Event>()->desc == "a");
    CHECK(u.content[1].As<TextRun>()->text == " ");
    CHECK(u.content[2].As<Event>()->desc == "b");
    Document doc;
    doc.transcript.body.push_back(u);
    std::string out = SerializeDocument(ResolveAnchors(doc, nullptr));
    CHECK(out.find("<vocal><desc>a</desc></vocal> <vocal><desc>b</desc></vocal>") !=
          std::string::npos);
  }
  SUBCASE("unbalanced") {
    Findings findings;
    Utterance u = promote("oh ((cough", &findings);
    REQUIRE(findings.size() == 1);
    CHECK(findings[0].code == "UNBALANCED_CONVENTION");
    REQUIRE(u.content.size() == 1);
    CHECK(u.content[0].As<TextRun>()->text == "oh ((cough");
  }
  SUBCASE("inside seg") {
    Utterance u;
    Seg s;
    s.children.push_back({TextRun{"x ((laugh)) y"}});
    u.content.push_back({s});
    Utterance out = PromoteConventions(u, rules);
    const Seg *seg = out.content[0].As<Seg>();
    REQUIRE(seg);
    CHECK(seg->children.size() == 3);
  }
  SUBCASE("rule files") {
    ConventionRules parsed = ParseRules(ReadFile("gat.rules"));
    REQUIRE(parsed.size() == 1);
    CHECK(parsed[0].pattern == rules[0].pattern);
    CHECK_THROWS_AS(ParseRules("x\tdance\t1\n"), ParseError);
    CHECK_THROWS_AS(ParseRules("(a)\tvocal\t2\n"), ParseError);
    CHECK_THROWS_AS(ParseRules("a*\tvocal\t0\n"), ParseError);
    ConventionRules custom = ParseRules("# laughter\n\\[laughs\\]\tincident\t0\n");
    Utterance u;
    u.content.push_back({TextRun{"so [laughs] yes"}});
    Utterance out = PromoteConventions(u, custom);
    REQUIRE(out.content.size() == 3);
    CHECK(out.content[1].As<Event>()->kind == Event::Kind::kIncident);
    CHECK(out.content[1].As<Event>()->desc == "[laughs]");
  }
  SUBCASE("document") {
    Document doc = PromoteConventions(Load("raw_text.xml").document, rules);
    const auto &u = std::get<Utterance>(doc.transcript.body[0]);
    CHECK(u.content[1].As<Event>()->desc == "cough");
    CHECK(doc.annotations[0].qualifiers[0].value.text == "Alors ça dépend un petit peu.");
  }
  SUBCASE("plain text is preserved without markers") {
    std::mt19937 rng(17);
    const char alphabet[] = "ab (()) ";
    for (int trial = 0; trial < 2000; ++trial) {
      std::string text;
      int len = std::uniform_int_distribution<int>(0, 24)(rng);
      for (int i = 0; i < len; ++i)
        text += alphabet[std::uniform_int_distribution<int>(0, sizeof alphabet - 2)(rng)];
      CAPTURE(text);
      Utterance u = promote(text);
      CHECK(PlainText(u.content) == StripDoubleParens(text));
      CHECK(PromoteConventions(u, rules) == u);
    }
  }
}

TEST_CASE("segment statistics") {
  std::map<std::string, int> expected{{"sentence", 1}, {"phrase", 3}, {"word", 12}, {"punct", 1}};
  CHECK(SegStats(Load("seg.xml").document) == expected);
  CHECK(SegStats(Load("dialogue.xml").document).empty());
  auto nested = ParseDocument(
      Wrap("<body><u who=\"#X\"><seg type=\"phrase\"><seg type=\"phrase\">a</seg></seg></u>"
           "</body>"));
  CHECK(SegStats(nested.document) == std::map<std::string, int>{{"phrase", 2}});
}

}  // namespace tei
}  // namespace spoken
