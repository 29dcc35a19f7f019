// validate/validate-test.cc

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

#include <functional>
#include <set>

#include "base/text-utils.h"
#include "base/xml.h"
#include "doctest.h"
#include "tei/reader.h"
#include "tei/writer.h"
#include "validate/checks.h"

namespace spoken {
namespace {

const char *const kFixtures[] = {
    "dialogue.xml",      "intext_overlap.xml", "recording.xml",   "person.xml",
    "tags.xml",       "category_flib.xml",  "chat.xml",        "pomme_de_terre.xml",
    "shared_token.xml", "seg.xml",          "raw_text.xml",    "unanchored.xml",
    "empty_body.xml", "dangling_synch.xml", "offset_order.xml", "single_utterance.xml"};

Document Load(const std::string &name) { return tei::ParseDocument(ReadFile(name)).document; }

int Count(const Findings &findings, const std::string &code) {
  int n = 0;
  for (const auto &f : findings) n += f.code == code;
  return n;
}

int Count(const Report &report, const std::string &code) {
  int n = 0;
  for (const auto &i : report.issues) n += i.code == code;
  return n;
}

std::string Wrap(const std::string &persons, const std::string &text_content) {
  return "<TEI xmlns=\"http://www.tei-c.org/ns/1.0\"><teiHeader><fileDesc>"
         "<titleStmt><title>t</title></titleStmt><publicationStmt><p>p</p></publicationStmt>"
         "<sourceDesc><p>s</p></sourceDesc></fileDesc><profileDesc><particDesc>" +
         persons + "</particDesc></profileDesc></teiHeader><text>" + text_content +
         "</text></TEI>";
}

Registry LoadRegistry() { return ParseRegistry(ReadFile("registry.tsv")).registry; }

// Resolves "body/u[2]", "(body/u[2]//anchor)[3]" and
// "(teiHeader//application)[1]" against the markup.
const xml::Node *FindByPath(const xml::Node &root, const std::string &path) {
  auto find = [&root](const std::string &element) {
    const xml::Node *found = nullptr;
    std::function<void(const xml::Node &)> walk = [&](const xml::Node &n) {
      if (n.IsElement(element)) found = &n;
      for (const auto &c : n.children)
        if (!found) walk(c);
    };
    walk(root);
    return found;
  };
  auto descendants = [](const xml::Node &top, const std::string &child) {
    std::vector<const xml::Node *> found;
    std::function<void(const xml::Node &)> walk = [&](const xml::Node &n) {
      for (const auto &c : n.children) {
        if (c.IsElement(child)) found.push_back(&c);
        walk(c);
      }
    };
    walk(top);
    return found;
  };
  if (path.rfind("(teiHeader//", 0) == 0) {
    const xml::Node *header = find("teiHeader");
    size_t close = path.find(")[");
    auto found = descendants(*header, path.substr(12, close - 12));
    int j = std::stoi(path.substr(close + 2));
    return j >= 1 && j <= static_cast<int>(found.size()) ? found[j - 1] : nullptr;
  }
  const xml::Node *body = find("body");
  if (!body) return nullptr;
  auto nth_child = [](const xml::Node &parent, const std::string &name, int k) {
    for (const auto &c : parent.children)
      if (c.IsElement(name) && --k == 0) return &c;
    return static_cast<const xml::Node *>(nullptr);
  };
  auto parse_step = [](const std::string &step, std::string *name, int *k) {
    size_t open = step.find('[');
    *name = step.substr(0, open);
    *k = std::stoi(step.substr(open + 1));
  };
  std::string name;
  int k = 0;
  if (path.rfind("body/", 0) == 0) {
    parse_step(path.substr(5), &name, &k);
    return nth_child(*body, name, k);
  }
  if (path.rfind("(body/", 0) == 0) {
    size_t slashes = path.find("//");
    size_t close = path.find(")[");
    parse_step(path.substr(6, slashes - 6), &name, &k);
    const xml::Node *item = nth_child(*body, name, k);
    if (!item) return nullptr;
    std::string child = path.substr(slashes + 2, close - slashes - 2);
    int j = std::stoi(path.substr(close + 2));
    auto found = descendants(*item, child);
    return j >= 1 && j <= static_cast<int>(found.size()) ? found[j - 1] : nullptr;
  }
  return nullptr;
}

bool DeclaresId(const xml::Node &n, const std::string &id) {
  if (const std::string *v = n.Attr("xml:id"); v && *v == id) return true;
  for (const auto &c : n.children)
    if (DeclaresId(c, id)) return true;
  return false;
}

}  // namespace

TEST_CASE("identifiers") {
  Findings intext = CheckIds(Load("intext_overlap.xml"));
  CHECK(Count(intext, "DUP_ID") == 1);
  CHECK(intext[0].location == "tp2u");
  Findings flib = CheckIds(Load("category_flib.xml"));
  REQUIRE(Count(flib, "BAD_ID") == 1);
  CHECK(flib[0].location == "#NC");
  CHECK(CheckIds(Load("dialogue.xml")).empty());

  Document doc = Load("dialogue.xml");
  doc.load_findings.push_back({"DUP_ID", "T3", "time point 'T3' declared twice"});
  CHECK(Count(CheckIds(doc), "DUP_ID") == 1);
  CHECK(Count(CheckIds(tei::ParseDocument(Wrap("", "<body><u xml:id=\"a b\">x</u></body>"))
                           .document),
              "BAD_ID") == 1);
}

TEST_CASE("references") {
  CHECK(CheckRefs(Load("dialogue.xml")).empty());
  Findings synch = CheckRefs(Load("dangling_synch.xml"));
  REQUIRE(synch.size() == 1);
  CHECK(synch[0].code == "DANGLING_REF");
  CHECK(synch[0].message.find("T99") != std::string::npos);
  CHECK(synch[0].message.find("@synch") != std::string::npos);

  std::string chat = ReadFile("chat.xml");
  chat.replace(chat.find("#Ncms__"), 7, "#NoSuchTag");
  Findings ana = CheckRefs(tei::ParseDocument(chat).document);
  REQUIRE(ana.size() == 1);
  CHECK(ana[0].message.find("NoSuchTag") != std::string::npos);
  CHECK(ana[0].location == "(body/p[1]//w)[3]");

  Report targets = ValidateAll(Load("recording.xml"));
  REQUIRE(targets.issues.size() == 1);
  CHECK(targets.issues[0].location == "(teiHeader//application)[1]");
  CHECK(targets.issues[0].message.find("'dialog2'") != std::string::npos);
  CHECK(targets.issues[0].message.find("'dialog132'") != std::string::npos);

  Document wf = Load("pomme_de_terre.xml");
  CHECK(CheckRefs(wf).empty());
  wf.tokens.erase(wf.tokens.begin() + 1);
  CHECK(Count(CheckRefs(wf), "DANGLING_REF") >= 1);

  Document who = tei::ParseDocument(Wrap("<person xml:id=\"A\"/>",
                                         "<body><u who=\"#B\">x</u><incident who=\"A\"/></body>"))
                     .document;
  Findings w = CheckRefs(who);
  REQUIRE(w.size() == 1);
  CHECK(w[0].location == "body/u[1]");

  std::string feats = ReadFile("tags.xml");
  feats.replace(feats.find("#NC #fem"), 8, "#NX #fem");
  Findings f = CheckRefs(tei::ParseDocument(feats).document);
  REQUIRE(f.size() == 1);
  CHECK(f[0].location == "Ncfs__");
}

TEST_CASE("temporal order") {
  CHECK(CheckTemporal(Load("dialogue.xml")).empty());
  Document back = tei::ParseDocument(Wrap(
      "<person xml:id=\"A\"/>",
      "<timeline><when xml:id=\"T1\"/><when xml:id=\"T2\"/><when xml:id=\"T3\"/>"
      "<when xml:id=\"T4\"/></timeline><body><u who=\"#A\"><anchor synch=\"#T4\"/>x"
      "<anchor synch=\"#T2\"/></u></body>")).document;
  Findings f = CheckTemporal(back);
  REQUIRE(f.size() == 1);
  CHECK(f[0].code == "ANCHOR_ORDER");

  Document offsets = tei::ParseDocument(Wrap(
      "", "<timeline unit=\"ms\"><when xml:id=\"T1\" interval=\"500\"/>"
          "<when xml:id=\"T2\" interval=\"100\"/></timeline><body/>")).document;
  Findings o = CheckTemporal(offsets);
  REQUIRE(o.size() == 1);
  CHECK(o[0].code == "OFFSET_ORDER");
  CHECK(o[0].location == "T2");
  CHECK(Count(CheckTemporal(Load("offset_order.xml")), "OFFSET_ORDER") == 1);

  Document equal = tei::ParseDocument(Wrap(
      "", "<timeline><when xml:id=\"a\" interval=\"1\"/><when xml:id=\"b\" interval=\"1\"/>"
          "</timeline><body/>")).document;
  CHECK(CheckTemporal(equal).empty());

  Document inside = tei::ParseDocument(Wrap(
      "", "<timeline><when xml:id=\"T1\"/></timeline>"
          "<body><p><w>ab</w><w>c<anchor synch=\"#T1\"/>d</w></p></body>")).document;
  Findings a = CheckTemporal(inside);
  REQUIRE(a.size() == 1);
  CHECK(a[0].code == "ANCHOR_IN_TOKEN");
  CHECK(a[0].location == "(body/p[1]//w)[2]");
  CHECK(a[0].message.find("'T1'") != std::string::npos);
  CHECK(SeverityPolicy().Of("ANCHOR_IN_TOKEN") == Severity::kError);
}

TEST_CASE("span order") {
  CHECK(CheckSpans(Load("pomme_de_terre.xml")).empty());
  std::string text = ReadFile("pomme_de_terre.xml");
  text.replace(text.find("from=\"#t1\" to=\"#t3\""), 19, "from=\"#t3\" to=\"#t1\"");
  Findings f = CheckSpans(tei::ParseDocument(text).document);
  REQUIRE(f.size() == 1);
  CHECK(f[0].code == "SPAN_ORDER");
}

TEST_CASE("tagset and registry") {
  Registry reg = LoadRegistry();
  Document chat = Load("chat.xml");
  CHECK(CheckTagset(chat, nullptr, nullptr, std::nullopt).empty());
  CHECK(CheckTagset(chat, nullptr, &reg, std::string("fr")).empty());

  std::string text = ReadFile("chat.xml");
  text.replace(text.find("#Ncms__\">chat"), 7, "#Ncns__");
  text.replace(text.find("</fvLib>"), 8,
               "<fs xml:id=\"Ncns__\" feats=\"#NC #neu #sing\"/></fvLib>");
  Document neuter = tei::ParseDocument(text).document;
  Findings fr = CheckTagset(neuter, nullptr, &reg, std::string("fr"));
  REQUIRE(fr.size() == 1);
  CHECK(fr[0].code == "DOMAIN_VIOLATION");
  CHECK(fr[0].message.find("languageRestricted") != std::string::npos);
  CHECK(CheckTagset(neuter, nullptr, &reg, std::string("de")).empty());
  CHECK(CheckTagset(neuter, nullptr, &reg, std::nullopt).empty());

  SUBCASE("external library") {
    std::string bare = ReadFile("chat.xml");
    bare.erase(bare.find("<back>"), bare.find("</back>") + 7 - bare.find("<back>"));
    Document doc = tei::ParseDocument(bare).document;
    CHECK(Count(CheckRefs(doc), "DANGLING_REF") == 1);
    tei::TagsetFile lib = tei::ReadTagsetFile(ReadFile("tags.xml"));
    CHECK(CheckRefs(doc, &lib).empty());
    CHECK(CheckTagset(doc, &lib, &reg, std::string("fr")).empty());
  }
  SUBCASE("analysis pointing at a non-tag") {
    std::string t = ReadFile("chat.xml");
    t.replace(t.find("<w>Le</w>"), 9, "<w xml:id=\"le\">Le</w>");
    t.replace(t.find("#Ncms__"), 7, "#le");
    Findings f = CheckTagset(tei::ParseDocument(t).document, nullptr, nullptr, std::nullopt);
    REQUIRE(f.size() == 1);
    CHECK(f[0].code == "UNKNOWN_TAG");
  }
  SUBCASE("feature name differing in case") {
    Document flib = Load("category_flib.xml");
    CHECK(Count(CheckTagset(flib, nullptr, nullptr, std::nullopt), "FEATURE_NAME_MISMATCH") ==
          0);
    Findings f = CheckTagset(flib, nullptr, &reg, std::nullopt);
    REQUIRE(Count(f, "FEATURE_NAME_MISMATCH") == 1);
    CHECK(f[0].message.find("partOfSpeech") != std::string::npos);
  }
  SUBCASE("conflicting tag") {
    std::string t = ReadFile("tags.xml");
    t.replace(t.find("#NC #fem #sing"), 14, "#NC #fem #mas");
    Findings f = CheckTagset(tei::ParseDocument(t).document, nullptr, nullptr, std::nullopt);
    REQUIRE(f.size() == 1);
    CHECK(f[0].code == "TAG_CONFLICT");
    CHECK(f[0].location == "Ncfs__");
  }
}

TEST_CASE("whole-document reports") {
  Report dialogue = ValidateAll(Load("dialogue.xml"));
  CHECK(dialogue.errors() == 0);
  CHECK(dialogue.warnings() == 0);
  CHECK(FormatText(dialogue) == "0 errors, 0 warnings\n");

  auto parsed = tei::ParseDocument(ReadFile("intext_overlap.xml"));
  Report intext = ValidateAll(parsed.document, {}, parsed.warnings);
  CHECK(intext.errors() >= 1);
  CHECK(Count(intext, "DUP_ID") == 1);
  CHECK(intext.issues[0].code == "DUP_ID");
  CHECK(intext.issues[0].location == "tp2u");

  CHECK(ValidateAll(Load("empty_body.xml")).issues.empty());

  ValidateOptions relaxed;
  relaxed.severities.Override("DUP_ID", Severity::kWarning);
  Report r = ValidateAll(parsed.document, relaxed, parsed.warnings);
  CHECK(r.errors() == 0);
  CHECK(FormatTsv(r).rfind("warning\tDUP_ID\ttp2u\t", 0) == 0);

  CHECK(ValidateAll(Load("category_flib.xml")).issues.size() == 1);
}

TEST_CASE("report ordering") {
  Findings findings = {{"ZED", "b", "1"}, {"DUP_ID", "x", "2"}, {"BAD_ID", "a", "3"},
                       {"DUP_ID", "x", "4"}, {"DANGLING_REF", "a", "5"},
                       {"DUP_ID", "x", "2"}};
  Report r = MakeReport(findings, {});
  REQUIRE(r.issues.size() == 4);
  CHECK(r.issues[0].code == "DANGLING_REF");
  CHECK(r.issues[1].code == "DUP_ID");
  CHECK(r.issues[1].message == "2; 4");
  CHECK(r.issues[2].code == "BAD_ID");
  CHECK(r.issues[3].code == "ZED");
  CHECK(r.errors() == 2);
  CHECK(ParseSeverity("warning") == Severity::kWarning);
  CHECK_FALSE(ParseSeverity("fatal"));
}

TEST_CASE("report properties on every fixture") {
  Registry reg = LoadRegistry();
  for (const char *name : kFixtures) {
    CAPTURE(name);
    std::string text = ReadFile(name);
    auto parsed = tei::ParseDocument(text);
    ValidateOptions options;
    options.registry = &reg;
    options.language = "fr";
    Report first = ValidateAll(parsed.document, options, parsed.warnings);
    Report second = ValidateAll(parsed.document, options, parsed.warnings);
    CHECK(first.issues == second.issues);

    std::set<std::pair<std::string, std::string>> pairs;
    for (const auto &i : first.issues) CHECK(pairs.insert({i.code, i.location}).second);

    xml::Node root = xml::Parse(text);
    for (const auto &i : first.issues) {
      CAPTURE(i.location);
      bool resolves = FindByPath(root, i.location) != nullptr || DeclaresId(root, i.location) ||
                      parsed.document.FindAnnotation(i.location) != nullptr ||
                      i.location.rfind("line ", 0) == 0;
      CHECK(resolves);
    }

    if (first.issues.empty()) {
      auto again = tei::ParseDocument(tei::SerializeDocument(parsed.document));
      CHECK(ValidateAll(again.document, options, again.warnings).issues.empty());
    }
  }
}

}  // namespace spoken
