// tests/acceptance.cc

// Copyright 2026  The spokenkit authors

// See ../COPYING for clarification regarding multiple authors
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

// Acceptance suite: one PASS or FAIL line per criterion.  Runs from the
// fixtures directory; exits non-zero when any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "base/text-utils.h"
#include "core/annotation-ops.h"
#include "core/temporal.h"
#include "datacat/registry.h"
#include "featstruct/feature-structure.h"
#include "featstruct/tagset.h"
#include "support/allen-oracle.h"
#include "support/fs-oracle.h"
#include "support/overlap-oracle.h"
#include "support/tier-generator.h"
#include "tei/conventions.h"
#include "tei/fs-markup.h"
#include "tei/reader.h"
#include "tei/resolve.h"
#include "tei/writer.h"
#include "tier/convert.h"
#include "tier/tier-file.h"
#include "validate/checks.h"

namespace spoken {
namespace {

// Collects the failed expectations of one criterion.
class Verdict {
 public:
  void Expect(bool ok, const std::string &what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  void Note(const std::string &note) { notes_.push_back(note); }

  bool passed() const { return failed_ == 0; }
  std::string Summary() const {
    std::ostringstream out;
    if (passed()) {
      out << checks_ << " checks";
      for (const auto &n : notes_) out << "; " << n;
    } else {
      out << failed_ << " of " << checks_ << " checks failed";
      for (const auto &f : failures_) out << "; " << f;
    }
    return out.str();
  }

 private:
  int checks_ = 0;
  int failed_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

tei::ParseResult Load(const std::string &name) { return tei::ParseDocument(ReadFile(name)); }

void DialogueRoundTrip(Verdict &v) {
  auto t0 = std::chrono::steady_clock::now();
  std::string text = ReadFile("dialogue.xml");
  Document first = tei::ParseDocument(text).document;
  std::string serialized = tei::SerializeDocument(first);
  Document second = tei::ParseDocument(serialized).document;
  double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  v.Expect(second == first, "re-parsed document differs");
  v.Expect(tei::SerializeDocument(second) == serialized, "second serialization differs");
  for (const Document *d : {&first, &second}) {
    v.Expect(d->metadata.participants.size() == 2, "participants != 2");
    v.Expect(d->timelines.size() == 1 && d->timelines[0].size() == 8, "timeline points != 8");
    int utterances = 0, incidents = 0;
    for (const auto &item : d->transcript.body) {
      if (std::holds_alternative<Utterance>(item)) ++utterances;
      if (const auto *e = std::get_if<Event>(&item))
        if (e->kind == Event::Kind::kIncident) ++incidents;
    }
    v.Expect(utterances == 3, "utterances != 3");
    v.Expect(incidents == 1, "incidents != 1");
  }
  v.Expect(seconds < 1.0, "took " + std::to_string(seconds) + " s");
  v.Note("round trip in " + std::to_string(static_cast<int>(seconds * 1000)) + " ms");
}

void DialogueOverlaps(Verdict &v) {
  Document doc = Load("dialogue.xml").document;
  OverlapReport report = OverlapsReport(doc);
  testing::PairSet reported = testing::ReportedPairs(report);
  testing::PairSet oracle = testing::BruteForceOverlaps(doc);
  v.Expect(report.pairs.size() == 3, "pairs != 3");
  v.Expect(reported == oracle, "report disagrees with the brute-force oracle");

  // u1 = first SPK0 utterance, u2 = the SPK1 utterance, u3 = second SPK0.
  const std::string u1 = "u_SPK0#1", u2 = "u_SPK1#1", u3 = "u_SPK0#2", inc = "incident_SPK0#1";
  testing::PairSet expected = {{testing::Unordered(u1, u2), "T3,T4"},
                               {testing::Unordered(u1, inc), "T3,T4"},
                               {testing::Unordered(u2, inc), "T3,T5"}};
  v.Expect(reported == expected, "pairs or shared intervals differ from the expected three");
  v.Expect(!reported.count(testing::Unordered(u2, u3)), "(u2,u3) reported although they meet");
  const Timeline &t = doc.timelines[0];
  const auto &a2 = *doc.FindAnnotation(u2), &a3 = *doc.FindAnnotation(u3);
  v.Expect(Relation(t, std::get<EventInterval>(*a2.range), std::get<EventInterval>(*a3.range)) ==
               TemporalRelation::kMeets,
           "u2 does not meet u3");
}

void TagsetExpansion(Verdict &v) {
  TagsetLibrary lib = tei::BuildTagset(tei::ReadTagsetFile(ReadFile("tags.xml")));
  FeatureStructure expected;
  expected.Add("partOfSpeech", FSValue::Symbol("commonNoun"));
  expected.Add("grammaticalGender", FSValue::Symbol("masculine"));
  expected.Add("grammaticalNumber", FSValue::Symbol("singular"));
  const FeatureStructure &ncms = ResolveTag(lib, "Ncms__");
  v.Expect(ncms == expected, "Ncms__ expands to " + ncms.ToString());
  v.Expect(Flatten(ncms).size() == 3, "expansion does not have exactly three pairs");

  Document chat = Load("chat.xml").document;
  TagsetLibrary chat_lib = tei::DocumentLibrary(chat);
  std::string ana;
  for (const auto &item : chat.transcript.body)
    if (const auto *p = std::get_if<Paragraph>(&item))
      for (const auto &in : p->content)
        if (const Word *w = in.As<Word>())
          if (!w->ana.empty()) ana = w->ana;
  v.Expect(ana == "#Ncms__", "<w ana> of chat is '" + ana + "'");
  v.Expect(tei::ResolveAna(chat, chat_lib, ana) == expected, "<w ana=\"#Ncms__\"> differs");
}

void LanguageRestriction(Verdict &v) {
  Registry reg = ParseRegistry(ReadFile("registry.tsv")).registry;
  auto pid = [&reg](const char *name) -> std::string {
    const DataCategory *c = reg.FindByName(name);
    if (!c) throw Error(std::string("no category named ") + name);
    return c->pid;
  };
  const std::string gender = pid("grammaticalGender"), neuter = pid("neuter");
  v.Expect(ValidateValue(reg, gender, neuter, "fr") == ValueVerdict::kLanguageRestricted,
           "neuter for fr is not languageRestricted");
  v.Expect(ValidateValue(reg, gender, neuter) == ValueVerdict::kOk,
           "neuter without a language is not ok");
  v.Expect(ValidateValue(reg, gender, neuter, "de") == ValueVerdict::kOk,
           "neuter for de is not ok");
  v.Expect(ValidateValue(reg, gender, pid("feminine"), "fr") == ValueVerdict::kOk,
           "feminine for fr is not ok");
}

void SpanExtraction(Verdict &v) {
  tei::ParseResult pomme = Load("pomme_de_terre.xml");
  const auto &forms = pomme.document.word_forms;
  v.Expect(forms.size() == 1, "word forms != 1");
  if (forms.size() == 1) {
    v.Expect(forms[0].tokens == std::vector<std::string>{"t1", "t2", "t3"}, "tokens differ");
    v.Expect(forms[0].orth == "pomme de terre", "orth is '" + forms[0].orth + "'");
    const FSValue *number = forms[0].features.Find("number");
    v.Expect(number && number->text() == "singular", "number is not singular");
  }
  Findings findings;
  v.Expect(tei::ExtractSpans(pomme.document, &findings) == forms, "extraction is not stable");

  tei::ParseResult shared = Load("shared_token.xml");
  v.Expect(shared.document.word_forms.size() == 2, "shared-token word forms != 2");
  v.Expect(shared.warnings.empty() && shared.document.load_findings.empty(),
           "shared token reported as a problem");
  v.Expect(ValidateAll(shared.document, {}, shared.warnings).errors() == 0,
           "shared token fails validation");
}

void ConventionPromotion(Verdict &v) {
  Document doc = Load("raw_text.xml").document;
  const Utterance *u = nullptr;
  for (const auto &item : doc.transcript.body)
    if (const auto *x = std::get_if<Utterance>(&item)) u = x;
  v.Expect(u != nullptr, "no utterance");
  if (!u) return;
  tei::ConventionRules rules = tei::ParseRules(ReadFile("gat.rules"));
  Utterance once = tei::PromoteConventions(*u, rules);
  const auto &c = once.content;
  v.Expect(c.size() == 3, "promoted content has " + std::to_string(c.size()) + " parts");
  if (c.size() == 3) {
    v.Expect(c[0].As<TextRun>() && c[0].As<TextRun>()->text == "Alors ça dépend ",
             "leading text differs");
    const Event *vocal = c[1].As<Event>();
    v.Expect(vocal && vocal->kind == Event::Kind::kVocal && vocal->desc == "cough",
             "middle part is not vocal{cough}");
    v.Expect(c[2].As<TextRun>() && c[2].As<TextRun>()->text == " un petit peu.",
             "trailing text differs");
  }
  v.Expect(tei::PromoteConventions(once, rules) == once, "promotion is not idempotent");
  v.Expect(tei::PromoteConventions(*u, tei::BuiltinRules()) == once,
           "built-in rule disagrees with gat.rules");
}

void DefectDetection(Verdict &v) {
  auto report = [](const std::string &name) {
    tei::ParseResult r = Load(name);
    return ValidateAll(r.document, {}, r.warnings);
  };
  auto count = [](const Report &r, const std::string &code) {
    int n = 0;
    for (const auto &i : r.issues) n += i.code == code;
    return n;
  };
  Report intext = report("intext_overlap.xml");
  v.Expect(count(intext, "DUP_ID") == 1, "in-text DUP_ID count != 1");
  for (const auto &i : intext.issues)
    if (i.code == "DUP_ID") v.Expect(i.location == "tp2u", "DUP_ID at " + i.location);
  Report flib = report("category_flib.xml");
  v.Expect(count(flib, "BAD_ID") == 1, "fLib BAD_ID count != 1");
  for (const auto &i : flib.issues)
    if (i.code == "BAD_ID") v.Expect(i.location == "#NC", "BAD_ID at " + i.location);
  Report dialogue = report("dialogue.xml");
  v.Expect(dialogue.errors() == 0 && dialogue.warnings() == 0,
           "Dialogue has " + std::to_string(dialogue.issues.size()) + " issues");
}

void UnificationProperties(Verdict &v) {
  testing::FsGenerator gen(20240601);
  const FeatureStructure empty;
  int successes = 0, failures = 0;
  const int kTrials = 10000;
  for (int i = 0; i < kTrials; ++i) {
    FeatureStructure a = gen.Random(3), b = gen.Pick(2) ? gen.Related(a, 3) : gen.Random(3);
    UnifyResult ab = Unify(a, b), ba = Unify(b, a);
    v.Expect(ab.ok() == ba.ok() && (!ab.ok() || ab.value() == ba.value()),
             "not commutative: " + a.ToString() + " / " + b.ToString());
    UnifyResult id = Unify(a, empty);
    v.Expect(id.ok() && id.value() == a, "empty structure is not an identity: " + a.ToString());
    auto oracle = testing::MergedPathMap(a, b);
    if (!ab.ok()) {
      ++failures;
      v.Expect(!oracle, "failure without a clash: " + a.ToString() + " / " + b.ToString());
      continue;
    }
    ++successes;
    v.Expect(oracle.has_value(), "success despite a clash: " + a.ToString() + " / " + b.ToString());
    v.Expect(Subsumes(a, ab.value()) && Subsumes(b, ab.value()),
             "result not subsumed: " + a.ToString() + " / " + b.ToString());
  }
  v.Expect(successes > kTrials / 10 && failures > kTrials / 10, "random cases are one-sided");
  v.Note(std::to_string(kTrials) + " pairs, " + std::to_string(successes) + " unifiable");
}

void IntervalAlgebra(Verdict &v) {
  long pairs = 0;
  for (size_t n = 2; n <= 6; ++n) {
    std::vector<IndexInterval> all = testing::AllIntervals(n);
    for (IndexInterval a : all)
      for (IndexInterval b : all) {
        ++pairs;
        auto holds = testing::AllenPredicates(a, b);
        int count = 0;
        for (bool h : holds) count += h;
        TemporalRelation r = Relation(a, b);
        v.Expect(count == 1, "not exactly one relation holds");
        v.Expect(holds[static_cast<int>(r)], std::string("Relation() says ") + RelationName(r));
        v.Expect(Relation(b, a) == Inverse(r), "relation(b,a) is not the inverse");
      }
  }
  v.Note(std::to_string(pairs) + " interval pairs");
}

void TierRoundTrip(Verdict &v) {
  std::mt19937 rng(7919);
  long relations = 0;
  for (int trial = 0; trial < 100; ++trial) {
    TierDocument td = testing::RandomTierDocument(rng);
    Document doc = ToCore(td);
    FromCoreResult back = FromCore(doc);
    v.Expect(back.residue.empty(), "residue on trial " + std::to_string(trial));
    v.Expect(back.document == td, "from_core(to_core(T)) != T on trial " + std::to_string(trial));

    std::vector<IndexInterval> before, after;
    for (const auto &t : td.tiers)
      for (const auto &e : t.events)
        before.push_back({static_cast<size_t>(td.PointIndex(e.start)),
                          static_cast<size_t>(td.PointIndex(e.end))});
    for (const auto &t : back.document.tiers)
      for (const auto &e : t.events)
        after.push_back({static_cast<size_t>(back.document.PointIndex(e.start)),
                         static_cast<size_t>(back.document.PointIndex(e.end))});
    v.Expect(before.size() == after.size(), "event count changed");
    if (before.size() != after.size()) continue;
    for (size_t i = 0; i < before.size(); ++i)
      for (size_t j = 0; j < before.size(); ++j) {
        ++relations;
        v.Expect(Relation(before[i], before[j]) == Relation(after[i], after[j]),
                 "relation changed on trial " + std::to_string(trial));
      }
  }
  v.Note("100 documents, " + std::to_string(relations) + " event pairs");
}

void SegStatistics(Verdict &v) {
  std::map<std::string, int> stats = tei::SegStats(Load("seg.xml").document);
  std::map<std::string, int> expected = {{"sentence", 1}, {"phrase", 3}, {"word", 12}, {"punct", 1}};
  std::string got;
  for (const auto &[type, n] : stats) got += type + ":" + std::to_string(n) + " ";
  v.Expect(stats == expected, "counts are " + got);
}

struct Criterion {
  const char *name;
  std::function<void(Verdict &)> run;
};

}  // namespace
}  // namespace spoken

int main() {
  using spoken::Criterion;
  const std::vector<Criterion> criteria = {
      {"Dialogue round trip", spoken::DialogueRoundTrip},
      {"Dialogue overlap report", spoken::DialogueOverlaps},
      {"Tagset expansion of Ncms__", spoken::TagsetExpansion},
      {"Language restriction", spoken::LanguageRestriction},
      {"Word-form span extraction", spoken::SpanExtraction},
      {"Convention promotion", spoken::ConventionPromotion},
      {"Defect detection", spoken::DefectDetection},
      {"Unification properties", spoken::UnificationProperties},
      {"Interval algebra", spoken::IntervalAlgebra},
      {"Tier round trip", spoken::TierRoundTrip},
      {"seg statistics", spoken::SegStatistics},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    spoken::Verdict v;
    try {
      criteria[i].run(v);
    } catch (const std::exception &e) {
      v.Expect(false, std::string("exception: ") + e.what());
    }
    failed += !v.passed();
    std::cout << (v.passed() ? "PASS" : "FAIL") << " " << (i + 1 < 10 ? " " : "") << i + 1
              << " " << criteria[i].name << ": " << v.Summary() << "\n";
  }
  std::cout << criteria.size() - failed << " of " << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
