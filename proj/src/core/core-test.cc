// core/core-test.cc

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

#include "core/annotation-ops.h"
#include "core/temporal.h"
#include "doctest.h"
#include "support/allen-oracle.h"
#include "support/overlap-oracle.h"

namespace spoken {

namespace {

Timeline DialogueTimeline() {
  Timeline t("tl", TimeUnit::kMs);
  for (const char *id : {"T1", "T2", "T3", "T4", "T4bar", "T5", "T6", "T7"})
    t.AddPoint(id);
  return t;
}

EventInterval Ev(const char *s, const char *e) { return {s, e, "tl"}; }

Annotation Timed(std::string id, std::optional<Range> range,
                 std::string layer = "verbal_SPK0") {
  Annotation a;
  a.id = std::move(id);
  a.source = "audio";
  a.range = std::move(range);
  a.qualifiers.push_back({CategoryRef::Name("verbal"), CategoryRef::Name("x")});
  a.layer = std::move(layer);
  return a;
}

Document DialoguePivot() {
  Document doc;
  doc.sources.push_back({"audio", SourceRef::Kind::kPrimary, "", {}});
  doc.timelines.push_back(DialogueTimeline());
  doc.levels.push_back({"transcription", {"audio"}, RangingMechanism::kEvent, {}});
  for (const char *l : {"verbal_SPK0", "verbal_SPK1", "incident_SPK0"})
    doc.layers.push_back({l, l, "transcription", "", ""});
  doc.annotations.push_back(Timed("u_SPK0#1", Ev("T1", "T4")));
  doc.annotations.push_back(Timed("u_SPK1#1", Ev("T3", "T6"), "verbal_SPK1"));
  doc.annotations.push_back(Timed("incident_SPK0#1", Ev("T3", "T5"), "incident_SPK0"));
  doc.annotations.push_back(Timed("u_SPK0#2", Ev("T6", "T7")));
  return doc;
}

}  // namespace

TEST_CASE("compare_points follows index order") {
  Timeline t = DialogueTimeline();
  CHECK(ComparePoints(t, "T3", "T4") == Ordering::kBefore);
  CHECK(ComparePoints(t, "T4bar", "T4bar") == Ordering::kEqual);

  Timeline n("n", TimeUnit::kMs);
  n.AddPoint("p1", 100);
  n.AddPoint("p2", 250);
  CHECK(ComparePoints(n, "p2", "p1") == Ordering::kAfter);

  try {
    ComparePoints(t, "T1", "T99");
    FAIL("expected a reference error");
  } catch (const ReferenceError &e) {
    CHECK(e.id() == "T99");
  }
}

TEST_CASE("timeline invariants") {
  Timeline t = DialogueTimeline();
  for (size_t i = 0; i < t.size(); ++i) CHECK(t.points()[i].index == i);
  CHECK_THROWS_AS(t.AddPoint("T1"), Error);
  CHECK_THROWS_AS(t.AddPoint("neg", -1.0), Error);
  t.AddPoint("~auto1", std::nullopt, true);
  CHECK(t.HasSyntheticPoints());
  t.RenamePoint(t.IndexOf("~auto1"), "auto1");
  CHECK(t.Contains("auto1"));
  CHECK_FALSE(t.Contains("~auto1"));
}

TEST_CASE("relation examples on the dialogue timeline") {
  Timeline t = DialogueTimeline();
  CHECK(Relation(t, Ev("T1", "T4"), Ev("T3", "T6")) == TemporalRelation::kOverlaps);
  CHECK(Relation(t, Ev("T3", "T6"), Ev("T6", "T7")) == TemporalRelation::kMeets);
  CHECK(Relation(t, Ev("T3", "T5"), Ev("T3", "T5")) == TemporalRelation::kEquals);
  CHECK_THROWS_AS(Relation(t, Ev("T1", "T2"), EventInterval{"T1", "T2", "other"}),
                  IncomparableError);
  CHECK_THROWS_AS(Relation(IndexInterval{2, 2}, IndexInterval{0, 1}), Error);
}

TEST_CASE("relation names and inverses") {
  for (int i = 0; i < kNumTemporalRelations; ++i) {
    auto r = static_cast<TemporalRelation>(i);
    CHECK(ParseRelation(RelationName(r)) == r);
    CHECK(Inverse(Inverse(r)) == r);
  }
  CHECK(Inverse(TemporalRelation::kMeets) == TemporalRelation::kMetBy);
  CHECK(Inverse(TemporalRelation::kDuring) == TemporalRelation::kContains);
  CHECK(Inverse(TemporalRelation::kEquals) == TemporalRelation::kEquals);
}

TEST_CASE("exactly one relation holds, exhaustively up to six points") {
  for (size_t n = 2; n <= 6; ++n) {
    auto intervals = testing::AllIntervals(n);
    for (auto a : intervals) {
      for (auto b : intervals) {
        auto p = testing::AllenPredicates(a, b);
        int holding = 0;
        for (bool v : p) holding += v;
        REQUIRE(holding == 1);
        TemporalRelation r = Relation(a, b);
        CHECK(p[static_cast<int>(r)]);
        CHECK(Relation(b, a) == Inverse(r));
        CHECK(SharesTime(r) == testing::SharesCell(a, b));
      }
    }
  }
}

TEST_CASE("overlaps report on the dialogue pivot") {
  Document doc = DialoguePivot();
  OverlapReport report = OverlapsReport(doc);
  CHECK(report.skipped == 0);
  REQUIRE(report.pairs.size() == 3);
  auto got = testing::ReportedPairs(report);
  CHECK(got == testing::BruteForceOverlaps(doc));
  CHECK(got.at(testing::Unordered("u_SPK0#1", "u_SPK1#1")) == "T3,T4");
  CHECK(got.at(testing::Unordered("u_SPK0#1", "incident_SPK0#1")) == "T3,T4");
  CHECK(got.at(testing::Unordered("u_SPK1#1", "incident_SPK0#1")) == "T3,T5");
  CHECK(got.count(testing::Unordered("u_SPK1#1", "u_SPK0#2")) == 0);
  // Deterministic order: by the first annotation's start index.
  CHECK(report.pairs[0].first == "u_SPK0#1");
}

TEST_CASE("overlaps report edge cases") {
  Document one = DialoguePivot();
  one.annotations.resize(1);
  CHECK(OverlapsReport(one).pairs.empty());

  Document unanchored = DialoguePivot();
  unanchored.annotations = {Timed("a", std::nullopt), Timed("b", std::nullopt)};
  CHECK(OverlapsReport(unanchored).skipped == 2);
  CHECK(OverlapsReport(SequenceImplicit(unanchored)).pairs.empty());
}

TEST_CASE("overlaps report matches brute force on random documents") {
  std::mt19937 rng(5);
  for (int round = 0; round < 200; ++round) {
    Document doc;
    Timeline t("tl", TimeUnit::kSymbolic);
    size_t n = 2 + rng() % 6;
    for (size_t i = 0; i < n; ++i) t.AddPoint("p" + std::to_string(i));
    doc.timelines.push_back(t);
    size_t count = rng() % 7;
    for (size_t i = 0; i < count; ++i) {
      size_t s = rng() % (n - 1);
      size_t e = s + 1 + rng() % (n - 1 - s);
      doc.annotations.push_back(Timed("a" + std::to_string(i),
                                      EventInterval{"p" + std::to_string(s),
                                                    "p" + std::to_string(e), "tl"}));
    }
    OverlapReport report = OverlapsReport(doc);
    CHECK(testing::ReportedPairs(report) == testing::BruteForceOverlaps(doc));
    for (const auto &p : report.pairs) CHECK(p.first != p.second);
  }
}

TEST_CASE("sequence_implicit places unanchored events after the previous one") {
  Document doc = DialoguePivot();
  doc.annotations.resize(1);
  doc.annotations.push_back(Timed("u2", std::nullopt));
  Document seq = SequenceImplicit(doc);
  const auto &u2 = std::get<EventInterval>(*seq.annotations[1].range);
  CHECK(u2.start == "~auto1");
  CHECK(u2.end == "~auto2");
  const Timeline &t = seq.timelines[0];
  CHECK(t.Find("~auto1")->synthetic);
  CHECK(Relation(t, std::get<EventInterval>(*seq.annotations[0].range), u2) ==
        TemporalRelation::kBefore);
  CHECK(SequenceImplicit(seq) == seq);
  CHECK(SequenceImplicit(DialoguePivot()) == DialoguePivot());
}

TEST_CASE("sequence_implicit without any timeline") {
  Document doc;
  doc.annotations = {Timed("a", std::nullopt), Timed("b", std::nullopt)};
  Document seq = SequenceImplicit(doc);
  REQUIRE(seq.timelines.size() == 1);
  CHECK(seq.timelines[0].size() == 4);
  const Timeline &t = seq.timelines[0];
  CHECK(Relation(t, std::get<EventInterval>(*seq.annotations[0].range),
                 std::get<EventInterval>(*seq.annotations[1].range)) ==
        TemporalRelation::kBefore);
  CHECK(SequenceImplicit(seq) == seq);
}

TEST_CASE("check_level_coherence") {
  Document doc = DialoguePivot();
  CHECK(CheckLevelCoherence(doc, "transcription").empty());

  doc.annotations.push_back(Timed("c", ComponentRefs{{"t1"}}));
  Findings f = CheckLevelCoherence(doc, "transcription");
  REQUIRE(f.size() == 1);
  CHECK(f[0].code == "LEVEL_INCOHERENT");
  CHECK(f[0].location == "c");

  Document morph;
  morph.levels.push_back({"morph", {}, RangingMechanism::kComponent, {"partOfSpeech"}});
  morph.layers.push_back({"pos", "pos", "morph", "", ""});
  Annotation a = Timed("w1", ComponentRefs{{"t1"}}, "pos");
  a.qualifiers = {{CategoryRef::Name("grammaticalGender"), CategoryRef::Name("masculine")}};
  morph.annotations.push_back(a);
  CHECK(CheckLevelCoherence(morph, "morph").size() == 1);

  CHECK_THROWS_AS(CheckLevelCoherence(doc, "nope"), ReferenceError);
}

}  // namespace spoken
