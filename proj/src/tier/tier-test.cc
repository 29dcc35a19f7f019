// tier/tier-test.cc

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
#include "core/annotation-ops.h"
#include "core/temporal.h"
#include "doctest.h"
#include "support/overlap-oracle.h"
#include "support/tier-generator.h"
#include "tei/reader.h"
#include "tier/convert.h"
#include "tier/tier-file.h"

namespace spoken {
namespace {

int ErrorLine(std::string_view text) {
  try {
    ParseTier(text);
  } catch (const ParseError &e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_CASE("sample score") {
  std::string text = ReadFile("score.tier");
  TierFile file = ParseTier(text);
  const TierDocument &td = file.document;
  CHECK(td.speakers.size() == 2);
  CHECK(td.points.size() == 7);
  REQUIRE(td.tiers.size() == 3);
  CHECK(td.tiers[0].events.size() == 3);
  CHECK(td.tiers[1].events[0].text == "Alors ça dépend ((cough)) un petit peu.");
  CHECK(td.tiers[2].category == "gesture");
  CHECK(td.points[4].offset == 3.0);
  CHECK(SerializeTier(file) == text);
}

TEST_CASE("layout is kept") {
  std::string text = "# c\n@point\ta\t0.50\n\n@point\tb\t-\n@tier\tt\t-\tverbal\nevent\tt\ta\tb\tx\ty";
  TierFile file = ParseTier(text);
  CHECK(file.document.tiers[0].events[0].text == "x\ty");
  CHECK_FALSE(file.final_newline);
  CHECK(SerializeTier(file) == text);

  file.document.tiers[0].events[0].text = "z";
  CHECK(SerializeTier(file) ==
        "# c\n@point\ta\t0.50\n\n@point\tb\t-\n@tier\tt\t-\tverbal\nevent\tt\ta\tb\tz");
  file.document.tiers[0].events.push_back({"a", "b", "w"});
  CHECK(SerializeTier(file) == SerializeTier(file.document));
  CHECK(SerializeTier(file.document) ==
        "@point\ta\t0.5\n@point\tb\t-\n@tier\tt\t-\tverbal\nevent\tt\ta\tb\tz\nevent\tt\ta\tb\tw\n");
}

TEST_CASE("tier file errors") {
  CHECK(ParseTier("").document.tiers.empty());
  CHECK(ParseTier("@speaker\ts\tS\n@point\ta\t-\n").document.tiers.empty());
  CHECK(ErrorLine("@point\ta\t-\n@point\tb\t-\n@tier\tt\t-\tv\nevent\tt\ta\ta\tx\n") == 4);
  CHECK(ErrorLine("@point\ta\t-\n@point\tb\t-\n@tier\tt\t-\tv\nevent\tt\tb\ta\tx\n") == 4);
  CHECK(ErrorLine("@point\ta\t-\n@tier\tt\t-\tv\nevent\tt\ta\tzz\tx\n") == 3);
  CHECK(ErrorLine("@point\ta\t-\n@point\tb\t-\n@point\tc\t-\n@tier\tt\t-\tv\n"
                  "event\tt\ta\tc\tx\nevent\tt\tb\tc\ty\n") == 6);
  CHECK(ErrorLine("@point\ta\t-\n@point\tb\t-\n@point\tc\t-\n@tier\tt\t-\tv\n"
                  "event\tt\tb\tc\ty\nevent\tt\ta\tc\tx\n") == 6);
  CHECK(ErrorLine("@point\ta\t-\n@point\ta\t-\n") == 2);
  CHECK(ErrorLine("@point\ta\tsoon\n") == 1);
  CHECK(ErrorLine("@point\ta\t-1\n") == 1);
  CHECK(ErrorLine("@tier\tt\tnobody\tverbal\n") == 1);
  CHECK(ErrorLine("\n\nevent\tt\ta\tb\tx\n") == 3);
  CHECK(ErrorLine("@speaker\ts\n") == 1);
  CHECK(ErrorLine("speaker\ts\tS\n") == 1);

  // Events of different tiers may overlap; meeting events of one tier may not clash.
  CHECK_NOTHROW(ParseTier("@point\ta\t-\n@point\tb\t-\n@point\tc\t-\n@tier\tt\t-\tv\n"
                          "@tier\tu\t-\tv\nevent\tt\ta\tc\tx\nevent\tu\ta\tb\ty\n"
                          "event\tu\tb\tc\tz\n"));
}

TEST_CASE("conversion to the pivot") {
  TierDocument td = ParseTier(ReadFile("score.tier")).document;
  Document doc = ToCore(td);
  CHECK(doc.annotations.size() == 5);
  CHECK(doc.layers.size() == 3);
  CHECK(doc.metadata.participants[1].name == "Judith White");
  const Annotation *a = doc.FindAnnotation("SPK1#1");
  REQUIRE(a);
  CHECK(a->qualifiers[0].feature.text == "verbal");
  CHECK(a->qualifiers[0].value.text == "Alors ça dépend ((cough)) un petit peu.");
  CHECK(CheckLevelCoherence(doc, kTranscriptLevel).empty());

  SUBCASE("overlaps follow the columns") {
    testing::PairSet expected = testing::BruteForceOverlaps(doc);
    CHECK(testing::ReportedPairs(OverlapsReport(doc)) == expected);
    CHECK(expected == testing::PairSet{{{"SPK0#2", "SPK1#1"}, "T3,T4"},
                                       {{"SPK0#2", "SPK0-nv#1"}, "T3,T4"},
                                       {{"SPK0-nv#1", "SPK1#1"}, "T3,T5"}});
  }
  SUBCASE("category pids") {
    Document mapped = ToCore(td, {{{"verbal", "urn:dc:verbal"}}});
    CHECK(mapped.FindAnnotation("SPK1#1")->qualifiers[0].feature.kind == CategoryRef::Kind::kPid);
    CHECK(mapped.FindAnnotation("SPK0-nv#1")->qualifiers[0].feature.kind ==
          CategoryRef::Kind::kName);
    CHECK(FromCore(mapped).document == td);
  }
}

TEST_CASE("overlap counts") {
  std::string points = "@point\ta\t-\n@point\tb\t-\n@point\tc\t-\n@point\td\t-\n";
  Document sequential =
      ToCore(ParseTier(points + "@tier\tt\t-\tv\nevent\tt\ta\tb\tx\nevent\tt\tb\tc\ty\n"
                                "event\tt\tc\td\tz\n").document);
  CHECK(OverlapsReport(sequential).pairs.empty());
  Document spanning =
      ToCore(ParseTier(points + "@tier\tt\t-\tverbal\n@tier\tg\t-\tgesture\n"
                                "event\tt\ta\tb\tx\nevent\tt\tb\tc\ty\nevent\tg\ta\tc\tnod\n")
                 .document);
  CHECK(OverlapsReport(spanning).pairs.size() == 2);
  CHECK(testing::BruteForceOverlaps(spanning).size() == 2);
}

TEST_CASE("conversion from the pivot") {
  SUBCASE("dialogue") {
    Document doc = tei::ParseDocument(ReadFile("dialogue.xml")).document;
    FromCoreResult r = FromCore(doc);
    CHECK(r.residue.empty());
    const TierDocument &td = r.document;
    REQUIRE(td.tiers.size() == 3);
    CHECK(td.tiers[0].id == "verbal_SPK0");
    CHECK(td.tiers[0].speaker == "SPK0");
    CHECK(td.tiers[0].events ==
          std::vector<TierEvent>{{"T1", "T4", "Okay. Très bien, très bien."},
                                 {"T6", "T7", "Ah oui?."}});
    CHECK(td.tiers[1].id == "verbal_SPK1");
    CHECK(td.tiers[1].events ==
          std::vector<TierEvent>{{"T3", "T6", "Alors ça depend un petit peu."}});
    CHECK(td.tiers[2].category == "incident");
    CHECK(td.tiers[2].events == std::vector<TierEvent>{{"T3", "T5", "right hand raised"}});
    CHECK(td.speakers == std::vector<TierSpeaker>{{"SPK0", "Peter Black"},
                                                  {"SPK1", "Judith White"}});
    CHECK(td.points.size() == 8);
    CHECK_NOTHROW(CheckTierDocument(td));
  }
  SUBCASE("word forms and seg trees are residue") {
    FromCoreResult r = FromCore(tei::ParseDocument(ReadFile("pomme_de_terre.xml")).document);
    bool word_form = false;
    for (const auto &item : r.residue) word_form = word_form || item.reason.find("word form") == 0;
    CHECK(word_form);
    FromCoreResult segs = FromCore(tei::ParseDocument(ReadFile("seg.xml")).document);
    REQUIRE(segs.residue.size() == 1);
    CHECK(segs.residue[0].reason.find("seg tree of type 'sentence'") == 0);
  }
  SUBCASE("unranged and multi-qualifier annotations") {
    Document doc = tei::ParseDocument(ReadFile("unanchored.xml")).document;
    CHECK(FromCore(doc).residue.size() == 3);
    Document seq = SequenceImplicit(doc);
    seq.annotations[0].qualifiers.push_back(seq.annotations[0].qualifiers[0]);
    FromCoreResult r = FromCore(seq);
    REQUIRE(r.residue.size() == 1);
    CHECK(r.residue[0].id == seq.annotations[0].id);
    CHECK(r.document.tiers[0].events.size() == 1);
  }
  SUBCASE("millisecond offsets") {
    Document doc = tei::ParseDocument(ReadFile("offset_order.xml")).document;
    TierDocument td = FromCore(doc).document;
    CHECK(td.points[1].offset == 0.8);
  }
}

TEST_CASE("random round trips") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    TierDocument td = testing::RandomTierDocument(rng);
    CAPTURE(SerializeTier(td));
    CHECK(ParseTier(SerializeTier(td)).document == td);
    Document doc = ToCore(td);
    size_t events = 0;
    for (const auto &t : td.tiers) events += t.events.size();
    CHECK(doc.annotations.size() == events);
    FromCoreResult back = FromCore(doc);
    CHECK(back.residue.empty());
    CHECK(back.document == td);

    const Timeline &timeline = doc.timelines[0];
    std::vector<IndexInterval> tier_side;
    for (const auto &t : td.tiers)
      for (const auto &e : t.events)
        tier_side.push_back({static_cast<size_t>(td.PointIndex(e.start)),
                             static_cast<size_t>(td.PointIndex(e.end))});
    for (size_t i = 0; i < tier_side.size(); ++i)
      for (size_t j = 0; j < tier_side.size(); ++j) {
        const auto &x = std::get<EventInterval>(*doc.annotations[i].range);
        const auto &y = std::get<EventInterval>(*doc.annotations[j].range);
        CHECK(Relation(timeline, x, y) == Relation(tier_side[i], tier_side[j]));
      }
  }
}

}  // namespace spoken
