// cli/cli-test.cc

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

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <unistd.h>

#include "base/text-utils.h"
#include "cli/commands.h"
#include "cli/config.h"
#include "doctest.h"
#include "tier/tier-file.h"

namespace spoken {
namespace cli {
namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run Spokenkit(const std::vector<std::string> &args) {
  std::ostringstream out, err;
  int status = RunCommand(args, out, err);
  return {status, out.str(), err.str()};
}

std::vector<std::string> Lines(const std::string &text) {
  std::vector<std::string> lines = Split(text, '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

// A scratch directory removed at the end of the test.
struct Scratch {
  std::filesystem::path dir;
  Scratch() {
    dir = std::filesystem::temp_directory_path() /
          ("spokenkit-cli-test-" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
  }
  ~Scratch() { std::filesystem::remove_all(dir); }
  std::string Write(const std::string &name, const std::string &text) const {
    std::string path = (dir / name).string();
    std::ofstream(path, std::ios::binary) << text;
    return path;
  }
};

TEST_CASE("validate exit status") {
  Run dialogue = Spokenkit({"validate", "dialogue.xml"});
  CHECK(dialogue.status == kExitOk);
  CHECK(dialogue.out == "0 errors, 0 warnings\n");
  CHECK(dialogue.err.empty());

  Run intext = Spokenkit({"validate", "intext_overlap.xml"});
  CHECK(intext.status == kExitErrors);
  CHECK(intext.out.find("error DUP_ID tp2u:") != std::string::npos);

  Run missing = Spokenkit({"validate", "missing.xml"});
  CHECK(missing.status == kExitFailure);
  CHECK(missing.err.find("missing.xml") != std::string::npos);

  // Warnings alone never fail.
  Run flib = Spokenkit({"validate", "category_flib.xml"});
  CHECK(flib.status == kExitOk);
  CHECK(flib.out.find("warning BAD_ID #NC:") != std::string::npos);

  // An unreadable file among several still yields 2.
  CHECK(Spokenkit({"validate", "intext_overlap.xml", "missing.xml"}).status == kExitFailure);
}

TEST_CASE("validate formats") {
  Run tsv = Spokenkit({"validate", "--format", "tsv", "intext_overlap.xml"});
  std::vector<std::string> lines = Lines(tsv.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0].rfind("error\tDUP_ID\ttp2u\t", 0) == 0);
  for (const auto &line : lines) CHECK(Split(line, '\t').size() == 4);

  Run several = Spokenkit({"validate", "--format", "tsv", "dialogue.xml", "intext_overlap.xml"});
  CHECK(Lines(several.out).size() == 2);
  CHECK(several.out.rfind("intext_overlap.xml\terror\tDUP_ID\ttp2u\t", 0) == 0);

  Run text = Spokenkit({"validate", "dialogue.xml", "intext_overlap.xml"});
  CHECK(text.out.rfind("dialogue.xml: 0 errors, 0 warnings\n", 0) == 0);
  CHECK(Lines(text.out).back() == "intext_overlap.xml: 1 error, 1 warning");

  CHECK(Spokenkit({"validate", "--format", "xml", "dialogue.xml"}).status == kExitFailure);
}

TEST_CASE("validate with registry and tagset") {
  Scratch scratch;
  std::string tags = ReadFile("tags.xml");
  tags.replace(tags.find("masculine"), 9, "neuter");
  std::string lib = scratch.Write("neuter.xml", tags);
  // The document without its own libraries relies on --tagset.
  std::string doc = ReadFile("chat.xml");
  doc.erase(doc.find("<back>"), doc.find("</back>") + 7 - doc.find("<back>"));
  std::string chat = scratch.Write("chat.xml", doc);

  Run plain = Spokenkit({"validate", chat});
  CHECK(plain.status == kExitErrors);
  CHECK(plain.out.find("DANGLING_REF") != std::string::npos);
  Run masculine = Spokenkit({"validate", "--tagset", "tags.xml", chat});
  CHECK(masculine.status == kExitOk);

  Run fr = Spokenkit({"validate", "--registry", "registry.tsv", "--tagset", lib, "--lang", "fr", chat});
  CHECK(fr.status == kExitErrors);
  CHECK(fr.out.find("DOMAIN_VIOLATION") != std::string::npos);
  Run de = Spokenkit({"validate", "--registry", "registry.tsv", "--tagset", lib, "--lang", "de", chat});
  CHECK(de.status == kExitOk);
  CHECK(de.out.find("DOMAIN_VIOLATION") == std::string::npos);

  std::string settings = scratch.Write("fr.conf", "registry " +
                                                      std::filesystem::absolute("registry.tsv").string() +
                                                      "\ntagset neuter.xml\nlang fr\n");
  Run configured = Spokenkit({"validate", "--config", settings, chat});
  CHECK(configured.out == fr.out);
  Run flag_wins = Spokenkit({"validate", "--config", settings, "--lang", "de", chat});
  CHECK(flag_wins.out == de.out);

  Run bad_registry = Spokenkit({"validate", "--registry", "nowhere.tsv", "dialogue.xml"});
  CHECK(bad_registry.status == kExitFailure);
}

TEST_CASE("validate is deterministic across jobs") {
  std::vector<std::string> files = {
      "dialogue.xml",        "intext_overlap.xml", "recording.xml",  "person.xml",
      "tags.xml",         "category_flib.xml",  "chat.xml",       "pomme_de_terre.xml",
      "shared_token.xml", "seg.xml",            "raw_text.xml",   "unanchored.xml",
      "empty_body.xml",   "dangling_synch.xml", "offset_order.xml", "score.tier"};
  std::vector<std::string> serial = {"validate", "--registry", "registry.tsv", "--lang", "fr"};
  serial.insert(serial.end(), files.begin(), files.end());
  Run one = Spokenkit(serial);
  std::vector<std::string> parallel = serial;
  parallel.insert(parallel.begin() + 1, {"--jobs", "8"});
  for (int i = 0; i < 5; ++i) {
    Run many = Spokenkit(parallel);
    CHECK(many.status == one.status);
    CHECK(many.out == one.out);
    CHECK(many.err == one.err);
  }
  // Files appear in argument order.
  size_t pos = 0;
  for (const auto &f : files) {
    size_t at = one.out.find(f + ": ", pos);
    CHECK(at != std::string::npos);
    pos = at;
  }
  CHECK(Spokenkit({"validate", "--jobs", "0", "dialogue.xml"}).status == kExitFailure);
}

TEST_CASE("config file") {
  Scratch scratch;
  std::string config = scratch.Write("spoken.conf",
                                     "# overrides\n"
                                     "severity DUP_ID warning\n"
                                     "\n"
                                     "conventions rules/gat.rules\n"
                                     "category verbal urn:dc:transcription\n"
                                     "registry /abs/registry.tsv\n"
                                     "tagset tags.xml\n"
                                     "lang fr\n");
  Config c = LoadConfig(config);
  CHECK(c.severities.Of("DUP_ID") == Severity::kWarning);
  CHECK(c.severities.Of("DANGLING_REF") == Severity::kError);
  CHECK(c.conventions == (scratch.dir / "rules/gat.rules").string());
  CHECK(c.registry == "/abs/registry.tsv");
  CHECK(c.tagset == (scratch.dir / "tags.xml").string());
  CHECK(c.language == "fr");
  CHECK(c.category_pids.at("verbal") == "urn:dc:transcription");

  std::string severities = scratch.Write("severities.conf", "severity DUP_ID warning\n");
  Run intext = Spokenkit({"validate", "--config", severities, "intext_overlap.xml"});
  CHECK(intext.status == kExitOk);
  CHECK(intext.out.find("warning DUP_ID tp2u:") != std::string::npos);

  CHECK_THROWS_AS(ParseConfig("severity DUP_ID fatal\n"), ParseError);
  CHECK_THROWS_AS(ParseConfig("lang\n"), ParseError);
  try {
    ParseConfig("# x\nlang fr\nverbose yes\n");
    FAIL("expected an error");
  } catch (const ParseError &e) {
    CHECK(e.line() == 3);
  }
  std::string broken = scratch.Write("broken.conf", "severity X\n");
  Run bad = Spokenkit({"validate", "--config", broken, "dialogue.xml"});
  CHECK(bad.status == kExitFailure);
  CHECK(bad.err.find("line 1") != std::string::npos);
}

TEST_CASE("convert between tiers and TEI") {
  Scratch scratch;
  std::string tei_path = (scratch.dir / "score.xml").string();
  Run to_tei = Spokenkit({"convert", "score.tier", "-o", tei_path});
  REQUIRE(to_tei.status == kExitOk);
  CHECK(to_tei.out.empty());
  std::string tei = ReadFile(tei_path);
  CHECK(tei.find("<timeline unit=\"s\">") != std::string::npos);
  CHECK(tei.find("<anchor synch=\"#T1\"/>Okay.<anchor synch=\"#T2\"/>") != std::string::npos);
  CHECK(tei.find("<u ") != std::string::npos);

  Run back = Spokenkit({"convert", tei_path, "--to", "tier"});
  REQUIRE(back.status == kExitOk);
  CHECK(back.err.empty());
  TierDocument original = ParseTier(ReadFile("score.tier")).document;
  CHECK(ParseTier(back.out).document == original);
  CHECK(back.out == SerializeTier(original));

  Run same = Spokenkit({"convert", "score.tier", "--to", "tier"});
  CHECK(same.out == SerializeTier(original));
}

TEST_CASE("convert the Dialogue to tiers") {
  Run r = Spokenkit({"convert", "dialogue.xml", "--to", "tier"});
  REQUIRE(r.status == kExitOk);
  CHECK(r.err.empty());
  TierDocument td = ParseTier(r.out).document;
  CHECK(td.tiers.size() == 3);
  CHECK(td.speakers.size() == 2);
}

TEST_CASE("convert with conventions and timelines") {
  Run promoted = Spokenkit({"convert", "raw_text.xml", "--to", "tei", "--conventions", "gat.rules"});
  REQUIRE(promoted.status == kExitOk);
  CHECK(promoted.out.find("Alors ça dépend <vocal><desc>cough</desc></vocal> un petit peu.") !=
        std::string::npos);
  CHECK(promoted.out.find("((cough))") == std::string::npos);

  Run plain = Spokenkit({"convert", "raw_text.xml", "--to", "tei"});
  CHECK(plain.out.find("((cough))") != std::string::npos);

  Run lossy = Spokenkit({"convert", "unanchored.xml", "--to", "tier"});
  CHECK(lossy.status == kExitOk);
  CHECK(Lines(lossy.err).size() == 3);
  CHECK(lossy.err.find("residue u_SPK1#1:") != std::string::npos);

  Run sequenced = Spokenkit({"convert", "unanchored.xml", "--to", "tier", "--materialize-timeline"});
  CHECK(sequenced.err.empty());
  CHECK(ParseTier(sequenced.out).document.points.size() == 6);

  Run materialized = Spokenkit({"convert", "unanchored.xml", "--to", "tei", "--materialize-timeline"});
  CHECK(materialized.out.find("<when xml:id=\"auto6\"/>") != std::string::npos);
  CHECK(materialized.out.find("~") == std::string::npos);

  Scratch scratch;
  std::string broken = scratch.Write("broken.xml", "<TEI><text>");
  CHECK(Spokenkit({"convert", broken, "--to", "tier"}).status == kExitFailure);
  std::string bad_tier = scratch.Write("bad.tier", "event\tX\tT1\tT2\ttext\n");
  Run bad = Spokenkit({"convert", bad_tier});
  CHECK(bad.status == kExitFailure);
  CHECK(bad.err.find("line 1") != std::string::npos);
  CHECK(Spokenkit({"convert", "dialogue.xml", "--to", "pdf"}).status == kExitFailure);
}

TEST_CASE("overlaps") {
  Run dialogue = Spokenkit({"overlaps", "dialogue.xml"});
  CHECK(dialogue.status == kExitOk);
  std::vector<std::string> rows = Lines(dialogue.out);
  REQUIRE(rows.size() == 3);
  std::set<std::string> got(rows.begin(), rows.end());
  CHECK(got.count("u_SPK0#1\tu_SPK1#1\tT3\tT4\toverlaps"));
  CHECK(got.count("u_SPK0#1\tincident_SPK0#1\tT3\tT4\toverlaps"));
  CHECK(got.count("incident_SPK0#1\tu_SPK1#1\tT3\tT5\tstarts"));

  Run single = Spokenkit({"overlaps", "single_utterance.xml"});
  CHECK(single.status == kExitOk);
  CHECK(single.out.empty());

  Run unanchored = Spokenkit({"overlaps", "unanchored.xml"});
  CHECK(unanchored.status == kExitOk);
  CHECK(unanchored.out.empty());

  Run tier = Spokenkit({"overlaps", "score.tier"});
  CHECK(Lines(tier.out).size() == 3);
}

TEST_CASE("tag tools") {
  Run expand = Spokenkit({"tag", "expand", "--lib", "tags.xml", "Ncms__"});
  CHECK(expand.status == kExitOk);
  CHECK(expand.out ==
        "partOfSpeech=commonNoun\ngrammaticalGender=masculine\ngrammaticalNumber=singular\n");
  CHECK(Spokenkit({"tag", "expand", "--lib", "tags.xml", "#Ncms__"}).out == expand.out);

  Run list = Spokenkit({"tag", "list", "--lib", "tags.xml"});
  CHECK(list.out == "Ncms__\nNcfs__\n");

  Run unknown = Spokenkit({"tag", "expand", "--lib", "tags.xml", "Xyz"});
  CHECK(unknown.status == kExitFailure);
  CHECK(unknown.out.empty());
  CHECK(unknown.err.find("unknown tag 'Xyz'") != std::string::npos);
  CHECK(Spokenkit({"tag", "list", "--lib", "nowhere.xml"}).status == kExitFailure);
}

TEST_CASE("usage") {
  CHECK(Spokenkit({}).status == kExitFailure);
  CHECK(Spokenkit({"frobnicate"}).status == kExitFailure);
  CHECK(Spokenkit({"tag"}).status == kExitFailure);
  CHECK(Spokenkit({"validate"}).status == kExitFailure);
  Run help = Spokenkit({"--help"});
  CHECK(help.status == kExitOk);
  CHECK(help.out.find("validate") != std::string::npos);
}

TEST_CASE("commands are deterministic") {
  const std::vector<std::vector<std::string>> commands = {
      {"validate", "--format", "tsv", "intext_overlap.xml", "recording.xml"},
      {"convert", "dialogue.xml", "--to", "tier"},
      {"convert", "score.tier"},
      {"overlaps", "dialogue.xml"},
      {"tag", "list", "--lib", "tags.xml"}};
  for (const auto &c : commands) {
    Run a = Spokenkit(c), b = Spokenkit(c);
    CHECK(a.status == b.status);
    CHECK(a.out == b.out);
    CHECK(a.err == b.err);
  }
}

}  // namespace
}  // namespace cli
}  // namespace spoken
