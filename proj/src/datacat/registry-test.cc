// datacat/registry-test.cc

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

#include "datacat/registry.h"

#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"

namespace spoken {

namespace {

std::string ReadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

DataCategory Simple(std::string pid, std::string broader = "") {
  DataCategory c;
  c.pid = pid;
  c.name = pid;
  c.broader = std::move(broader);
  return c;
}

DataCategory Gender() {
  DataCategory g;
  g.pid = "grammaticalGender";
  g.name = "grammaticalGender";
  g.kind = DataCategory::Kind::kComplex;
  g.domain = {"masculine", "feminine", "neuter"};
  g.restrictions["fr"] = {"masculine", "feminine"};
  return g;
}

Registry SampleRegistry() {
  Registry reg;
  for (const char *v : {"masculine", "feminine", "neuter", "noun", "verb"})
    reg.Register(Simple(v));
  reg.Register(Simple("properNoun", "noun"));
  reg.Register(Gender());
  return reg;
}

Qualifier Pid(std::string f, std::string v) {
  return {CategoryRef::Pid(std::move(f)), CategoryRef::Pid(std::move(v))};
}

}  // namespace

TEST_CASE("register") {
  Registry reg = SampleRegistry();
  CHECK(reg.Find("grammaticalGender") != nullptr);
  CHECK_THROWS_AS(reg.Register(Simple("noun")), RegistryError);

  DataCategory bad = Gender();
  bad.pid = "gender2";
  bad.restrictions["fr"] = {"masculine", "common"};
  try {
    reg.Register(bad);
    FAIL("expected a subset violation");
  } catch (const RegistryError &e) {
    CHECK(e.kind() == RegistryError::Kind::kNotSubset);
  }

  DataCategory simple_with_domain = Simple("odd");
  simple_with_domain.domain = {"noun"};
  CHECK_THROWS_AS(reg.Register(simple_with_domain), RegistryError);
}

TEST_CASE("broader cycles are rejected, dangling broader links are not") {
  Registry reg;
  reg.Register(Simple("a", "b"));  // b not registered yet
  reg.Register(Simple("c", "a"));
  try {
    reg.Register(Simple("b", "c"));
    FAIL("expected a cycle");
  } catch (const RegistryError &e) {
    CHECK(e.kind() == RegistryError::Kind::kBroaderCycle);
  }
  CHECK_THROWS_AS(reg.Register(Simple("self", "self")), RegistryError);
}

TEST_CASE("is_subcategory") {
  Registry reg = SampleRegistry();
  CHECK(IsSubcategory(reg, "properNoun", "noun"));
  CHECK_FALSE(IsSubcategory(reg, "noun", "properNoun"));
  CHECK(IsSubcategory(reg, "noun", "noun"));
  CHECK_THROWS_AS(IsSubcategory(reg, "noun", "nope"), RegistryError);
}

TEST_CASE("validate_value") {
  Registry reg = SampleRegistry();
  CHECK(ValidateValue(reg, "grammaticalGender", "neuter", "fr") ==
        ValueVerdict::kLanguageRestricted);
  CHECK(ValidateValue(reg, "grammaticalGender", "feminine", "fr") == ValueVerdict::kOk);
  CHECK(ValidateValue(reg, "grammaticalGender", "neuter") == ValueVerdict::kOk);
  CHECK(ValidateValue(reg, "grammaticalGender", "neuter", "de") == ValueVerdict::kOk);
  CHECK(ValidateValue(reg, "grammaticalGender", "noun") == ValueVerdict::kOutOfDomain);
  CHECK_THROWS_AS(ValidateValue(reg, "noun", "verb"), RegistryError);
  CHECK_THROWS_AS(ValidateValue(reg, "nope", "verb"), RegistryError);
}

TEST_CASE("restrictions only narrow") {
  Registry reg = SampleRegistry();
  for (const auto &value : reg.categories())
    for (const char *lang : {"fr", "de", "en"})
      if (ValidateValue(reg, "grammaticalGender", value.pid, lang) == ValueVerdict::kOk)
        CHECK(ValidateValue(reg, "grammaticalGender", value.pid) == ValueVerdict::kOk);
}

TEST_CASE("equivalent") {
  Registry reg = SampleRegistry();
  CHECK(Equivalent(reg, Pid("grammaticalGender", "feminine"),
                   Pid("grammaticalGender", "feminine")).equivalent);
  Equivalence e = Equivalent(reg, Pid("grammaticalGender", "feminine"),
                             Pid("grammaticalGender", "masculine"));
  CHECK_FALSE(e.equivalent);
  CHECK(e.reason == EquivalenceReason::kValueDiffers);
  Qualifier named{CategoryRef::Name("gender"), CategoryRef::Pid("feminine")};
  e = Equivalent(reg, named, Pid("grammaticalGender", "feminine"));
  CHECK_FALSE(e.equivalent);
  CHECK(e.reason == EquivalenceReason::kUnmappedName);
  CHECK(std::string(ReasonName(e.reason)) == "unmappedName");
}

TEST_CASE("equivalent is an equivalence relation over pid qualifiers") {
  Registry reg = SampleRegistry();
  std::vector<Qualifier> qs;
  for (const char *f : {"grammaticalGender", "partOfSpeech"})
    for (const char *v : {"masculine", "feminine", "noun"}) qs.push_back(Pid(f, v));
  for (const auto &a : qs) {
    CHECK(Equivalent(reg, a, a).equivalent);
    for (const auto &b : qs) {
      CHECK(Equivalent(reg, a, b).equivalent == Equivalent(reg, b, a).equivalent);
      for (const auto &c : qs)
        if (Equivalent(reg, a, b).equivalent && Equivalent(reg, b, c).equivalent)
          CHECK(Equivalent(reg, a, c).equivalent);
    }
  }
}

TEST_CASE("comparable") {
  Registry reg = SampleRegistry();
  CHECK(Comparable(reg, Pid("pos", "noun"), Pid("pos", "properNoun")).comparability ==
        Comparability::kQ1BroaderValue);
  CHECK(Comparable(reg, Pid("pos", "properNoun"), Pid("pos", "noun")).comparability ==
        Comparability::kQ2BroaderValue);
  CHECK(Comparable(reg, Pid("pos", "noun"), Pid("pos", "noun")).comparability ==
        Comparability::kEqual);
  CHECK(Comparable(reg, Pid("pos", "noun"), Pid("pos", "verb")).comparability ==
        Comparability::kDisjoint);
  ComparisonResult r = Comparable(reg, Pid("pos", "noun"), Pid("gender", "noun"));
  CHECK(r.comparability == Comparability::kDisjoint);
  CHECK(r.reason == "featureDiffers");
}

TEST_CASE("is_subcategory is a preorder on random forests") {
  std::mt19937 rng(3);
  for (int round = 0; round < 50; ++round) {
    Registry reg;
    std::vector<std::string> pids;
    for (int i = 0; i < 12; ++i) {
      std::string pid = "c" + std::to_string(i);
      std::string broader = (i == 0 || rng() % 4 == 0) ? "" : pids[rng() % pids.size()];
      reg.Register(Simple(pid, broader));
      pids.push_back(pid);
    }
    for (const auto &a : pids) {
      CHECK(IsSubcategory(reg, a, a));
      for (const auto &b : pids) {
        if (a != b && IsSubcategory(reg, a, b)) CHECK_FALSE(IsSubcategory(reg, b, a));
        for (const auto &c : pids)
          if (IsSubcategory(reg, a, b) && IsSubcategory(reg, b, c))
            CHECK(IsSubcategory(reg, a, c));
      }
    }
  }
}

TEST_CASE("registry file round-trips bit-exactly") {
  std::string text = ReadFile("registry.tsv");
  REQUIRE_FALSE(text.empty());
  RegistryFile file = ParseRegistry(text);
  CHECK(SerializeRegistry(file) == text);
  const Registry &reg = file.registry;
  const DataCategory *g = reg.FindByName("grammaticalGender");
  REQUIRE(g != nullptr);
  CHECK(g->domain.size() == 3);
  CHECK(g->restrictions.at("fr").size() == 2);
  CHECK(ValidateValue(reg, g->pid, reg.FindByName("neuter")->pid, "fr") ==
        ValueVerdict::kLanguageRestricted);
  CHECK(IsSubcategory(reg, reg.FindByName("properNoun")->pid, reg.FindByName("noun")->pid));

  std::string odd = "# c\n\na\tsimple\tA\t-\t-\nb\tcomplex\tB\t-\ta\tde=a;fr=a\n";
  CHECK(SerializeRegistry(ParseRegistry(odd)) == odd);
  std::string no_newline = "a\tsimple\tA\t-\t-";
  CHECK(SerializeRegistry(ParseRegistry(no_newline)) == no_newline);
}

TEST_CASE("registry file errors carry line numbers") {
  try {
    ParseRegistry("a\tsimple\tA\t-\t-\nb\tsimple\n");
    FAIL("expected a parse error");
  } catch (const ParseError &e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(ParseRegistry("a\tweird\tA\t-\t-\n"), ParseError);
  CHECK_THROWS_AS(ParseRegistry("a\tsimple\tA\t-\t-\na\tsimple\tA\t-\t-\n"), RegistryError);
  CHECK_THROWS_AS(ParseRegistry("g\tcomplex\tG\t-\tx\tfr=y\nx\tsimple\tX\t-\t-\n"),
                  RegistryError);
}

TEST_CASE("name collisions are recorded") {
  Registry reg;
  DataCategory a = Simple("p1"), b = Simple("p2");
  a.name = b.name = "noun";
  reg.Register(a);
  reg.Register(b);
  CHECK(reg.FindByName("noun")->pid == "p1");
  REQUIRE(reg.name_collisions().size() == 1);
  CHECK(reg.name_collisions()[0] == "noun");
}

TEST_CASE("canonical line format") {
  CHECK(FormatCategoryLine(Gender()) ==
        "grammaticalGender\tcomplex\tgrammaticalGender\t-\tmasculine,feminine,neuter\t"
        "fr=masculine,feminine");
  Registry reg;
  reg.Register(Simple("x"));
  RegistryFile file{reg, {}, true};
  CHECK(SerializeRegistry(file) == "x\tsimple\tx\t-\t-\n");
}

}  // namespace spoken
