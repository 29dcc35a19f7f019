// featstruct/feature-structure-test.cc

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

#include "featstruct/feature-structure.h"

#include "doctest.h"
#include "support/fs-oracle.h"

namespace spoken {

namespace {

FeatureStructure Fs(std::initializer_list<std::pair<const char *, const char *>> kv,
                    std::string type = "") {
  FeatureStructure fs(std::move(type));
  for (const auto &[k, v] : kv) fs.Add(k, FSValue::Symbol(v));
  return fs;
}

FeatureStructure MorphosyntacticAnnotation() {
  return Fs({{"partOfSpeech", "noun"},
             {"grammaticalGender", "masculine"},
             {"grammaticalNumber", "plural"}},
            "morphosyntacticAnnotation");
}

}  // namespace

TEST_CASE("unify examples") {
  auto noun = Fs({{"partOfSpeech", "noun"}});
  auto masc = Fs({{"grammaticalGender", "masculine"}});
  UnifyResult r = Unify(noun, masc);
  REQUIRE(r.ok());
  CHECK(r.value() == Fs({{"partOfSpeech", "noun"}, {"grammaticalGender", "masculine"}}));

  UnifyResult clash = Unify(noun, Fs({{"partOfSpeech", "verb"}}));
  REQUIRE_FALSE(clash.ok());
  CHECK(clash.failure().path == "partOfSpeech");
  CHECK(clash.failure().left == FSValue::Symbol("noun"));
  CHECK(clash.failure().right == FSValue::Symbol("verb"));
  CHECK_THROWS(clash.value());

  auto ms = MorphosyntacticAnnotation();
  CHECK(Unify(ms, FeatureStructure()).value() == ms);
}

TEST_CASE("unify reports nested paths, kind mismatches and type clashes") {
  FeatureStructure a, b;
  a.Add("agr", FSValue::Struct(Fs({{"num", "sg"}})));
  b.Add("agr", FSValue::Struct(Fs({{"num", "pl"}})));
  CHECK(Unify(a, b).failure().path == "agr/num");

  FeatureStructure c;
  c.Add("agr", FSValue::Symbol("sg"));
  CHECK(Unify(a, c).failure().path == "agr");

  FeatureStructure n1, n2;
  n1.Add("n", FSValue::Numeric(1));
  n2.Add("n", FSValue::Numeric(1.0));
  CHECK(Unify(n1, n2).ok());

  CHECK(Unify(FeatureStructure("t1"), FeatureStructure("t2")).failure().path == "@type");
  CHECK(Unify(FeatureStructure("t1"), FeatureStructure()).value().type() == "t1");
}

TEST_CASE("subsumes examples") {
  auto ms = MorphosyntacticAnnotation();
  CHECK(Subsumes(Fs({{"partOfSpeech", "noun"}}), ms));
  CHECK(Subsumes(ms, ms));
  CHECK_FALSE(Subsumes(Fs({{"grammaticalNumber", "plural"}}),
                       Fs({{"grammaticalNumber", "singular"}})));
  CHECK_FALSE(Subsumes(ms, Fs({{"partOfSpeech", "noun"}})));
}

TEST_CASE("flatten examples") {
  auto flat = Flatten(MorphosyntacticAnnotation());
  REQUIRE(flat.size() == 3);
  CHECK(flat[0].first == "partOfSpeech");
  CHECK(flat[0].second == FSValue::Symbol("noun"));
  CHECK(flat[1].first == "grammaticalGender");
  CHECK(flat[2].second == FSValue::Symbol("plural"));

  CHECK(Flatten(FeatureStructure()).empty());

  FeatureStructure nested;
  nested.Add("agr", FSValue::Struct(Fs({{"num", "sg"}})));
  auto nf = Flatten(nested);
  REQUIRE(nf.size() == 1);
  CHECK(nf[0].first == "agr/num");
  CHECK(nf[0].second == FSValue::Symbol("sg"));
}

TEST_CASE("structure invariants") {
  FeatureStructure fs;
  fs.Add("a", FSValue::Binary(true));
  CHECK_THROWS(fs.Add("a", FSValue::Binary(false)));
  CHECK_THROWS(FSValue::Symbol(""));
  // Equality is order-insensitive and ignores the identifier.
  FeatureStructure x = Fs({{"p", "1"}, {"q", "2"}}), y = Fs({{"q", "2"}, {"p", "1"}});
  y.set_id("other");
  CHECK(x == y);
  CHECK_FALSE(FSValue::Symbol("a") == FSValue::String("a"));
}

TEST_CASE("unification agrees with the path-map oracle") {
  testing::FsGenerator gen(7);
  int successes = 0;
  for (int i = 0; i < 2000; ++i) {
    FeatureStructure a = gen.Random();
    FeatureStructure b = gen.Pick(2) ? gen.Related(a) : gen.Random();
    UnifyResult r = Unify(a, b);
    auto oracle = testing::MergedPathMap(a, b);
    REQUIRE(r.ok() == oracle.has_value());
    if (r.ok()) {
      ++successes;
      CHECK(testing::PathMap(r.value()) == *oracle);
      CHECK(Subsumes(a, r.value()));
      CHECK(Subsumes(b, r.value()));
    }
  }
  CHECK(successes > 200);
}

TEST_CASE("subsumption is a partial order on random structures") {
  testing::FsGenerator gen(11);
  for (int i = 0; i < 500; ++i) {
    FeatureStructure a = gen.Random(), b = gen.Related(a), c = gen.Related(b);
    CHECK(Subsumes(a, a));
    if (Subsumes(a, b) && Subsumes(b, a)) CHECK(a == b);
    if (Subsumes(a, b) && Subsumes(b, c)) CHECK(Subsumes(a, c));
  }
}

}  // namespace spoken
