// featstruct/tagset-test.cc

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

#include "featstruct/tagset.h"

#include <algorithm>

#include "doctest.h"

namespace spoken {

namespace {

std::vector<Feature> SampleFeatures() {
  return {
      {"fem", "grammaticalGender", FSValue::Symbol("feminine")},
      {"mas", "grammaticalGender", FSValue::Symbol("masculine")},
      {"neu", "grammaticalGender", FSValue::Symbol("neuter")},
      {"#NC", "partOfSpeech", FSValue::Symbol("commonNoun")},
      {"sing", "grammaticalNumber", FSValue::Symbol("singular")},
  };
}

TagDecl Tag(std::string id, std::vector<std::string> feats) {
  TagDecl t;
  t.id = std::move(id);
  t.feats = std::move(feats);
  return t;
}

FeatureStructure Ncms() {
  FeatureStructure fs;
  fs.Add("partOfSpeech", FSValue::Symbol("commonNoun"));
  fs.Add("grammaticalGender", FSValue::Symbol("masculine"));
  fs.Add("grammaticalNumber", FSValue::Symbol("singular"));
  return fs;
}

}  // namespace

TEST_CASE("building the sample tagset") {
  TagsetLibrary lib =
      BuildLibrary(SampleFeatures(), {Tag("Ncms__", {"#NC", "#mas", "#sing"})});
  REQUIRE(lib.tags().size() == 1);
  const FeatureStructure &fs = lib.tags()[0].expanded;
  CHECK(fs == Ncms());
  // Expansion keeps the order of the feats list.
  CHECK(fs.features()[0].first == "partOfSpeech");
  CHECK(fs.features()[2].first == "grammaticalNumber");
  CHECK(lib.FindFeature("NC") != nullptr);  // '#NC' normalized
}

TEST_CASE("resolve_tag normalizes '#' and is case-sensitive") {
  TagsetLibrary lib =
      BuildLibrary(SampleFeatures(), {Tag("Ncms__", {"#NC", "#mas", "#sing"})});
  CHECK(ResolveTag(lib, "#Ncms__") == Ncms());
  CHECK(ResolveTag(lib, "Ncms__") == Ncms());
  try {
    ResolveTag(lib, "#NCMS__");
    FAIL("expected unknown tag");
  } catch (const ReferenceError &e) {
    CHECK(e.id() == "NCMS__");
  }
}

TEST_CASE("library errors name the offending ids") {
  try {
    BuildLibrary(SampleFeatures(), {Tag("X", {"#NC", "#xyz"})});
    FAIL("expected dangling reference");
  } catch (const LibraryError &e) {
    REQUIRE(e.problems().size() == 1);
    CHECK(e.problems()[0].kind == LibraryProblem::Kind::kDanglingReference);
    CHECK(e.problems()[0].id == "xyz");
  }
  try {
    BuildLibrary(SampleFeatures(), {Tag("Ncmf", {"#NC", "#mas", "#fem"})});
    FAIL("expected duplicate feature name");
  } catch (const LibraryError &e) {
    CHECK(e.problems()[0].kind == LibraryProblem::Kind::kDuplicateFeatureName);
    CHECK(e.problems()[0].id == "Ncmf");
  }
  try {
    BuildLibrary(SampleFeatures(), {Tag("mas", {"#NC"})});
    FAIL("expected duplicate id");
  } catch (const LibraryError &e) {
    CHECK(e.problems()[0].kind == LibraryProblem::Kind::kDuplicateId);
  }
}

TEST_CASE("tags sharing features expand independently") {
  TagsetLibrary lib = BuildLibrary(
      SampleFeatures(), {Tag("Ncms__", {"#NC", "#mas", "#sing"}),
                        Tag("Ncfs__", {"#NC", "#fem", "#sing"})});
  CHECK(ResolveTag(lib, "Ncms__").Find("grammaticalGender")->text() == "masculine");
  CHECK(ResolveTag(lib, "Ncfs__").Find("grammaticalGender")->text() == "feminine");
  CHECK(ResolveTag(lib, "Ncfs__").Find("grammaticalNumber")->text() == "singular");
}

TEST_CASE("expansion equals a unify-fold over the feats in any order") {
  auto features = SampleFeatures();
  std::vector<std::string> feats = {"NC", "mas", "sing"};
  TagsetLibrary lib = BuildLibrary(features, {Tag("T", {"#NC", "#mas", "#sing"})});
  std::sort(feats.begin(), feats.end());
  do {
    FeatureStructure acc;
    for (const auto &id : feats) {
      const Feature *f = lib.FindFeature(id);
      FeatureStructure one;
      one.Add(f->name, f->value);
      acc = Unify(acc, one).value();
    }
    CHECK(acc == ResolveTag(lib, "T"));
  } while (std::next_permutation(feats.begin(), feats.end()));
}

}  // namespace spoken
