// featstruct/tagset.cc

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

#include "base/text-utils.h"

namespace spoken {

namespace {

std::string Describe(const std::vector<LibraryProblem> &problems) {
  std::string out = "invalid tagset library:";
  for (const auto &p : problems) out += " [" + p.id + ": " + p.detail + "]";
  return out;
}

}  // namespace

LibraryError::LibraryError(std::vector<LibraryProblem> problems)
    : Error(Describe(problems)), problems_(std::move(problems)) {}

const Feature *TagsetLibrary::FindFeature(std::string_view id) const {
  auto it = feature_index_.find(id);
  return it == feature_index_.end() ? nullptr : &features_[it->second];
}

const TagDefinition *TagsetLibrary::FindTag(std::string_view id) const {
  auto it = tag_index_.find(id);
  return it == tag_index_.end() ? nullptr : &tags_[it->second];
}

TagsetLibrary BuildLibrary(const std::vector<Feature> &features,
                           const std::vector<TagDecl> &tags) {
  using Kind = LibraryProblem::Kind;
  TagsetLibrary lib;
  std::vector<LibraryProblem> problems;

  for (const Feature &f : features) {
    Feature norm = f;
    norm.id = StripHash(f.id);
    if (norm.id.empty()) continue;  // anonymous features cannot be referenced
    if (lib.feature_index_.count(norm.id)) {
      problems.push_back({Kind::kDuplicateId, norm.id, "feature id declared twice"});
      continue;
    }
    lib.feature_index_.emplace(norm.id, lib.features_.size());
    lib.features_.push_back(std::move(norm));
  }

  for (const TagDecl &decl : tags) {
    TagDefinition def;
    def.id = StripHash(decl.id);
    if (def.id.empty()) continue;
    if (lib.feature_index_.count(def.id) || lib.tag_index_.count(def.id)) {
      problems.push_back({Kind::kDuplicateId, def.id, "tag id already declared"});
      continue;
    }
    def.expanded = FeatureStructure(decl.type);
    def.expanded.set_id(def.id);
    bool ok = true;
    auto add = [&](const std::string &name, const FSValue &value,
                   const std::string &via) {
      if (def.expanded.Find(name)) {
        problems.push_back({Kind::kDuplicateFeatureName, def.id,
                            "feature '" + name + "' given twice (" + via + ")"});
        ok = false;
        return;
      }
      def.expanded.Add(name, value);
    };
    for (const std::string &raw : decl.feats) {
      std::string ref = StripHash(raw);
      const Feature *f = lib.FindFeature(ref);
      if (!f) {
        problems.push_back({Kind::kDanglingReference, ref,
                            "referenced by tag " + def.id + " but not declared"});
        ok = false;
        continue;
      }
      def.feats.push_back(ref);
      add(f->name, f->value, "#" + ref);
    }
    for (const auto &[name, value] : decl.inline_features.features())
      add(name, value, "inline");
    if (!ok) continue;
    lib.tag_index_.emplace(def.id, lib.tags_.size());
    lib.tags_.push_back(std::move(def));
  }

  if (!problems.empty()) throw LibraryError(std::move(problems));
  return lib;
}

const FeatureStructure &ResolveTag(const TagsetLibrary &lib, std::string_view ref) {
  std::string id = StripHash(ref);
  const TagDefinition *tag = lib.FindTag(id);
  if (!tag) throw ReferenceError("unknown tag", id);
  return tag->expanded;
}

}  // namespace spoken
