// featstruct/tagset.h

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

#ifndef SPOKEN_FEATSTRUCT_TAGSET_H_
#define SPOKEN_FEATSTRUCT_TAGSET_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "base/error.h"
#include "featstruct/feature-structure.h"

namespace spoken {

/// One identified feature-value pair, as declared in a feature library.
struct Feature {
  std::string id;
  std::string name;
  FSValue value;

  friend bool operator==(const Feature &, const Feature &) = default;
};

/// A tag declaration from a feature-value library: an identifier and the
/// features it bundles, by reference and/or inline.
struct TagDecl {
  std::string id;
  std::string type;
  std::vector<std::string> feats;    // raw references, '#' allowed
  FeatureStructure inline_features;  // <f> children of the declaration

  friend bool operator==(const TagDecl &, const TagDecl &) = default;
};

struct TagDefinition {
  std::string id;
  std::vector<std::string> feats;  // normalized feature ids
  FeatureStructure expanded;
};

struct LibraryProblem {
  enum class Kind { kDuplicateId, kDanglingReference, kDuplicateFeatureName };
  Kind kind;
  std::string id;      // the offending identifier
  std::string detail;
};

class LibraryError : public Error {
 public:
  explicit LibraryError(std::vector<LibraryProblem> problems);
  const std::vector<LibraryProblem> &problems() const { return problems_; }

 private:
  std::vector<LibraryProblem> problems_;
};

/// Resolved feature and tag libraries.  Built once, then read-only.
class TagsetLibrary {
 public:
  const Feature *FindFeature(std::string_view id) const;
  const TagDefinition *FindTag(std::string_view id) const;
  const std::vector<Feature> &features() const { return features_; }
  const std::vector<TagDefinition> &tags() const { return tags_; }

 private:
  friend TagsetLibrary BuildLibrary(const std::vector<Feature> &,
                                    const std::vector<TagDecl> &);
  std::vector<Feature> features_;
  std::vector<TagDefinition> tags_;
  std::map<std::string, size_t, std::less<>> feature_index_;
  std::map<std::string, size_t, std::less<>> tag_index_;
};

/// Resolves every tag's feature references and expands it eagerly.
/// Identifiers are normalized by stripping a leading '#'.  All problems are
/// collected and thrown together as a LibraryError.
TagsetLibrary BuildLibrary(const std::vector<Feature> &features,
                           const std::vector<TagDecl> &tags);

/// Expanded structure of tag `ref` ("#Ncms__" or "Ncms__"; exact,
/// case-sensitive).  Throws ReferenceError for an unknown tag.
const FeatureStructure &ResolveTag(const TagsetLibrary &lib, std::string_view ref);

}  // namespace spoken

#endif  // SPOKEN_FEATSTRUCT_TAGSET_H_
