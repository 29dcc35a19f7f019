// core/document.h

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

#ifndef SPOKEN_CORE_DOCUMENT_H_
#define SPOKEN_CORE_DOCUMENT_H_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "base/error.h"
#include "base/xml.h"
#include "core/annotation.h"
#include "core/metadata.h"
#include "core/timeline.h"
#include "core/transcript.h"
#include "featstruct/tagset.h"

namespace spoken {

/// A feature declaration in a library.  Libraries put the
/// identifier either on <f> or on its value element; `id_on_value` remembers
/// which.
struct LibraryFeature {
  Feature feature;
  bool id_on_value = false;

  bool operator==(const LibraryFeature &) const = default;
};

struct FeatureLibrary {
  std::string id;
  std::string label;  // @n
  std::vector<LibraryFeature> features;

  bool operator==(const FeatureLibrary &) const = default;
};

struct TagLibrary {
  std::string id;
  std::string label;
  std::vector<TagDecl> tags;

  bool operator==(const TagLibrary &) const = default;
};

/// A feature structure declared outside any library, addressable by id.
struct NamedStructure {
  std::string id;
  FeatureStructure fs;

  bool operator==(const NamedStructure &) const = default;
};

struct LexicalForm {
  std::string id;
  std::string type;  // e.g. "inflected"
  std::string orth;
  std::vector<std::pair<std::string, std::string>> grammar;  // gramGrp
  std::vector<xml::Node> extra_children;

  bool operator==(const LexicalForm &) const = default;
};

struct LexicalEntry {
  std::string id;
  std::vector<LexicalForm> forms;
  std::vector<xml::Node> extra_children;

  bool operator==(const LexicalEntry &) const = default;
};

/// Ids of the primary transcription source and the level its layers share.
extern const char kPrimarySource[];    // "~primary"
extern const char kTranscriptLevel[];  // "~transcription"

/// An annotated spoken-language document: the pivot (sources, timelines,
/// layers, levels, annotations), the transcript it was read from, and the
/// tagset and lexicon declarations that travel with it.
struct Document {
  Metadata metadata;

  std::vector<SourceRef> sources;
  std::vector<Timeline> timelines;
  std::vector<Layer> layers;
  std::vector<Level> levels;
  std::vector<Annotation> annotations;
  std::vector<Token> tokens;
  std::vector<WordForm> word_forms;

  std::vector<FeatureLibrary> feature_libraries;
  std::vector<TagLibrary> tag_libraries;
  std::vector<NamedStructure> structures;
  std::vector<LexicalEntry> lexical_entries;
  std::vector<xml::Node> back_extras;

  Transcript transcript;

  // Observations made while loading (duplicate points and the like).  Not
  // part of equality.
  Findings load_findings;

  const SourceRef *FindSource(std::string_view id) const;
  const Timeline *FindTimeline(std::string_view id) const;
  Timeline *FindTimeline(std::string_view id);
  const Layer *FindLayer(std::string_view id) const;
  const Level *FindLevel(std::string_view id) const;
  const Annotation *FindAnnotation(std::string_view id) const;
  const Token *FindToken(std::string_view id) const;
  const LexicalForm *FindLexicalForm(std::string_view id) const;
  const NamedStructure *FindStructure(std::string_view id) const;

  /// All declared features and tags, flattened for BuildLibrary.
  std::vector<Feature> AllFeatures() const;
  std::vector<TagDecl> AllTags() const;

  friend bool operator==(const Document &a, const Document &b);
};

}  // namespace spoken

#endif  // SPOKEN_CORE_DOCUMENT_H_
