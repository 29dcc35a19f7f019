// core/document.cc

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

#include "core/document.h"

namespace spoken {

const char kPrimarySource[] = "~primary";
const char kTranscriptLevel[] = "~transcription";

namespace {

template <typename T>
const T *FindById(const std::vector<T> &items, std::string_view id) {
  for (const auto &item : items)
    if (item.id == id) return &item;
  return nullptr;
}

}  // namespace

const SourceRef *Document::FindSource(std::string_view id) const {
  return FindById(sources, id);
}

const Timeline *Document::FindTimeline(std::string_view id) const {
  for (const auto &t : timelines)
    if (t.id() == id) return &t;
  return nullptr;
}

Timeline *Document::FindTimeline(std::string_view id) {
  for (auto &t : timelines)
    if (t.id() == id) return &t;
  return nullptr;
}

const Layer *Document::FindLayer(std::string_view id) const {
  return FindById(layers, id);
}

const Level *Document::FindLevel(std::string_view id) const {
  return FindById(levels, id);
}

const Annotation *Document::FindAnnotation(std::string_view id) const {
  return FindById(annotations, id);
}

const Token *Document::FindToken(std::string_view id) const {
  return FindById(tokens, id);
}

const LexicalForm *Document::FindLexicalForm(std::string_view id) const {
  for (const auto &entry : lexical_entries)
    for (const auto &form : entry.forms)
      if (!form.id.empty() && form.id == id) return &form;
  return nullptr;
}

const NamedStructure *Document::FindStructure(std::string_view id) const {
  return FindById(structures, id);
}

std::vector<Feature> Document::AllFeatures() const {
  std::vector<Feature> out;
  for (const auto &lib : feature_libraries)
    for (const auto &f : lib.features) out.push_back(f.feature);
  return out;
}

std::vector<TagDecl> Document::AllTags() const {
  std::vector<TagDecl> out;
  for (const auto &lib : tag_libraries)
    out.insert(out.end(), lib.tags.begin(), lib.tags.end());
  return out;
}

bool operator==(const Document &a, const Document &b) {
  return a.metadata == b.metadata && a.sources == b.sources &&
         a.timelines == b.timelines && a.layers == b.layers &&
         a.levels == b.levels && a.annotations == b.annotations &&
         a.tokens == b.tokens && a.word_forms == b.word_forms &&
         a.feature_libraries == b.feature_libraries &&
         a.tag_libraries == b.tag_libraries && a.structures == b.structures &&
         a.lexical_entries == b.lexical_entries &&
         a.back_extras == b.back_extras && a.transcript == b.transcript;
}

}  // namespace spoken
