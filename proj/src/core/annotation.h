// core/annotation.h

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

#ifndef SPOKEN_CORE_ANNOTATION_H_
#define SPOKEN_CORE_ANNOTATION_H_

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "core/timeline.h"
#include "featstruct/feature-structure.h"

namespace spoken {

struct SourceRef {
  enum class Kind { kPrimary, kSecondary };
  std::string id;
  Kind kind = Kind::kPrimary;
  std::string uri;
  std::vector<std::string> parents;  // required for secondary sources

  bool operator==(const SourceRef &) const = default;
};

struct ScaleInterval {
  double start = 0;
  double end = 0;
  TimeUnit unit = TimeUnit::kMs;
  bool operator==(const ScaleInterval &) const = default;
};

struct EventInterval {
  std::string start;
  std::string end;
  std::string timeline;
  bool operator==(const EventInterval &) const = default;
};

struct ComponentRefs {
  std::vector<std::string> targets;
  bool operator==(const ComponentRefs &) const = default;
};

using Range = std::variant<ScaleInterval, EventInterval, ComponentRefs>;

enum class RangingMechanism { kScale, kEvent, kComponent };

const char *MechanismName(RangingMechanism m);
RangingMechanism MechanismOf(const Range &range);

/// Data-category reference or plain name / literal.
struct CategoryRef {
  enum class Kind { kName, kPid };
  Kind kind = Kind::kName;
  std::string text;

  static CategoryRef Name(std::string s) { return {Kind::kName, std::move(s)}; }
  static CategoryRef Pid(std::string s) { return {Kind::kPid, std::move(s)}; }
  bool operator==(const CategoryRef &) const = default;
};

struct Qualifier {
  CategoryRef feature;
  CategoryRef value;
  bool operator==(const Qualifier &) const = default;
};

struct Annotation {
  std::string id;
  std::string source;
  std::optional<Range> range;  // empty while the range is implicit
  std::vector<Qualifier> qualifiers;
  std::string layer;
  // Index of the transcript body item the annotation was read from.
  std::optional<size_t> body_item;

  bool operator==(const Annotation &) const = default;
};

struct Layer {
  std::string id;
  std::string name;
  std::string level;
  std::string speaker;   // participant the layer belongs to, if any
  std::string category;  // e.g. verbal, gesture, incident

  bool operator==(const Layer &) const = default;
};

struct Level {
  std::string id;
  std::vector<std::string> sources;
  RangingMechanism mechanism = RangingMechanism::kEvent;
  std::vector<std::string> category_selection;

  bool operator==(const Level &) const = default;
};

struct Token {
  std::string id;
  std::string surface;
  Range range = ComponentRefs{};

  bool operator==(const Token &) const = default;
};

struct WordForm {
  std::string id;
  std::vector<std::string> tokens;
  std::string lexical_ref;
  std::string orth;
  FeatureStructure features;
  std::string group;  // type of the span group it came from

  bool operator==(const WordForm &) const = default;
};

}  // namespace spoken

#endif  // SPOKEN_CORE_ANNOTATION_H_
