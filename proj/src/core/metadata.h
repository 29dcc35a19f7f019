// core/metadata.h

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

#ifndef SPOKEN_CORE_METADATA_H_
#define SPOKEN_CORE_METADATA_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "base/xml.h"

namespace spoken {

struct Recording {
  std::string id;
  std::string type;  // "audio" or "video"
  std::string equipment;
  std::string date;
  bool has_broadcast = false;
  std::vector<Recording> broadcast;  // recordings nested in <broadcast>
  xml::Attributes extra_attributes;
  std::vector<xml::Node> extra_children;

  bool operator==(const Recording &) const = default;
};

struct AppInfo {
  std::string id;
  std::string ident;
  std::string version;
  std::string label;
  std::vector<std::string> targets;  // as written, e.g. "#dialog2"
  xml::Attributes extra_attributes;
  std::vector<xml::Node> extra_children;

  bool operator==(const AppInfo &) const = default;
};

struct Birth {
  std::string when;
  std::string date;
  std::string place;

  bool operator==(const Birth &) const = default;
};

struct LanguageKnown {
  std::string tag;
  std::string level;
  std::string label;

  bool operator==(const LanguageKnown &) const = default;
};

struct Person {
  std::string id;
  std::string name;  // persName text outside <abbr>
  std::string abbr;
  std::string sex;
  std::string age;
  std::optional<Birth> birth;
  bool has_lang_knowledge = false;
  std::string lang_tags;  // langKnowledge/@tags, verbatim
  std::vector<LanguageKnown> languages;
  xml::Attributes extra_attributes;
  std::vector<xml::Node> extra_children;

  /// Name for display: the full name, else the abbreviation, else the id.
  const std::string &DisplayName() const;

  bool operator==(const Person &) const = default;
};

struct Revision {
  std::string when;
  std::string who;
  std::string text;

  bool operator==(const Revision &) const = default;
};

/// Header content.  Parts without a typed field are kept as markup in
/// `extras`, keyed by the name of the element that contained them
/// ("titleStmt", "sourceDesc", "profileDesc", ...).
struct Metadata {
  std::string title;
  std::string publication;
  std::string source;
  std::vector<Recording> recordings;
  std::vector<AppInfo> applications;
  std::vector<Person> participants;
  std::optional<std::string> setting;
  std::vector<std::string> language_usage;
  std::vector<Revision> revisions;
  std::map<std::string, std::vector<xml::Node>> extras;

  const Person *FindParticipant(const std::string &id) const;

  bool operator==(const Metadata &) const = default;
};

}  // namespace spoken

#endif  // SPOKEN_CORE_METADATA_H_
