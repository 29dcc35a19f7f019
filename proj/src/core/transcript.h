// core/transcript.h

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

#ifndef SPOKEN_CORE_TRANSCRIPT_H_
#define SPOKEN_CORE_TRANSCRIPT_H_

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "base/xml.h"

namespace spoken {

struct Inline;

struct TextRun {
  std::string text;
  bool operator==(const TextRun &) const = default;
};

/// <anchor>: either declares a point (`id`) or points at one (`synch`).
struct Anchor {
  std::string id;
  std::string synch;  // normalized, no '#'
  xml::Attributes extra_attributes;
  bool operator==(const Anchor &) const = default;
};

/// <vocal>, <kinesic> or <incident>, inline or standalone.
struct Event {
  enum class Kind { kVocal, kKinesic, kIncident };
  Kind kind = Kind::kVocal;
  std::string id;
  std::string who;    // normalized, no '#'
  std::string type;
  std::string start;  // normalized point ids
  std::string end;
  std::optional<std::string> desc;
  std::string label;  // @n, names the layer explicitly
  xml::Attributes extra_attributes;
  std::vector<xml::Node> extra_children;
  bool operator==(const Event &) const = default;
};

const char *EventElementName(Event::Kind kind);
std::optional<Event::Kind> ParseEventElement(std::string_view name);

struct Seg {
  std::string id;
  std::string type;
  std::string subtype;
  std::vector<Inline> children;
  xml::Attributes extra_attributes;
  bool operator==(const Seg &) const;
};

/// <w> or <pc>: a token.
struct Word {
  std::string element = "w";
  std::string id;
  std::string ana;  // as written
  std::vector<Inline> children;
  xml::Attributes extra_attributes;
  bool operator==(const Word &) const;
};

/// Markup the model does not know; kept as is.
struct Opaque {
  xml::Node node;
  bool operator==(const Opaque &) const = default;
};

struct Inline {
  std::variant<TextRun, Anchor, Event, Seg, Word, Opaque> value;

  template <typename T>
  const T *As() const { return std::get_if<T>(&value); }
  template <typename T>
  T *As() { return std::get_if<T>(&value); }

  bool operator==(const Inline &) const = default;
};

struct Utterance {
  std::string id;
  std::string who;  // normalized, no '#'
  std::string label;  // @n
  std::vector<Inline> content;
  xml::Attributes extra_attributes;
  bool operator==(const Utterance &) const = default;
};

/// <p> holding tokens or text.
struct Paragraph {
  std::string id;
  std::vector<Inline> content;
  xml::Attributes extra_attributes;
  bool operator==(const Paragraph &) const = default;
};

struct Span {
  std::string id;
  std::string from;  // as written
  std::string to;
  std::string ana;
  std::string text;  // plain-text comment content
  xml::Attributes extra_attributes;
  bool operator==(const Span &) const = default;
};

struct SpanGroup {
  std::string id;
  std::string type;
  std::string corresp;  // as written
  std::string label;    // @n
  std::vector<Span> spans;
  xml::Attributes extra_attributes;
  bool operator==(const SpanGroup &) const = default;
};

using BodyItem =
    std::variant<Utterance, Event, Anchor, Paragraph, SpanGroup, Opaque>;

struct Transcript {
  std::vector<BodyItem> body;
  xml::Attributes body_attributes;

  bool operator==(const Transcript &) const = default;
};

/// Concatenated text of inline content.  Event descriptions are not text.
std::string PlainText(const std::vector<Inline> &content);

/// Depth-first visit of inline content, including seg and token children.
void ForEachInline(const std::vector<Inline> &content,
                   const std::function<void(const Inline &)> &fn);
void ForEachInline(std::vector<Inline> &content,
                   const std::function<void(Inline &)> &fn);

/// Inline content of a body item; nullptr for items without any.
const std::vector<Inline> *ContentOf(const BodyItem &item);
std::vector<Inline> *ContentOf(BodyItem &item);

/// Element name used for a body item ("u", "incident", "spanGrp", ...).
std::string ElementNameOf(const BodyItem &item);

}  // namespace spoken

#endif  // SPOKEN_CORE_TRANSCRIPT_H_
