// core/transcript.cc

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

#include "core/transcript.h"

namespace spoken {

bool Seg::operator==(const Seg &) const = default;
bool Word::operator==(const Word &) const = default;

const char *EventElementName(Event::Kind kind) {
  switch (kind) {
    case Event::Kind::kVocal: return "vocal";
    case Event::Kind::kKinesic: return "kinesic";
    case Event::Kind::kIncident: return "incident";
  }
  return "?";
}

std::optional<Event::Kind> ParseEventElement(std::string_view name) {
  if (name == "vocal") return Event::Kind::kVocal;
  if (name == "kinesic") return Event::Kind::kKinesic;
  if (name == "incident") return Event::Kind::kIncident;
  return std::nullopt;
}

namespace {

void AppendPlainText(const std::vector<Inline> &content, std::string *out) {
  for (const Inline &item : content) {
    if (auto *t = item.As<TextRun>()) {
      *out += t->text;
    } else if (auto *s = item.As<Seg>()) {
      AppendPlainText(s->children, out);
    } else if (auto *w = item.As<Word>()) {
      AppendPlainText(w->children, out);
    } else if (auto *o = item.As<Opaque>()) {
      *out += o->node.TextContent();
    }
  }
}

}  // namespace

std::string PlainText(const std::vector<Inline> &content) {
  std::string out;
  AppendPlainText(content, &out);
  return out;
}

void ForEachInline(const std::vector<Inline> &content,
                   const std::function<void(const Inline &)> &fn) {
  for (const Inline &item : content) {
    fn(item);
    if (auto *s = item.As<Seg>()) ForEachInline(s->children, fn);
    else if (auto *w = item.As<Word>()) ForEachInline(w->children, fn);
  }
}

void ForEachInline(std::vector<Inline> &content,
                   const std::function<void(Inline &)> &fn) {
  for (Inline &item : content) {
    fn(item);
    if (auto *s = item.As<Seg>()) ForEachInline(s->children, fn);
    else if (auto *w = item.As<Word>()) ForEachInline(w->children, fn);
  }
}

const std::vector<Inline> *ContentOf(const BodyItem &item) {
  if (auto *u = std::get_if<Utterance>(&item)) return &u->content;
  if (auto *p = std::get_if<Paragraph>(&item)) return &p->content;
  return nullptr;
}

std::vector<Inline> *ContentOf(BodyItem &item) {
  if (auto *u = std::get_if<Utterance>(&item)) return &u->content;
  if (auto *p = std::get_if<Paragraph>(&item)) return &p->content;
  return nullptr;
}

std::string ElementNameOf(const BodyItem &item) {
  struct Visitor {
    std::string operator()(const Utterance &) const { return "u"; }
    std::string operator()(const Event &e) const { return EventElementName(e.kind); }
    std::string operator()(const Anchor &) const { return "anchor"; }
    std::string operator()(const Paragraph &) const { return "p"; }
    std::string operator()(const SpanGroup &) const { return "spanGrp"; }
    std::string operator()(const Opaque &o) const { return o.node.name; }
  };
  return std::visit(Visitor{}, item);
}

}  // namespace spoken
