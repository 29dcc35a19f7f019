// tier/tier-file.cc

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

#include "tier/tier-file.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

#include "base/text-utils.h"

namespace spoken {

const TierSpeaker *TierDocument::FindSpeaker(std::string_view id) const {
  for (const auto &s : speakers)
    if (s.id == id) return &s;
  return nullptr;
}

const Tier *TierDocument::FindTier(std::string_view id) const {
  for (const auto &t : tiers)
    if (t.id == id) return &t;
  return nullptr;
}

int TierDocument::PointIndex(std::string_view id) const {
  for (size_t i = 0; i < points.size(); ++i)
    if (points[i].id == id) return static_cast<int>(i);
  return -1;
}

namespace {

using LineOf = std::function<int(TierLine::Kind, size_t, size_t)>;

bool ValidId(std::string_view id) {
  return !id.empty() && id != "-" &&
         std::none_of(id.begin(), id.end(), [](char c) { return IsXmlSpace(c); });
}

void Check(const TierDocument &doc, const LineOf &line_of) {
  using Kind = TierLine::Kind;
  std::set<std::string> seen;
  for (size_t i = 0; i < doc.speakers.size(); ++i) {
    const auto &s = doc.speakers[i];
    if (!ValidId(s.id))
      throw ParseError("invalid speaker id '" + s.id + "'", line_of(Kind::kSpeaker, i, 0));
    if (!seen.insert(s.id).second)
      throw ParseError("speaker '" + s.id + "' declared twice", line_of(Kind::kSpeaker, i, 0));
  }
  seen.clear();
  for (size_t i = 0; i < doc.points.size(); ++i) {
    const auto &p = doc.points[i];
    if (!ValidId(p.id))
      throw ParseError("invalid point id '" + p.id + "'", line_of(Kind::kPoint, i, 0));
    if (!seen.insert(p.id).second)
      throw ParseError("point '" + p.id + "' declared twice", line_of(Kind::kPoint, i, 0));
    if (p.offset && (!std::isfinite(*p.offset) || *p.offset < 0))
      throw ParseError("offset of '" + p.id + "' must be a non-negative number",
                       line_of(Kind::kPoint, i, 0));
  }
  seen.clear();
  for (size_t i = 0; i < doc.tiers.size(); ++i) {
    const Tier &t = doc.tiers[i];
    int line = line_of(Kind::kTier, i, 0);
    if (!ValidId(t.id)) throw ParseError("invalid tier id '" + t.id + "'", line);
    if (!seen.insert(t.id).second) throw ParseError("tier '" + t.id + "' declared twice", line);
    if (!t.speaker.empty() && !doc.FindSpeaker(t.speaker))
      throw ParseError("tier '" + t.id + "' names unknown speaker '" + t.speaker + "'", line);
    if (!ValidId(t.category))
      throw ParseError("tier '" + t.id + "' needs a category without blanks", line);

    struct Span {
      int start, end;
      size_t event;
    };
    std::vector<Span> spans;
    for (size_t k = 0; k < t.events.size(); ++k) {
      const TierEvent &e = t.events[k];
      int event_line = line_of(Kind::kEvent, i, k);
      int s = doc.PointIndex(e.start), f = doc.PointIndex(e.end);
      if (s < 0) throw ParseError("unknown point '" + e.start + "'", event_line);
      if (f < 0) throw ParseError("unknown point '" + e.end + "'", event_line);
      if (s >= f)
        throw ParseError("event must start before it ends ('" + e.start + "', '" + e.end + "')",
                         event_line);
      if (e.text.find('\n') != std::string::npos)
        throw ParseError("event text contains a line break", event_line);
      spans.push_back({s, f, k});
    }
    std::sort(spans.begin(), spans.end(), [](const Span &a, const Span &b) {
      return std::tie(a.start, a.end, a.event) < std::tie(b.start, b.end, b.event);
    });
    for (size_t k = 1; k < spans.size(); ++k)
      if (spans[k].start < spans[k - 1].end) {
        size_t later = std::max(spans[k].event, spans[k - 1].event);
        size_t earlier = std::min(spans[k].event, spans[k - 1].event);
        throw ParseError("event overlaps the event on line " +
                             std::to_string(line_of(Kind::kEvent, i, earlier)) + " of tier '" +
                             t.id + "'",
                         line_of(Kind::kEvent, i, later));
      }
  }
}

std::string FormatSpeaker(const TierSpeaker &s) { return "@speaker\t" + s.id + "\t" + s.name; }

std::string FormatPoint(const TierPoint &p) {
  return "@point\t" + p.id + "\t" + (p.offset ? FormatNumber(*p.offset) : "-");
}

std::string FormatTier(const Tier &t) {
  return "@tier\t" + t.id + "\t" + (t.speaker.empty() ? "-" : t.speaker) + "\t" + t.category;
}

std::string FormatEvent(const Tier &t, const TierEvent &e) {
  return "event\t" + t.id + "\t" + e.start + "\t" + e.end + "\t" + e.text;
}

std::string Canonical(const TierDocument &doc, const TierLine &line) {
  using Kind = TierLine::Kind;
  switch (line.kind) {
    case Kind::kSpeaker: return FormatSpeaker(doc.speakers[line.index]);
    case Kind::kPoint: return FormatPoint(doc.points[line.index]);
    case Kind::kTier: return FormatTier(doc.tiers[line.index]);
    case Kind::kEvent:
      return FormatEvent(doc.tiers[line.index], doc.tiers[line.index].events[line.event]);
    case Kind::kOther: break;
  }
  return line.text;
}

}  // namespace

void CheckTierDocument(const TierDocument &doc) {
  Check(doc, [](TierLine::Kind, size_t, size_t) { return 0; });
}

TierFile ParseTier(std::string_view text) {
  using Kind = TierLine::Kind;
  TierFile file;
  TierDocument &doc = file.document;
  if (text.empty()) {
    file.final_newline = false;
    return file;
  }
  std::vector<std::string> raw = Split(text, '\n');
  file.final_newline = raw.back().empty();
  if (file.final_newline) raw.pop_back();

  for (size_t n = 0; n < raw.size(); ++n) {
    int line_no = static_cast<int>(n) + 1;
    TierLine line;
    line.text = raw[n];
    std::string body = line.text;
    if (!body.empty() && body.back() == '\r') body.pop_back();
    if (IsBlank(body) || body[0] == '#') {
      file.lines.push_back(std::move(line));
      continue;
    }
    std::vector<std::string> f = Split(body, '\t');
    const std::string &tag = f[0];
    auto expect = [&](size_t count, const char *shape) {
      if (f.size() != count)
        throw ParseError(std::string("expected ") + shape + " separated by tabs", line_no);
    };
    if (tag == "@speaker") {
      expect(3, "@speaker, id and name");
      line.kind = Kind::kSpeaker;
      line.index = doc.speakers.size();
      doc.speakers.push_back({f[1], f[2]});
    } else if (tag == "@point") {
      expect(3, "@point, id and offset");
      TierPoint p{f[1], std::nullopt};
      if (f[2] != "-") {
        p.offset = ParseNumber(f[2]);
        if (!p.offset) throw ParseError("offset '" + f[2] + "' is not a number", line_no);
      }
      line.kind = Kind::kPoint;
      line.index = doc.points.size();
      doc.points.push_back(std::move(p));
    } else if (tag == "@tier") {
      expect(4, "@tier, id, speaker and category");
      line.kind = Kind::kTier;
      line.index = doc.tiers.size();
      doc.tiers.push_back({f[1], f[2] == "-" ? "" : f[2], f[3], {}});
    } else if (tag == "event") {
      if (f.size() < 5) throw ParseError("expected event, tier, start, end and text", line_no);
      size_t tier = doc.tiers.size();
      for (size_t i = 0; i < doc.tiers.size(); ++i)
        if (doc.tiers[i].id == f[1]) tier = i;
      if (tier == doc.tiers.size())
        throw ParseError("event on undeclared tier '" + f[1] + "'", line_no);
      std::vector<std::string> rest(f.begin() + 4, f.end());
      line.kind = Kind::kEvent;
      line.index = tier;
      line.event = doc.tiers[tier].events.size();
      doc.tiers[tier].events.push_back({f[2], f[3], Join(rest, "\t")});
    } else {
      throw ParseError("unknown record '" + tag + "'", line_no);
    }
    line.canonical = Canonical(doc, line);
    file.lines.push_back(std::move(line));
  }

  Check(doc, [&](Kind kind, size_t index, size_t event) {
    for (size_t n = 0; n < file.lines.size(); ++n) {
      const TierLine &l = file.lines[n];
      if (l.kind == kind && l.index == index && (kind != Kind::kEvent || l.event == event))
        return static_cast<int>(n) + 1;
    }
    return 0;
  });
  return file;
}

std::string SerializeTier(const TierDocument &doc) {
  std::string out;
  auto emit = [&](const std::string &line) { out += line + "\n"; };
  for (const auto &s : doc.speakers) emit(FormatSpeaker(s));
  for (const auto &p : doc.points) emit(FormatPoint(p));
  for (const auto &t : doc.tiers) emit(FormatTier(t));
  for (const auto &t : doc.tiers)
    for (const auto &e : t.events) emit(FormatEvent(t, e));
  return out;
}

std::string SerializeTier(const TierFile &file) {
  using Kind = TierLine::Kind;
  const TierDocument &doc = file.document;
  size_t speakers = 0, points = 0, tiers = 0, events = 0, total_events = 0;
  bool in_range = true;
  for (const auto &l : file.lines) {
    switch (l.kind) {
      case Kind::kSpeaker: ++speakers; in_range &= l.index < doc.speakers.size(); break;
      case Kind::kPoint: ++points; in_range &= l.index < doc.points.size(); break;
      case Kind::kTier: ++tiers; in_range &= l.index < doc.tiers.size(); break;
      case Kind::kEvent:
        ++events;
        in_range &= l.index < doc.tiers.size() && l.event < doc.tiers[l.index].events.size();
        break;
      case Kind::kOther: break;
    }
  }
  for (const auto &t : doc.tiers) total_events += t.events.size();
  if (!in_range || speakers != doc.speakers.size() || points != doc.points.size() ||
      tiers != doc.tiers.size() || events != total_events)
    return SerializeTier(doc);

  std::string out;
  for (size_t n = 0; n < file.lines.size(); ++n) {
    const TierLine &l = file.lines[n];
    std::string now = Canonical(doc, l);
    out += l.kind == Kind::kOther || now == l.canonical ? l.text : now;
    if (n + 1 < file.lines.size() || file.final_newline) out += "\n";
  }
  return out;
}

}  // namespace spoken
