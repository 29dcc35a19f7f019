// tei/conventions.cc

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

#include "tei/conventions.h"

#include "base/text-utils.h"
#include "tei/resolve.h"

namespace spoken {
namespace tei {

ConventionRule MakeRule(std::string pattern, Event::Kind element, int desc_group) {
  ConventionRule rule;
  try {
    rule.regex = std::regex(pattern, std::regex::ECMAScript);
  } catch (const std::regex_error &e) {
    throw Error("invalid convention pattern '" + pattern + "': " + e.what());
  }
  if (desc_group < 0 || static_cast<size_t>(desc_group) > rule.regex.mark_count())
    throw Error("convention pattern '" + pattern + "' has no group " +
                std::to_string(desc_group));
  if (std::regex_search("", rule.regex))
    throw Error("convention pattern '" + pattern + "' matches the empty string");
  rule.pattern = std::move(pattern);
  rule.element = element;
  rule.desc_group = desc_group;
  return rule;
}

ConventionRules BuiltinRules() {
  return {MakeRule(R"(\(\(([^()]*)\)\))", Event::Kind::kVocal, 1)};
}

ConventionRules ParseRules(std::string_view text) {
  ConventionRules rules;
  int line_no = 0;
  for (std::string line : Split(text, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (IsBlank(line) || Trim(line)[0] == '#') continue;
    auto fields = Split(line, '\t');
    if (fields.size() != 3)
      throw ParseError("expected pattern, element and group separated by tabs", line_no);
    auto kind = ParseEventElement(Trim(fields[1]));
    if (!kind)
      throw ParseError("element must be vocal, kinesic or incident, found '" +
                           Trim(fields[1]) + "'",
                       line_no);
    auto group = ParseNumber(Trim(fields[2]));
    if (!group || *group != static_cast<int>(*group))
      throw ParseError("group '" + Trim(fields[2]) + "' is not an integer", line_no);
    try {
      rules.push_back(MakeRule(fields[0], *kind, static_cast<int>(*group)));
    } catch (const ParseError &) {
      throw;
    } catch (const Error &e) {
      throw ParseError(e.what(), line_no);
    }
  }
  return rules;
}

namespace {

void PromoteRuns(std::vector<Inline> *content, const ConventionRules &rules,
                 const std::string &location, Findings *findings) {
  std::vector<Inline> out;
  for (Inline &item : *content) {
    if (auto *s = item.As<Seg>()) PromoteRuns(&s->children, rules, location, findings);
    const TextRun *run = item.As<TextRun>();
    if (!run) {
      out.push_back(std::move(item));
      continue;
    }
    std::string rest = run->text;
    while (!rest.empty()) {
      std::smatch best;
      const ConventionRule *best_rule = nullptr;
      for (const auto &rule : rules) {
        std::smatch m;
        if (!std::regex_search(rest, m, rule.regex)) continue;
        if (!best_rule || m.position(0) < best.position(0)) {
          best = m;
          best_rule = &rule;
        }
      }
      if (!best_rule) break;
      std::string before = rest.substr(0, best.position(0));
      if (!before.empty()) out.push_back({TextRun{before}});
      Event e;
      e.kind = best_rule->element;
      e.desc = best[best_rule->desc_group].str();
      out.push_back({std::move(e)});
      rest = rest.substr(best.position(0) + best.length(0));
    }
    if (rest.find("((") != std::string::npos || rest.find("))") != std::string::npos)
      findings->push_back({"UNBALANCED_CONVENTION", location,
                           "unbalanced convention marker in '" + NormalizeSpace(rest) + "'"});
    if (!rest.empty()) {
      if (!out.empty())
        if (auto *t = out.back().As<TextRun>()) {
          t->text += rest;
          continue;
        }
      out.push_back({TextRun{rest}});
    }
  }
  *content = std::move(out);
}

}  // namespace

Utterance PromoteConventions(const Utterance &u, const ConventionRules &rules,
                             Findings *findings) {
  Findings local;
  Utterance out = u;
  PromoteRuns(&out.content, rules, u.id.empty() ? "u" : u.id,
              findings ? findings : &local);
  return out;
}

Document PromoteConventions(const Document &doc, const ConventionRules &rules,
                            Findings *findings) {
  Findings local;
  if (!findings) findings = &local;
  Document out = doc;
  for (auto &item : out.transcript.body)
    if (auto *u = std::get_if<Utterance>(&item)) *u = PromoteConventions(*u, rules, findings);
  return ResolveAnchors(out, findings);
}

}  // namespace tei
}  // namespace spoken
