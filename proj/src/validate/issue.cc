// validate/issue.cc

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

#include "validate/issue.h"

#include <algorithm>
#include <set>
#include <tuple>

namespace spoken {

const char *SeverityName(Severity s) { return s == Severity::kError ? "error" : "warning"; }

std::optional<Severity> ParseSeverity(std::string_view name) {
  if (name == "error") return Severity::kError;
  if (name == "warning") return Severity::kWarning;
  return std::nullopt;
}

Severity SeverityPolicy::Of(std::string_view code) const {
  auto it = overrides_.find(code);
  if (it != overrides_.end()) return it->second;
  static const std::set<std::string_view> kErrors = {
      "DUP_ID",       "DANGLING_REF",     "SPAN_ORDER",       "UNKNOWN_TAG",
      "TAG_CONFLICT", "DOMAIN_VIOLATION", "LEVEL_INCOHERENT", "ANCHOR_IN_TOKEN"};
  return kErrors.count(code) ? Severity::kError : Severity::kWarning;
}

void SeverityPolicy::Override(std::string code, Severity severity) {
  overrides_[std::move(code)] = severity;
}

size_t Report::errors() const {
  return std::count_if(issues.begin(), issues.end(),
                       [](const Issue &i) { return i.severity == Severity::kError; });
}

size_t Report::warnings() const { return issues.size() - errors(); }

Report MakeReport(const std::vector<Finding> &findings, const SeverityPolicy &policy) {
  Report report;
  for (const auto &f : findings)
    report.issues.push_back({f.code, policy.Of(f.code), f.location, f.message});
  // Stable, so messages keep the order in which they were found.
  std::stable_sort(report.issues.begin(), report.issues.end(),
                   [](const Issue &a, const Issue &b) {
                     return std::tie(a.severity, a.code, a.location) <
                            std::tie(b.severity, b.code, b.location);
                   });
  // One issue per (code, location); distinct messages are joined.
  std::vector<Issue> merged;
  for (Issue &i : report.issues) {
    if (!merged.empty() && merged.back().code == i.code &&
        merged.back().location == i.location) {
      std::string &message = merged.back().message;
      if (("; " + message + "; ").find("; " + i.message + "; ") == std::string::npos)
        message += "; " + i.message;
      continue;
    }
    merged.push_back(std::move(i));
  }
  report.issues = std::move(merged);
  return report;
}

std::string FormatText(const Report &report, std::string_view name) {
  std::string prefix = name.empty() ? "" : std::string(name) + ": ";
  std::string out;
  for (const auto &i : report.issues)
    out += prefix + SeverityName(i.severity) + " " + i.code + " " + i.location + ": " +
           i.message + "\n";
  auto plural = [](size_t n, const char *word) {
    return std::to_string(n) + " " + word + (n == 1 ? "" : "s");
  };
  out += prefix + plural(report.errors(), "error") + ", " +
         plural(report.warnings(), "warning") + "\n";
  return out;
}

std::string FormatTsv(const Report &report) {
  std::string out;
  auto clean = [](std::string s) {
    std::replace(s.begin(), s.end(), '\t', ' ');
    std::replace(s.begin(), s.end(), '\n', ' ');
    return s;
  };
  for (const auto &i : report.issues)
    out += std::string(SeverityName(i.severity)) + "\t" + i.code + "\t" + clean(i.location) +
           "\t" + clean(i.message) + "\n";
  return out;
}

}  // namespace spoken
