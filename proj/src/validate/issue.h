// validate/issue.h

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

#ifndef SPOKEN_VALIDATE_ISSUE_H_
#define SPOKEN_VALIDATE_ISSUE_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "base/error.h"

namespace spoken {

enum class Severity { kError, kWarning };

const char *SeverityName(Severity s);
std::optional<Severity> ParseSeverity(std::string_view name);

struct Issue {
  std::string code;
  Severity severity = Severity::kError;
  std::string location;  // element id, element path or "line N"
  std::string message;

  bool operator==(const Issue &) const = default;
};

/// Severity per issue code.  Errors by default: DUP_ID, DANGLING_REF,
/// SPAN_ORDER, UNKNOWN_TAG, TAG_CONFLICT, DOMAIN_VIOLATION,
/// LEVEL_INCOHERENT, ANCHOR_IN_TOKEN.  Every other code is a warning unless
/// overridden.
class SeverityPolicy {
 public:
  Severity Of(std::string_view code) const;
  void Override(std::string code, Severity severity);

 private:
  std::map<std::string, Severity, std::less<>> overrides_;
};

struct Report {
  std::vector<Issue> issues;

  size_t errors() const;
  size_t warnings() const;
};

/// Applies the policy, sorts by (severity, code, location) and merges the
/// findings of every (code, location) pair into one issue whose message
/// lists their distinct messages separated by "; ".
Report MakeReport(const std::vector<Finding> &findings, const SeverityPolicy &policy);

/// "error   DUP_ID  tp2u: ..." lines followed by a summary line.  `name`
/// prefixes every line when non-empty.
std::string FormatText(const Report &report, std::string_view name = {});
/// severity<TAB>code<TAB>location<TAB>message, one issue per line.
std::string FormatTsv(const Report &report);

}  // namespace spoken

#endif  // SPOKEN_VALIDATE_ISSUE_H_
