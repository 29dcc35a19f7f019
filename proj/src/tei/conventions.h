// tei/conventions.h

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

#ifndef SPOKEN_TEI_CONVENTIONS_H_
#define SPOKEN_TEI_CONVENTIONS_H_

#include <regex>
#include <string>
#include <string_view>
#include <vector>

#include "base/error.h"
#include "core/document.h"

namespace spoken {
namespace tei {

/// Rewrites a transcription convention found in running text into an
/// element.  `desc_group` selects the capture group that becomes the
/// description.
struct ConventionRule {
  std::string pattern;
  Event::Kind element = Event::Kind::kVocal;
  int desc_group = 1;
  std::regex regex;
};

using ConventionRules = std::vector<ConventionRule>;

/// Throws Error for an invalid pattern or a group the pattern lacks.
ConventionRule MakeRule(std::string pattern, Event::Kind element, int desc_group);

/// "((X))" -> <vocal><desc>X</desc></vocal>.
ConventionRules BuiltinRules();

/// One rule per line: pattern<TAB>element<TAB>descGroup.  Blank lines and
/// lines starting with '#' are skipped.  Throws ParseError.
ConventionRules ParseRules(std::string_view text);

/// Applies the rules left to right over every text run of the utterance
/// (including those inside seg).  Text left with "((" or "))" is reported as
/// unbalanced and kept as is.
Utterance PromoteConventions(const Utterance &u, const ConventionRules &rules,
                             Findings *findings = nullptr);

/// Promotes conventions in every utterance and resolves the result again.
Document PromoteConventions(const Document &doc, const ConventionRules &rules,
                            Findings *findings = nullptr);

}  // namespace tei
}  // namespace spoken

#endif  // SPOKEN_TEI_CONVENTIONS_H_
