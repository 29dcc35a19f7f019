// validate/checks.h

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

#ifndef SPOKEN_VALIDATE_CHECKS_H_
#define SPOKEN_VALIDATE_CHECKS_H_

#include <optional>
#include <string>

#include "core/document.h"
#include "datacat/registry.h"
#include "tei/fs-markup.h"
#include "validate/issue.h"

namespace spoken {

/// Checks take the document as parsed and return raw findings; severities
/// are attached when the report is made.  Locations are element ids, or
/// paths such as "body/u[2]", "(body/u[2]//anchor)[3]" and
/// "(teiHeader//application)[1]" for elements without one.

/// DUP_ID per repeated identifier, BAD_ID per identifier containing '#' or
/// blanks.  Includes duplicates the reader had to drop.
Findings CheckIds(const Document &doc);

/// DANGLING_REF per pointer that does not resolve: who, synch, start, end,
/// from, to, corresp, ana, feats, origin and target, plus pivot
/// annotations and word forms.  `tagset` adds externally declared tags.
Findings CheckRefs(const Document &doc, const tei::TagsetFile *tagset = nullptr);

/// ANCHOR_ORDER when the anchors of an utterance go back in time or an
/// event ends before it starts; OFFSET_ORDER when an offset is smaller than
/// that of an earlier point; ANCHOR_IN_TOKEN for an anchor inside <w> or
/// <pc>.
Findings CheckTemporal(const Document &doc);

/// SPAN_ORDER when a span's start comes after its end.
Findings CheckSpans(const Document &doc);

/// UNKNOWN_TAG per @ana that is not a tag or structure, TAG_CONFLICT per
/// tag whose features clash.  With a registry, DOMAIN_VIOLATION per
/// feature-value pair of a used tag that the registry rejects for
/// `language`, and FEATURE_NAME_MISMATCH for library feature names that
/// match a registered name only up to case.
Findings CheckTagset(const Document &doc, const tei::TagsetFile *tagset,
                     const Registry *registry, const std::optional<std::string> &language);

struct ValidateOptions {
  const tei::TagsetFile *tagset = nullptr;
  const Registry *registry = nullptr;
  std::optional<std::string> language;
  SeverityPolicy severities;
};

/// All checks plus level coherence and `parse_findings` from the reader
/// (those the checks derive themselves are left out).
Report ValidateAll(const Document &doc, const ValidateOptions &options = {},
                   const Findings &parse_findings = {});

}  // namespace spoken

#endif  // SPOKEN_VALIDATE_CHECKS_H_
