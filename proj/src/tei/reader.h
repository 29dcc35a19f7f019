// tei/reader.h

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

#ifndef SPOKEN_TEI_READER_H_
#define SPOKEN_TEI_READER_H_

#include <string_view>

#include "base/error.h"
#include "core/document.h"

namespace spoken {
namespace tei {

extern const char kTeiNamespace[];

struct ParseResult {
  Document document;
  Findings warnings;
};

/// Reads a TEI spoken-transcription document and resolves its anchors.
/// Unknown markup is kept as opaque nodes.  Throws ParseError for
/// ill-formed input or a missing file description.
ParseResult ParseDocument(std::string_view text);

}  // namespace tei
}  // namespace spoken

#endif  // SPOKEN_TEI_READER_H_
