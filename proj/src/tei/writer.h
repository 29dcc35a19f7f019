// tei/writer.h

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

#ifndef SPOKEN_TEI_WRITER_H_
#define SPOKEN_TEI_WRITER_H_

#include <string>

#include "core/document.h"

namespace spoken {
namespace tei {

struct SerializeOptions {
  // Turn synthetic time points into real ones instead of refusing them.
  bool materialize_timeline = false;
};

/// Canonical TEI: namespace on the root, attributes sorted, two-space
/// indentation outside mixed content, timelines before the body, libraries
/// and lexical entries in <back>.  Annotations that did not come from the
/// transcript are written as body elements grouped by layer.  Throws Error
/// when synthetic points are present and not materialized.
std::string SerializeDocument(const Document &doc, const SerializeOptions &options = {});

/// Renames synthetic points "~autoN" to "autoN" and writes the matching
/// anchors (or start/end attributes) into the transcript.
Document MaterializeTimeline(const Document &doc);

}  // namespace tei
}  // namespace spoken

#endif  // SPOKEN_TEI_WRITER_H_
