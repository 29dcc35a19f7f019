// tei/resolve.h

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

#ifndef SPOKEN_TEI_RESOLVE_H_
#define SPOKEN_TEI_RESOLVE_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "base/error.h"
#include "core/document.h"
#include "featstruct/tagset.h"

namespace spoken {
namespace tei {

extern const char kAnchorTimeline[];  // "~anchors"
extern const char kComponentLevel[];  // "~components", spans over element ids

/// Layer category of a body element: u -> verbal, kinesic -> gesture,
/// incident -> incident, vocal -> vocal.
std::string CategoryOfElement(std::string_view element);
/// Inverse of CategoryOfElement; empty for categories written as span groups.
std::string ElementOfCategory(std::string_view category);
/// "<category>_<speaker>", or the category alone without a speaker.
std::string DefaultLayerId(std::string_view category, std::string_view speaker);

/// Rebuilds the pivot view of the transcript: the timeline of declared
/// anchors, one annotation per utterance, standalone event and span, their
/// layers, tokens and word forms.  An utterance spans [first anchor, last
/// anchor); events use start/end.  Events without two usable points stay
/// unresolved.  Problems are appended to `findings`.
Document ResolveAnchors(const Document &doc, Findings *findings);

/// Word forms of every span in a "wordForm" span group, over the contiguous
/// token run from..to.
std::vector<WordForm> ExtractSpans(const Document &doc, Findings *findings);

/// Tagset library declared in the document.  Throws LibraryError.
TagsetLibrary DocumentLibrary(const Document &doc);

/// Structure an @ana reference points at: a library tag, or an identified
/// structure in the document.  Throws ReferenceError naming the reference.
FeatureStructure ResolveAna(const Document &doc, const TagsetLibrary &lib,
                            std::string_view ref);

/// Number of <seg> elements by @type, nested ones included.
std::map<std::string, int> SegStats(const Document &doc);

}  // namespace tei
}  // namespace spoken

#endif  // SPOKEN_TEI_RESOLVE_H_
