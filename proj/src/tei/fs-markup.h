// tei/fs-markup.h

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

#ifndef SPOKEN_TEI_FS_MARKUP_H_
#define SPOKEN_TEI_FS_MARKUP_H_

#include <string_view>
#include <vector>

#include "base/xml.h"
#include "core/document.h"
#include "featstruct/tagset.h"

namespace spoken {
namespace tei {

/// <fs> element to structure.  Throws ParseError (with the element's line)
/// for a value the model cannot hold.
FeatureStructure ParseFs(const xml::Node &fs);
/// Value of an <f>: its typed child element.
FSValue ParseFValue(const xml::Node &f);

xml::Node WriteFs(const FeatureStructure &fs);
xml::Node WriteF(const std::string &name, const FSValue &value);
xml::Node WriteValue(const FSValue &value);

FeatureLibrary ParseFLib(const xml::Node &flib);
TagLibrary ParseFvLib(const xml::Node &fvlib);
xml::Node WriteFLib(const FeatureLibrary &lib);
xml::Node WriteFvLib(const TagLibrary &lib);

/// Libraries collected from anywhere in a markup file, e.g. a standalone
/// tagset document.
struct TagsetFile {
  std::vector<FeatureLibrary> feature_libraries;
  std::vector<TagLibrary> tag_libraries;
  std::vector<NamedStructure> structures;  // identified <fs> outside fvLib
};

TagsetFile ReadTagsetFile(std::string_view text);
/// Builds the resolved library; throws LibraryError.
TagsetLibrary BuildTagset(const TagsetFile &file);

}  // namespace tei
}  // namespace spoken

#endif  // SPOKEN_TEI_FS_MARKUP_H_
