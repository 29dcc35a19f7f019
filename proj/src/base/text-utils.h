// base/text-utils.h

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

#ifndef SPOKEN_BASE_TEXT_UTILS_H_
#define SPOKEN_BASE_TEXT_UTILS_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace spoken {

bool IsXmlSpace(char c);
bool IsBlank(std::string_view s);
std::string Trim(std::string_view s);
/// Trims and collapses every run of whitespace to one space.
std::string NormalizeSpace(std::string_view s);

/// Splits on every occurrence of `sep`; empty fields are kept.
std::vector<std::string> Split(std::string_view s, char sep);

/// Splits on runs of XML whitespace; empty fields are dropped.
std::vector<std::string> SplitWhitespace(std::string_view s);

std::string Join(const std::vector<std::string> &parts, std::string_view sep);

/// "#T3" -> "T3".  References and the occasional malformed identifier both
/// carry the pointer prefix.
std::string StripHash(std::string_view ref);

/// Identifiers carrying '#' or whitespace are not legal markup identifiers.
bool IsBadIdentifier(std::string_view id);

/// Identifiers the toolkit makes up itself start with '~' (or contain '#'),
/// which can never occur in a markup identifier; they are never serialized.
bool IsGeneratedId(std::string_view id);

/// Exact decimal parse; rejects trailing garbage, NaN and infinities.
std::optional<double> ParseNumber(std::string_view s);

/// Shortest text that parses back to the same double ("250", "0.5").
std::string FormatNumber(double v);

bool EqualsIgnoreCase(std::string_view a, std::string_view b);

/// Whole file as bytes.  Throws Error if it cannot be read.
std::string ReadFile(const std::string &path);

}  // namespace spoken

#endif  // SPOKEN_BASE_TEXT_UTILS_H_
