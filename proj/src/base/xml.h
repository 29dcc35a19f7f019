// base/xml.h

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

#ifndef SPOKEN_BASE_XML_H_
#define SPOKEN_BASE_XML_H_

#include <string>
#include <string_view>
#include <vector>

namespace spoken {
namespace xml {

struct Attribute {
  std::string name;
  std::string value;

  bool operator==(const Attribute &) const = default;
};

using Attributes = std::vector<Attribute>;

/// Minimal DOM node.  Namespace prefixes are kept as part of the name; the
/// reader does no namespace processing.
struct Node {
  enum class Kind { kElement, kText, kComment };

  Kind kind = Kind::kElement;
  std::string name;         // elements only
  Attributes attributes;    // elements only, document order
  std::string text;         // text and comment content
  std::vector<Node> children;
  // Written exactly as stored, with no indentation added anywhere in the
  // subtree.  Set on mixed-content elements and on preserved foreign markup.
  bool verbatim = false;
  int line = 0;             // 1-based source line, 0 if built in memory

  static Node Element(std::string name);
  static Node Text(std::string text);
  static Node Comment(std::string text);

  bool is_element() const { return kind == Kind::kElement; }
  bool is_text() const { return kind == Kind::kText; }
  bool IsElement(std::string_view n) const {
    return kind == Kind::kElement && name == n;
  }

  /// nullptr when absent.
  const std::string *Attr(std::string_view n) const;
  std::string AttrOr(std::string_view n, std::string_view fallback = {}) const;
  /// Replaces an existing attribute of the same name.
  void SetAttr(std::string_view n, std::string_view value);

  Node &Append(Node child);
  Node &AppendElement(std::string name);
  void AppendText(std::string_view text);

  /// Concatenated text of all descendant text nodes.
  std::string TextContent() const;
  bool HasTextChild() const;
  bool HasElementChildren() const;

  /// Structural equality: attribute order, `line` and `verbatim` are
  /// ignored.
  friend bool operator==(const Node &a, const Node &b);
};

/// Parses a complete document and returns its root element.  Comments and
/// character data are kept; processing instructions and the doctype are
/// dropped.  Throws ParseError on ill-formed input.
Node Parse(std::string_view input);

/// Serializes with attributes sorted by name and two-space indentation for
/// element-only content.  Elements that are verbatim or contain text are
/// written inline exactly.
std::string Write(const Node &root, bool with_declaration = true);

std::string EscapeText(std::string_view s);
std::string EscapeAttribute(std::string_view s);

}  // namespace xml
}  // namespace spoken

#endif  // SPOKEN_BASE_XML_H_
