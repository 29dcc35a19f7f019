// base/xml.cc

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

#include "base/xml.h"

#include <expat.h>

#include <algorithm>
#include <memory>

#include "base/error.h"

namespace spoken {
namespace xml {

Node Node::Element(std::string name) {
  Node n;
  n.kind = Kind::kElement;
  n.name = std::move(name);
  return n;
}

Node Node::Text(std::string text) {
  Node n;
  n.kind = Kind::kText;
  n.text = std::move(text);
  return n;
}

Node Node::Comment(std::string text) {
  Node n;
  n.kind = Kind::kComment;
  n.text = std::move(text);
  return n;
}

const std::string *Node::Attr(std::string_view n) const {
  for (const auto &a : attributes)
    if (a.name == n) return &a.value;
  return nullptr;
}

std::string Node::AttrOr(std::string_view n, std::string_view fallback) const {
  const std::string *v = Attr(n);
  return v ? *v : std::string(fallback);
}

void Node::SetAttr(std::string_view n, std::string_view value) {
  for (auto &a : attributes) {
    if (a.name == n) {
      a.value = std::string(value);
      return;
    }
  }
  attributes.push_back({std::string(n), std::string(value)});
}

Node &Node::Append(Node child) {
  children.push_back(std::move(child));
  return children.back();
}

Node &Node::AppendElement(std::string name) {
  return Append(Element(std::move(name)));
}

void Node::AppendText(std::string_view text) {
  if (text.empty()) return;
  if (!children.empty() && children.back().is_text())
    children.back().text += text;
  else
    children.push_back(Text(std::string(text)));
}

std::string Node::TextContent() const {
  if (kind == Kind::kText) return text;
  std::string out;
  for (const auto &c : children)
    if (c.kind != Kind::kComment) out += c.TextContent();
  return out;
}

bool Node::HasTextChild() const {
  for (const auto &c : children)
    if (c.is_text()) return true;
  return false;
}

bool Node::HasElementChildren() const {
  for (const auto &c : children)
    if (c.is_element()) return true;
  return false;
}

namespace {

Attributes Sorted(Attributes a) {
  std::sort(a.begin(), a.end(), [](const Attribute &x, const Attribute &y) {
    return x.name < y.name;
  });
  return a;
}

}  // namespace

bool operator==(const Node &a, const Node &b) {
  if (a.kind != b.kind || a.name != b.name || a.text != b.text) return false;
  if (a.attributes.size() != b.attributes.size()) return false;
  if (Sorted(a.attributes) != Sorted(b.attributes)) return false;
  return a.children == b.children;
}

// ---------------------------------------------------------------------------
// Reading

namespace {

struct ParseState {
  XML_Parser parser = nullptr;
  Node root;
  bool have_root = false;
  std::vector<Node *> stack;
};

void OnStart(void *data, const XML_Char *name, const XML_Char **atts) {
  auto *st = static_cast<ParseState *>(data);
  Node el = Node::Element(name);
  el.line = static_cast<int>(XML_GetCurrentLineNumber(st->parser));
  for (int i = 0; atts[i]; i += 2) el.attributes.push_back({atts[i], atts[i + 1]});
  if (st->stack.empty()) {
    st->root = std::move(el);
    st->have_root = true;
    st->stack.push_back(&st->root);
  } else {
    st->stack.push_back(&st->stack.back()->Append(std::move(el)));
  }
}

void OnEnd(void *data, const XML_Char *) {
  static_cast<ParseState *>(data)->stack.pop_back();
}

void OnText(void *data, const XML_Char *s, int len) {
  auto *st = static_cast<ParseState *>(data);
  if (st->stack.empty()) return;
  st->stack.back()->AppendText(std::string_view(s, static_cast<size_t>(len)));
}

void OnComment(void *data, const XML_Char *s) {
  auto *st = static_cast<ParseState *>(data);
  if (st->stack.empty()) return;
  Node c = Node::Comment(s);
  c.line = static_cast<int>(XML_GetCurrentLineNumber(st->parser));
  st->stack.back()->Append(std::move(c));
}

}  // namespace

Node Parse(std::string_view input) {
  ParseState st;
  std::unique_ptr<XML_ParserStruct, decltype(&XML_ParserFree)> parser(
      XML_ParserCreate("UTF-8"), &XML_ParserFree);
  if (!parser) throw Error("cannot allocate XML parser");
  st.parser = parser.get();
  XML_SetUserData(parser.get(), &st);
  XML_SetElementHandler(parser.get(), OnStart, OnEnd);
  XML_SetCharacterDataHandler(parser.get(), OnText);
  XML_SetCommentHandler(parser.get(), OnComment);
  if (XML_Parse(parser.get(), input.data(), static_cast<int>(input.size()),
                XML_TRUE) == XML_STATUS_ERROR) {
    throw ParseError(
        std::string("ill-formed markup: ") +
            XML_ErrorString(XML_GetErrorCode(parser.get())),
        static_cast<int>(XML_GetCurrentLineNumber(parser.get())));
  }
  if (!st.have_root) throw ParseError("document has no root element", 0);
  return std::move(st.root);
}

// ---------------------------------------------------------------------------
// Writing

std::string EscapeText(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string EscapeAttribute(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\t': out += "&#9;"; break;
      case '\n': out += "&#10;"; break;
      case '\r': out += "&#13;"; break;
      default: out += c;
    }
  }
  return out;
}

namespace {

void WriteOpenTag(const Node &n, std::string &out) {
  out += '<';
  out += n.name;
  for (const auto &a : Sorted(n.attributes)) {
    out += ' ';
    out += a.name;
    out += "=\"";
    out += EscapeAttribute(a.value);
    out += '"';
  }
}

void WriteInline(const Node &n, std::string &out) {
  switch (n.kind) {
    case Node::Kind::kText:
      out += EscapeText(n.text);
      return;
    case Node::Kind::kComment:
      out += "<!--" + n.text + "-->";
      return;
    case Node::Kind::kElement:
      WriteOpenTag(n, out);
      if (n.children.empty()) {
        out += "/>";
        return;
      }
      out += '>';
      for (const auto &c : n.children) WriteInline(c, out);
      out += "</" + n.name + ">";
      return;
  }
}

void WritePretty(const Node &n, int depth, std::string &out) {
  std::string indent(static_cast<size_t>(depth) * 2, ' ');
  out += indent;
  if (n.kind != Node::Kind::kElement || n.verbatim || n.HasTextChild() ||
      n.children.empty()) {
    WriteInline(n, out);
    out += '\n';
    return;
  }
  WriteOpenTag(n, out);
  out += ">\n";
  for (const auto &c : n.children) WritePretty(c, depth + 1, out);
  out += indent + "</" + n.name + ">\n";
}

}  // namespace

std::string Write(const Node &root, bool with_declaration) {
  std::string out;
  if (with_declaration) out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  WritePretty(root, 0, out);
  return out;
}

}  // namespace xml
}  // namespace spoken
