// base/xml-test.cc

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

#include "base/error.h"
#include "doctest.h"

namespace spoken {
namespace xml {

TEST_CASE("parse keeps mixed content and comments") {
  Node root = Parse("<a x=\"1\"><!--c--><b>one <i>two</i> three</b></a>");
  CHECK(root.name == "a");
  CHECK(root.AttrOr("x") == "1");
  REQUIRE(root.children.size() == 2);
  CHECK(root.children[0].kind == Node::Kind::kComment);
  CHECK(root.children[0].text == "c");
  const Node &b = root.children[1];
  CHECK(b.TextContent() == "one two three");
  CHECK(b.children.size() == 3);
}

TEST_CASE("entities are decoded and re-escaped") {
  Node root = Parse("<u>A &amp; B &lt;C&gt;</u>");
  CHECK(root.TextContent() == "A & B <C>");
  CHECK(Write(root, false) == "<u>A &amp; B &lt;C&gt;</u>\n");
}

TEST_CASE("ill-formed markup reports a line") {
  try {
    Parse("<a>\n<b>\n</a>");
    FAIL("expected a parse error");
  } catch (const ParseError &e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(Parse(""), ParseError);
}

TEST_CASE("writer sorts attributes and indents element-only content") {
  Node root = Node::Element("r");
  Node &c = root.AppendElement("c");
  c.SetAttr("z", "1");
  c.SetAttr("a", "q\"t");
  Node &m = root.AppendElement("m");
  m.AppendText("x ");
  m.AppendElement("e");
  CHECK(Write(root, false) ==
        "<r>\n"
        "  <c a=\"q&quot;t\" z=\"1\"/>\n"
        "  <m>x <e/></m>\n"
        "</r>\n");
}

TEST_CASE("verbatim subtrees survive a write/parse cycle byte for byte") {
  const char *src = "<r><ext b=\"2\" a=\"1\"><k/><k>t</k></ext></r>";
  Node root = Parse(src);
  root.children[0].verbatim = true;
  std::string out = Write(root, false);
  CHECK(out == "<r>\n  <ext a=\"1\" b=\"2\"><k/><k>t</k></ext>\n</r>\n");
  Node again = Parse(out);
  // The indentation whitespace lands in <r> only.
  CHECK(again.children[1] == root.children[0]);
}

TEST_CASE("node equality ignores attribute order") {
  CHECK(Parse("<a x=\"1\" y=\"2\"/>") == Parse("<a y=\"2\" x=\"1\"/>"));
  CHECK_FALSE(Parse("<a x=\"1\"/>") == Parse("<a x=\"2\"/>"));
}

}  // namespace xml
}  // namespace spoken
