// tei/fs-markup.cc

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

#include "tei/fs-markup.h"

#include "base/error.h"
#include "base/text-utils.h"

namespace spoken {
namespace tei {

namespace {

const xml::Node *FirstElementChild(const xml::Node &n) {
  for (const auto &c : n.children)
    if (c.is_element()) return &c;
  return nullptr;
}

FSValue ParseValueElement(const xml::Node &v) {
  if (v.name == "binary") {
    std::string s = Trim(v.AttrOr("value", v.TextContent()));
    if (s == "true" || s == "1") return FSValue::Binary(true);
    if (s == "false" || s == "0") return FSValue::Binary(false);
    throw ParseError("binary value must be true or false, found '" + s + "'", v.line);
  }
  if (v.name == "symbol") {
    std::string s = Trim(v.AttrOr("value", v.TextContent()));
    if (s.empty()) throw ParseError("symbol without a value", v.line);
    return FSValue::Symbol(s);
  }
  if (v.name == "numeric") {
    std::string s = Trim(v.AttrOr("value", v.TextContent()));
    auto n = ParseNumber(s);
    if (!n) throw ParseError("numeric value '" + s + "' is not a number", v.line);
    return FSValue::Numeric(*n);
  }
  if (v.name == "string") return FSValue::String(v.TextContent());
  if (v.name == "fs") return FSValue::Struct(ParseFs(v));
  throw ParseError("unsupported feature value <" + v.name + ">", v.line);
}

}  // namespace

FSValue ParseFValue(const xml::Node &f) {
  if (const xml::Node *v = FirstElementChild(f)) return ParseValueElement(*v);
  // Bare text content is read as a string value.
  return FSValue::String(f.TextContent());
}

FeatureStructure ParseFs(const xml::Node &fs) {
  FeatureStructure out(fs.AttrOr("type"));
  out.set_id(fs.AttrOr("xml:id"));
  for (const auto &c : fs.children) {
    if (!c.IsElement("f")) continue;
    std::string name = c.AttrOr("name");
    if (name.empty()) throw ParseError("<f> without a name", c.line);
    if (out.Find(name))
      throw ParseError("feature '" + name + "' given twice in one structure", c.line);
    out.Add(name, ParseFValue(c));
  }
  return out;
}

xml::Node WriteValue(const FSValue &value) {
  switch (value.kind()) {
    case FSValue::Kind::kBinary: {
      xml::Node n = xml::Node::Element("binary");
      n.SetAttr("value", value.binary() ? "true" : "false");
      return n;
    }
    case FSValue::Kind::kSymbol: {
      xml::Node n = xml::Node::Element("symbol");
      n.SetAttr("value", value.text());
      return n;
    }
    case FSValue::Kind::kNumeric: {
      xml::Node n = xml::Node::Element("numeric");
      n.SetAttr("value", FormatNumber(value.numeric()));
      return n;
    }
    case FSValue::Kind::kString: {
      xml::Node n = xml::Node::Element("string");
      n.AppendText(value.text());
      n.verbatim = true;
      return n;
    }
    case FSValue::Kind::kStruct:
      return WriteFs(value.fs());
  }
  return xml::Node::Element("symbol");
}

xml::Node WriteF(const std::string &name, const FSValue &value) {
  xml::Node f = xml::Node::Element("f");
  f.SetAttr("name", name);
  f.Append(WriteValue(value));
  return f;
}

xml::Node WriteFs(const FeatureStructure &fs) {
  xml::Node n = xml::Node::Element("fs");
  if (!fs.type().empty()) n.SetAttr("type", fs.type());
  if (!fs.id().empty()) n.SetAttr("xml:id", fs.id());
  for (const auto &[name, value] : fs.features()) n.Append(WriteF(name, value));
  return n;
}

FeatureLibrary ParseFLib(const xml::Node &flib) {
  FeatureLibrary lib;
  lib.id = flib.AttrOr("xml:id");
  lib.label = flib.AttrOr("n");
  for (const auto &c : flib.children) {
    if (!c.IsElement("f")) continue;
    LibraryFeature lf{{c.AttrOr("xml:id"), c.AttrOr("name"), ParseFValue(c)}, false};
    if (lf.feature.name.empty()) throw ParseError("<f> without a name", c.line);
    if (lf.feature.id.empty()) {
      // Category libraries may put the identifier on the value.
      if (const xml::Node *v = FirstElementChild(c)) {
        if (const std::string *id = v->Attr("xml:id")) {
          lf.feature.id = *id;
          lf.id_on_value = true;
        }
      }
    }
    lib.features.push_back(std::move(lf));
  }
  return lib;
}

TagLibrary ParseFvLib(const xml::Node &fvlib) {
  TagLibrary lib;
  lib.id = fvlib.AttrOr("xml:id");
  lib.label = fvlib.AttrOr("n");
  for (const auto &c : fvlib.children) {
    if (!c.IsElement("fs")) continue;
    TagDecl t;
    t.id = c.AttrOr("xml:id");
    t.type = c.AttrOr("type");
    t.feats = SplitWhitespace(c.AttrOr("feats"));
    t.inline_features = ParseFs(c);
    t.inline_features.set_id("");
    t.inline_features.set_type("");
    lib.tags.push_back(std::move(t));
  }
  return lib;
}

xml::Node WriteFLib(const FeatureLibrary &lib) {
  xml::Node n = xml::Node::Element("fLib");
  if (!lib.id.empty()) n.SetAttr("xml:id", lib.id);
  if (!lib.label.empty()) n.SetAttr("n", lib.label);
  for (const auto &lf : lib.features) {
    xml::Node f = WriteF(lf.feature.name, lf.feature.value);
    if (!lf.feature.id.empty()) {
      if (lf.id_on_value) f.children[0].SetAttr("xml:id", lf.feature.id);
      else f.SetAttr("xml:id", lf.feature.id);
    }
    n.Append(std::move(f));
  }
  return n;
}

xml::Node WriteFvLib(const TagLibrary &lib) {
  xml::Node n = xml::Node::Element("fvLib");
  if (!lib.id.empty()) n.SetAttr("xml:id", lib.id);
  if (!lib.label.empty()) n.SetAttr("n", lib.label);
  for (const auto &t : lib.tags) {
    xml::Node fs = WriteFs(t.inline_features);
    if (!t.id.empty()) fs.SetAttr("xml:id", t.id);
    if (!t.type.empty()) fs.SetAttr("type", t.type);
    if (!t.feats.empty()) fs.SetAttr("feats", Join(t.feats, " "));
    n.Append(std::move(fs));
  }
  return n;
}

namespace {

void CollectLibraries(const xml::Node &n, TagsetFile *out) {
  if (n.IsElement("fLib")) {
    out->feature_libraries.push_back(ParseFLib(n));
    return;
  }
  if (n.IsElement("fvLib")) {
    out->tag_libraries.push_back(ParseFvLib(n));
    return;
  }
  if (n.IsElement("fs") && n.Attr("xml:id")) {
    out->structures.push_back({n.AttrOr("xml:id"), ParseFs(n)});
    return;
  }
  for (const auto &c : n.children)
    if (c.is_element()) CollectLibraries(c, out);
}

}  // namespace

TagsetFile ReadTagsetFile(std::string_view text) {
  TagsetFile file;
  CollectLibraries(xml::Parse(text), &file);
  return file;
}

TagsetLibrary BuildTagset(const TagsetFile &file) {
  std::vector<Feature> features;
  for (const auto &lib : file.feature_libraries)
    for (const auto &f : lib.features) features.push_back(f.feature);
  std::vector<TagDecl> tags;
  for (const auto &lib : file.tag_libraries)
    tags.insert(tags.end(), lib.tags.begin(), lib.tags.end());
  return BuildLibrary(features, tags);
}

}  // namespace tei
}  // namespace spoken
