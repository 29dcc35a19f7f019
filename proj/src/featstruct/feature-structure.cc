// featstruct/feature-structure.cc

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

#include "featstruct/feature-structure.h"

#include "base/error.h"
#include "base/text-utils.h"

namespace spoken {

FSValue FSValue::Binary(bool value) {
  FSValue v;
  v.kind_ = Kind::kBinary;
  v.binary_ = value;
  return v;
}

FSValue FSValue::Symbol(std::string name) {
  if (name.empty()) throw Error("symbol value must have a non-empty name");
  FSValue v;
  v.kind_ = Kind::kSymbol;
  v.text_ = std::move(name);
  return v;
}

FSValue FSValue::Numeric(double value) {
  FSValue v;
  v.kind_ = Kind::kNumeric;
  v.numeric_ = value;
  return v;
}

FSValue FSValue::String(std::string text) {
  FSValue v;
  v.kind_ = Kind::kString;
  v.text_ = std::move(text);
  return v;
}

FSValue FSValue::Struct(FeatureStructure fs) {
  FSValue v;
  v.kind_ = Kind::kStruct;
  v.fs_ = std::make_shared<const FeatureStructure>(std::move(fs));
  return v;
}

std::string FSValue::ToString() const {
  switch (kind_) {
    case Kind::kBinary: return binary_ ? "true" : "false";
    case Kind::kSymbol: return text_;
    case Kind::kNumeric: return FormatNumber(numeric_);
    case Kind::kString: return "\"" + text_ + "\"";
    case Kind::kStruct: return fs_->ToString();
  }
  return {};
}

bool operator==(const FSValue &a, const FSValue &b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case FSValue::Kind::kBinary: return a.binary_ == b.binary_;
    case FSValue::Kind::kNumeric: return a.numeric_ == b.numeric_;
    case FSValue::Kind::kSymbol:
    case FSValue::Kind::kString: return a.text_ == b.text_;
    case FSValue::Kind::kStruct: return *a.fs_ == *b.fs_;
  }
  return false;
}

const char *KindName(FSValue::Kind kind) {
  switch (kind) {
    case FSValue::Kind::kBinary: return "binary";
    case FSValue::Kind::kSymbol: return "symbol";
    case FSValue::Kind::kNumeric: return "numeric";
    case FSValue::Kind::kString: return "string";
    case FSValue::Kind::kStruct: return "fs";
  }
  return "?";
}

const FSValue *FeatureStructure::Find(std::string_view name) const {
  for (const auto &[n, v] : features_)
    if (n == name) return &v;
  return nullptr;
}

void FeatureStructure::Add(std::string name, FSValue value) {
  if (name.empty()) throw Error("feature name must be non-empty");
  if (Find(name)) throw Error("feature '" + name + "' already has a value");
  features_.emplace_back(std::move(name), std::move(value));
}

void FeatureStructure::Set(std::string name, FSValue value) {
  for (auto &[n, v] : features_) {
    if (n == name) {
      v = std::move(value);
      return;
    }
  }
  Add(std::move(name), std::move(value));
}

std::string FeatureStructure::ToString() const {
  std::string out = "[";
  bool first = true;
  if (!type_.empty()) {
    out += type_;
    first = false;
  }
  for (const auto &[n, v] : features_) {
    if (!first) out += ' ';
    first = false;
    out += n + "=" + v.ToString();
  }
  return out + "]";
}

bool operator==(const FeatureStructure &a, const FeatureStructure &b) {
  if (a.type_ != b.type_ || a.features_.size() != b.features_.size())
    return false;
  for (const auto &[n, v] : a.features_) {
    const FSValue *other = b.Find(n);
    if (!other || !(*other == v)) return false;
  }
  return true;
}

std::string UnifyFailure::ToString() const {
  return "clash at " + (path.empty() ? std::string("/") : path) + ": " +
         left.ToString() + " vs " + right.ToString();
}

UnifyResult UnifyResult::Success(FeatureStructure fs) {
  UnifyResult r;
  r.value_ = std::move(fs);
  return r;
}

UnifyResult UnifyResult::Failure(UnifyFailure failure) {
  UnifyResult r;
  r.failure_ = std::move(failure);
  return r;
}

const FeatureStructure &UnifyResult::value() const {
  if (!value_) throw Error("unification failed: " + failure_->ToString());
  return *value_;
}

const UnifyFailure &UnifyResult::failure() const {
  if (!failure_) throw Error("unification succeeded; no failure to report");
  return *failure_;
}

namespace {

std::string JoinPath(const std::string &prefix, const std::string &name) {
  return prefix.empty() ? name : prefix + "/" + name;
}

UnifyResult UnifyAt(const FeatureStructure &a, const FeatureStructure &b,
                    const std::string &prefix) {
  FeatureStructure out;
  if (!a.type().empty() && !b.type().empty() && a.type() != b.type()) {
    return UnifyResult::Failure({prefix + "@type", FSValue::Symbol(a.type()),
                                 FSValue::Symbol(b.type())});
  }
  out.set_type(a.type().empty() ? b.type() : a.type());

  for (const auto &[name, av] : a.features()) {
    const FSValue *bv = b.Find(name);
    if (!bv) {
      out.Add(name, av);
      continue;
    }
    std::string path = JoinPath(prefix, name);
    if (av.kind() == FSValue::Kind::kStruct &&
        bv->kind() == FSValue::Kind::kStruct) {
      UnifyResult inner = UnifyAt(av.fs(), bv->fs(), path);
      if (!inner.ok()) return inner;
      out.Add(name, FSValue::Struct(inner.value()));
    } else if (av == *bv) {
      out.Add(name, av);
    } else {
      return UnifyResult::Failure({path, av, *bv});
    }
  }
  for (const auto &[name, bv] : b.features())
    if (!a.Find(name)) out.Add(name, bv);
  return UnifyResult::Success(std::move(out));
}

void FlattenInto(const FeatureStructure &fs, const std::string &prefix,
                 std::vector<std::pair<std::string, FSValue>> &out) {
  for (const auto &[name, v] : fs.features()) {
    std::string path = JoinPath(prefix, name);
    if (v.kind() == FSValue::Kind::kStruct)
      FlattenInto(v.fs(), path, out);
    else
      out.emplace_back(path, v);
  }
}

}  // namespace

UnifyResult Unify(const FeatureStructure &a, const FeatureStructure &b) {
  return UnifyAt(a, b, "");
}

bool Subsumes(const FeatureStructure &general, const FeatureStructure &specific) {
  if (!general.type().empty() && general.type() != specific.type()) return false;
  for (const auto &[name, gv] : general.features()) {
    const FSValue *sv = specific.Find(name);
    if (!sv) return false;
    if (gv.kind() == FSValue::Kind::kStruct) {
      if (sv->kind() != FSValue::Kind::kStruct || !Subsumes(gv.fs(), sv->fs()))
        return false;
    } else if (!(gv == *sv)) {
      return false;
    }
  }
  return true;
}

std::vector<std::pair<std::string, FSValue>> Flatten(const FeatureStructure &fs) {
  std::vector<std::pair<std::string, FSValue>> out;
  FlattenInto(fs, "", out);
  return out;
}

}  // namespace spoken
