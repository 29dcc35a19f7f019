// featstruct/feature-structure.h

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

#ifndef SPOKEN_FEATSTRUCT_FEATURE_STRUCTURE_H_
#define SPOKEN_FEATSTRUCT_FEATURE_STRUCTURE_H_

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace spoken {

class FeatureStructure;

/// A feature value: one of the four typed atoms or a nested structure.
/// Immutable once built; nested structures are shared.
class FSValue {
 public:
  enum class Kind { kBinary, kSymbol, kNumeric, kString, kStruct };

  static FSValue Binary(bool value);
  static FSValue Symbol(std::string name);  // name must be non-empty
  static FSValue Numeric(double value);
  static FSValue String(std::string text);
  static FSValue Struct(FeatureStructure fs);

  Kind kind() const { return kind_; }
  bool is_atomic() const { return kind_ != Kind::kStruct; }

  bool binary() const { return binary_; }
  double numeric() const { return numeric_; }
  /// Symbol name or string text.
  const std::string &text() const { return text_; }
  const FeatureStructure &fs() const { return *fs_; }

  /// "true", "noun", "3.5", "\"some text\"" or "[...]".
  std::string ToString() const;

  friend bool operator==(const FSValue &a, const FSValue &b);

 private:
  FSValue() = default;

  Kind kind_ = Kind::kSymbol;
  bool binary_ = false;
  double numeric_ = 0;
  std::string text_;
  std::shared_ptr<const FeatureStructure> fs_;
};

const char *KindName(FSValue::Kind kind);

/// An optionally typed set of feature-value pairs, at most one value per
/// feature name.  Features keep insertion order for display; equality and
/// all operations treat them as a map.
class FeatureStructure {
 public:
  using Entry = std::pair<std::string, FSValue>;

  FeatureStructure() = default;
  explicit FeatureStructure(std::string type) : type_(std::move(type)) {}

  const std::string &type() const { return type_; }
  void set_type(std::string type) { type_ = std::move(type); }
  /// Markup identifier; not part of equality.
  const std::string &id() const { return id_; }
  void set_id(std::string id) { id_ = std::move(id); }

  const std::vector<Entry> &features() const { return features_; }
  size_t size() const { return features_.size(); }
  bool empty() const { return features_.empty(); }

  const FSValue *Find(std::string_view name) const;
  /// Throws Error if `name` is already present or empty.
  void Add(std::string name, FSValue value);
  /// Adds or replaces.
  void Set(std::string name, FSValue value);

  /// Compact display: "[type partOfSpeech=noun agr=[num=sg]]".
  std::string ToString() const;

  friend bool operator==(const FeatureStructure &a, const FeatureStructure &b);

 private:
  std::string type_;
  std::string id_;
  std::vector<Entry> features_;
};

/// Why unification failed: the slash-joined path to the clash and the two
/// values found there.  A clash of structure types is reported at
/// "<path>@type" with the two type names as symbols.
struct UnifyFailure {
  std::string path;
  FSValue left;
  FSValue right;

  std::string ToString() const;
};

class UnifyResult {
 public:
  static UnifyResult Success(FeatureStructure fs);
  static UnifyResult Failure(UnifyFailure failure);

  bool ok() const { return value_.has_value(); }
  explicit operator bool() const { return ok(); }
  const FeatureStructure &value() const;  // throws Error if !ok()
  const UnifyFailure &failure() const;    // throws Error if ok()

 private:
  std::optional<FeatureStructure> value_;
  std::optional<UnifyFailure> failure_;
};

/// Most general structure carrying the information of both inputs.  Shared
/// names unify recursively for nested structures and by equality for atoms;
/// a kind mismatch or unequal atoms is a failure value.
UnifyResult Unify(const FeatureStructure &a, const FeatureStructure &b);

/// True iff every feature path and value of `general` occurs identically in
/// `specific` (and a type on `general` matches the type of `specific`).
bool Subsumes(const FeatureStructure &general, const FeatureStructure &specific);

/// Atomic leaves as (slash-joined path, atom), depth first in feature order.
std::vector<std::pair<std::string, FSValue>> Flatten(const FeatureStructure &fs);

}  // namespace spoken

#endif  // SPOKEN_FEATSTRUCT_FEATURE_STRUCTURE_H_
