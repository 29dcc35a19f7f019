// datacat/registry.h

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

#ifndef SPOKEN_DATACAT_REGISTRY_H_
#define SPOKEN_DATACAT_REGISTRY_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "base/error.h"
#include "core/annotation.h"

namespace spoken {

/// A registered data category.  Complex categories are place-holders
/// (features) with a conceptual domain of simple categories (values).
struct DataCategory {
  enum class Kind { kComplex, kSimple };
  std::string pid;
  Kind kind = Kind::kSimple;
  std::string name;
  std::string broader;  // empty when none
  std::vector<std::string> domain;
  std::map<std::string, std::vector<std::string>> restrictions;  // language -> values
  std::string documentation;

  bool operator==(const DataCategory &) const = default;
};

const char *KindName(DataCategory::Kind kind);

class RegistryError : public Error {
 public:
  enum class Kind {
    kDuplicatePid,
    kBroaderCycle,
    kNotSubset,
    kSimpleWithDomain,
    kUnknownPid,
    kNotComplex,
  };
  RegistryError(Kind kind, std::string pid, const std::string &what)
      : Error(what), kind_(kind), pid_(std::move(pid)) {}
  Kind kind() const { return kind_; }
  const std::string &pid() const { return pid_; }

 private:
  Kind kind_;
  std::string pid_;
};

/// Flat registry of data categories with a single broader link each.
class Registry {
 public:
  /// Adds `cat`.  Throws RegistryError on a duplicate pid, a broader cycle,
  /// a restriction outside the domain, or a simple category with a domain.
  /// A broader pid that is not registered yet is allowed.
  void Register(DataCategory cat);

  const DataCategory *Find(std::string_view pid) const;
  /// Throws RegistryError(kUnknownPid).
  const DataCategory &Get(std::string_view pid) const;
  /// First category registered under `name`; nullptr when none.
  const DataCategory *FindByName(std::string_view name) const;
  /// Names registered by more than one pid.
  const std::vector<std::string> &name_collisions() const { return collisions_; }

  const std::vector<DataCategory> &categories() const { return categories_; }
  size_t size() const { return categories_.size(); }

 private:
  std::vector<DataCategory> categories_;
  std::map<std::string, size_t, std::less<>> pid_index_;
  std::map<std::string, size_t, std::less<>> name_index_;
  std::vector<std::string> collisions_;
};

/// True iff `b` is reachable from `a` through broader links (reflexive).
bool IsSubcategory(const Registry &reg, std::string_view a, std::string_view b);

enum class ValueVerdict { kOk, kOutOfDomain, kLanguageRestricted };

const char *VerdictName(ValueVerdict v);

/// Throws RegistryError for an unknown pid or a feature that is not complex.
ValueVerdict ValidateValue(const Registry &reg, std::string_view feature,
                           std::string_view value,
                           std::optional<std::string_view> language = {});

enum class EquivalenceReason {
  kEquivalent,
  kUnmappedName,  // a side uses a plain name instead of a pid
  kFeatureDiffers,
  kValueDiffers,
};

const char *ReasonName(EquivalenceReason r);

struct Equivalence {
  bool equivalent = false;
  EquivalenceReason reason = EquivalenceReason::kEquivalent;
};

Equivalence Equivalent(const Registry &reg, const Qualifier &q1, const Qualifier &q2);

enum class Comparability { kEqual, kQ1BroaderValue, kQ2BroaderValue, kDisjoint };

const char *ComparabilityName(Comparability c);

struct ComparisonResult {
  Comparability comparability = Comparability::kDisjoint;
  std::string reason;  // set for disjoint results
};

ComparisonResult Comparable(const Registry &reg, const Qualifier &q1,
                            const Qualifier &q2);

/// Registry file: one category per TAB-separated line,
/// pid, kind, name, broader or "-", comma-separated domain or "-", and an
/// optional "lang=v1,v2;lang=..." restriction field.  '#' starts a comment
/// line.  Layout is kept so that Serialize(Parse(text)) == text.
struct RegistryFile {
  Registry registry;
  // One entry per input line: either a category index or the line verbatim.
  struct Line {
    int category = -1;
    std::string text;
  };
  std::vector<Line> lines;
  bool final_newline = true;
};

/// Throws ParseError with the line number, or RegistryError with the line
/// prefixed to the message.
RegistryFile ParseRegistry(std::string_view text);
std::string SerializeRegistry(const RegistryFile &file);
/// Canonical one-line record of a category.
std::string FormatCategoryLine(const DataCategory &cat);

}  // namespace spoken

#endif  // SPOKEN_DATACAT_REGISTRY_H_
