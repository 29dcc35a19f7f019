// tests/support/fs-oracle.h

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

// Test-only helpers: a random feature-structure generator and a path-map
// oracle for unification that does not share code with Unify().

#ifndef SPOKEN_TESTS_SUPPORT_FS_ORACLE_H_
#define SPOKEN_TESTS_SUPPORT_FS_ORACLE_H_

#include <map>
#include <optional>
#include <random>
#include <string>

#include "featstruct/feature-structure.h"

namespace spoken {
namespace testing {

class FsGenerator {
 public:
  explicit FsGenerator(uint32_t seed) : rng_(seed) {}

  /// depth <= max_depth, <= max_features features per level.
  FeatureStructure Random(int max_depth = 3, int max_features = 5) {
    FeatureStructure fs(Pick(4) == 0 ? "t" + std::to_string(Pick(2)) : "");
    int n = Pick(max_features + 1);
    for (int i = 0; i < n; ++i) {
      std::string name = "f" + std::to_string(Pick(6));
      if (fs.Find(name)) continue;
      fs.Add(name, RandomValue(max_depth - 1, max_features));
    }
    return fs;
  }

  /// A structure that shares part of `base`, so unification often succeeds.
  FeatureStructure Related(const FeatureStructure &base, int max_depth = 3) {
    FeatureStructure fs(Pick(3) == 0 ? base.type() : "");
    for (const auto &[name, v] : base.features()) {
      int r = Pick(4);
      if (r == 0) continue;
      if (r == 1 && v.kind() == FSValue::Kind::kStruct && max_depth > 1)
        fs.Add(name, FSValue::Struct(Related(v.fs(), max_depth - 1)));
      else if (r == 2 && Pick(3) == 0)
        fs.Add(name, RandomValue(max_depth - 1, 3));
      else
        fs.Add(name, v);
    }
    if (Pick(2) == 0) {
      std::string name = "f" + std::to_string(Pick(8));
      if (!fs.Find(name)) fs.Add(name, RandomValue(max_depth - 1, 3));
    }
    return fs;
  }

  int Pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

 private:
  FSValue RandomValue(int depth_left, int max_features) {
    int kinds = depth_left > 0 ? 5 : 4;
    switch (Pick(kinds)) {
      case 0: return FSValue::Binary(Pick(2) == 1);
      case 1: return FSValue::Symbol(std::string(1, static_cast<char>('a' + Pick(3))));
      case 2: return FSValue::Numeric(Pick(3) * 0.5);
      case 3: return FSValue::String(Pick(2) ? "x" : "y z");
      default: return FSValue::Struct(Random(depth_left, max_features));
    }
  }

  std::mt19937 rng_;
};

/// Every node of a structure keyed by path: "struct:<type>" for nested
/// structures (the root is ""), "<kind>:<atom>" for leaves.
inline std::map<std::string, std::string> PathMap(const FeatureStructure &fs,
                                                  const std::string &prefix = "") {
  std::map<std::string, std::string> out;
  out[prefix] = "struct:" + fs.type();
  for (const auto &[name, v] : fs.features()) {
    std::string path = prefix + "/" + name;
    if (v.kind() == FSValue::Kind::kStruct) {
      auto sub = PathMap(v.fs(), path);
      out.insert(sub.begin(), sub.end());
    } else {
      out[path] = std::string(KindName(v.kind())) + ":" + v.ToString();
    }
  }
  return out;
}

/// Oracle for unification: the merged path map when the two maps agree on
/// every shared path, nullopt otherwise.  Struct nodes merge their types.
inline std::optional<std::map<std::string, std::string>> MergedPathMap(
    const FeatureStructure &a, const FeatureStructure &b) {
  auto ma = PathMap(a), mb = PathMap(b);
  std::map<std::string, std::string> merged = ma;
  for (const auto &[path, desc] : mb) {
    auto it = merged.find(path);
    if (it == merged.end()) {
      merged[path] = desc;
      continue;
    }
    const std::string &mine = it->second;
    bool s1 = mine.rfind("struct:", 0) == 0, s2 = desc.rfind("struct:", 0) == 0;
    if (s1 && s2) {
      std::string t1 = mine.substr(7), t2 = desc.substr(7);
      if (!t1.empty() && !t2.empty() && t1 != t2) return std::nullopt;
      if (t1.empty()) it->second = desc;
      continue;
    }
    if (mine != desc) return std::nullopt;
  }
  // Paths below a node that is an atom on one side cannot exist: the atom
  // check above already rejected them at the shared parent.
  return merged;
}

/// Looks up a slash-joined path (no leading slash) in a structure.
inline std::optional<FSValue> ValueAt(const FeatureStructure &fs,
                                      const std::string &path) {
  const FeatureStructure *cur = &fs;
  size_t start = 0;
  while (true) {
    size_t slash = path.find('/', start);
    std::string name = path.substr(start, slash == std::string::npos
                                              ? std::string::npos
                                              : slash - start);
    const FSValue *v = cur->Find(name);
    if (!v) return std::nullopt;
    if (slash == std::string::npos) return *v;
    if (v->kind() != FSValue::Kind::kStruct) return std::nullopt;
    cur = &v->fs();
    start = slash + 1;
  }
}

}  // namespace testing
}  // namespace spoken

#endif  // SPOKEN_TESTS_SUPPORT_FS_ORACLE_H_
