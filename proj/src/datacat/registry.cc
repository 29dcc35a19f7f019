// datacat/registry.cc

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

#include "datacat/registry.h"

#include <algorithm>
#include <set>

#include "base/text-utils.h"

namespace spoken {

const char *KindName(DataCategory::Kind kind) {
  return kind == DataCategory::Kind::kComplex ? "complex" : "simple";
}

namespace {

bool Contains(const std::vector<std::string> &v, std::string_view x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

}  // namespace

void Registry::Register(DataCategory cat) {
  if (cat.pid.empty())
    throw RegistryError(RegistryError::Kind::kUnknownPid, "", "category needs a pid");
  if (pid_index_.count(cat.pid))
    throw RegistryError(RegistryError::Kind::kDuplicatePid, cat.pid,
                        "duplicate pid " + cat.pid);
  if (cat.kind == DataCategory::Kind::kSimple &&
      (!cat.domain.empty() || !cat.restrictions.empty()))
    throw RegistryError(RegistryError::Kind::kSimpleWithDomain, cat.pid,
                        "simple category " + cat.pid + " cannot have a conceptual domain");
  for (const auto &[lang, values] : cat.restrictions) {
    for (const auto &v : values) {
      if (!Contains(cat.domain, v))
        throw RegistryError(RegistryError::Kind::kNotSubset, cat.pid,
                            "restriction for '" + lang + "' on " + cat.pid + " contains " +
                                v + ", which is outside the conceptual domain");
    }
  }
  // Walk up from the new category's parent; reaching the new pid means the
  // link would close a cycle.
  std::set<std::string> seen;
  for (std::string p = cat.broader; !p.empty();) {
    if (p == cat.pid)
      throw RegistryError(RegistryError::Kind::kBroaderCycle, cat.pid,
                          "broader link of " + cat.pid + " creates a cycle");
    if (!seen.insert(p).second) break;
    const DataCategory *up = Find(p);
    if (!up) break;
    p = up->broader;
  }
  size_t index = categories_.size();
  pid_index_.emplace(cat.pid, index);
  if (!cat.name.empty()) {
    if (name_index_.count(cat.name)) {
      if (!Contains(collisions_, cat.name)) collisions_.push_back(cat.name);
    } else {
      name_index_.emplace(cat.name, index);
    }
  }
  categories_.push_back(std::move(cat));
}

const DataCategory *Registry::Find(std::string_view pid) const {
  auto it = pid_index_.find(pid);
  return it == pid_index_.end() ? nullptr : &categories_[it->second];
}

const DataCategory &Registry::Get(std::string_view pid) const {
  const DataCategory *c = Find(pid);
  if (!c)
    throw RegistryError(RegistryError::Kind::kUnknownPid, std::string(pid),
                        "unknown data category " + std::string(pid));
  return *c;
}

const DataCategory *Registry::FindByName(std::string_view name) const {
  auto it = name_index_.find(name);
  return it == name_index_.end() ? nullptr : &categories_[it->second];
}

bool IsSubcategory(const Registry &reg, std::string_view a, std::string_view b) {
  reg.Get(b);
  // Cycles are rejected at registration, so this walk terminates.
  for (const DataCategory *c = &reg.Get(a); c;) {
    if (c->pid == b) return true;
    if (c->broader.empty()) return false;
    c = reg.Find(c->broader);
  }
  return false;
}

const char *VerdictName(ValueVerdict v) {
  switch (v) {
    case ValueVerdict::kOk: return "ok";
    case ValueVerdict::kOutOfDomain: return "outOfDomain";
    case ValueVerdict::kLanguageRestricted: return "languageRestricted";
  }
  return "?";
}

ValueVerdict ValidateValue(const Registry &reg, std::string_view feature,
                           std::string_view value,
                           std::optional<std::string_view> language) {
  const DataCategory &f = reg.Get(feature);
  if (f.kind != DataCategory::Kind::kComplex)
    throw RegistryError(RegistryError::Kind::kNotComplex, f.pid,
                        f.pid + " is not a complex category");
  reg.Get(value);
  if (!f.domain.empty() && !Contains(f.domain, value)) return ValueVerdict::kOutOfDomain;
  if (language) {
    auto it = f.restrictions.find(std::string(*language));
    if (it != f.restrictions.end() && !Contains(it->second, value))
      return ValueVerdict::kLanguageRestricted;
  }
  return ValueVerdict::kOk;
}

const char *ReasonName(EquivalenceReason r) {
  switch (r) {
    case EquivalenceReason::kEquivalent: return "equivalent";
    case EquivalenceReason::kUnmappedName: return "unmappedName";
    case EquivalenceReason::kFeatureDiffers: return "featureDiffers";
    case EquivalenceReason::kValueDiffers: return "valueDiffers";
  }
  return "?";
}

Equivalence Equivalent(const Registry &, const Qualifier &q1, const Qualifier &q2) {
  auto pid = [](const CategoryRef &r) { return r.kind == CategoryRef::Kind::kPid; };
  if (!pid(q1.feature) || !pid(q1.value) || !pid(q2.feature) || !pid(q2.value))
    return {false, EquivalenceReason::kUnmappedName};
  if (q1.feature.text != q2.feature.text)
    return {false, EquivalenceReason::kFeatureDiffers};
  if (q1.value.text != q2.value.text) return {false, EquivalenceReason::kValueDiffers};
  return {true, EquivalenceReason::kEquivalent};
}

const char *ComparabilityName(Comparability c) {
  switch (c) {
    case Comparability::kEqual: return "equal";
    case Comparability::kQ1BroaderValue: return "q1BroaderValue";
    case Comparability::kQ2BroaderValue: return "q2BroaderValue";
    case Comparability::kDisjoint: return "disjoint";
  }
  return "?";
}

ComparisonResult Comparable(const Registry &reg, const Qualifier &q1,
                            const Qualifier &q2) {
  Equivalence e = Equivalent(reg, q1, q2);
  if (e.reason == EquivalenceReason::kUnmappedName)
    return {Comparability::kDisjoint, ReasonName(e.reason)};
  if (e.reason == EquivalenceReason::kFeatureDiffers)
    return {Comparability::kDisjoint, ReasonName(e.reason)};
  const std::string &v1 = q1.value.text, &v2 = q2.value.text;
  if (v1 == v2) return {Comparability::kEqual, ""};
  if (!reg.Find(v1) || !reg.Find(v2))
    return {Comparability::kDisjoint, "unknownValue"};
  if (IsSubcategory(reg, v2, v1)) return {Comparability::kQ1BroaderValue, ""};
  if (IsSubcategory(reg, v1, v2)) return {Comparability::kQ2BroaderValue, ""};
  return {Comparability::kDisjoint, "unrelatedValues"};
}

namespace {

std::vector<std::string> ParseList(const std::string &field) {
  if (field == "-") return {};
  std::vector<std::string> out;
  for (auto &v : Split(field, ',')) {
    std::string t = Trim(v);
    if (!t.empty()) out.push_back(t);
  }
  return out;
}

std::string FormatList(const std::vector<std::string> &v) {
  return v.empty() ? "-" : Join(v, ",");
}

}  // namespace

std::string FormatCategoryLine(const DataCategory &cat) {
  std::string line = cat.pid + "\t" + KindName(cat.kind) + "\t" + cat.name + "\t" +
                     (cat.broader.empty() ? "-" : cat.broader) + "\t" +
                     FormatList(cat.domain);
  if (!cat.restrictions.empty()) {
    std::vector<std::string> parts;
    for (const auto &[lang, values] : cat.restrictions)
      parts.push_back(lang + "=" + Join(values, ","));
    line += "\t" + Join(parts, ";");
  }
  return line;
}

RegistryFile ParseRegistry(std::string_view text) {
  RegistryFile file;
  file.final_newline = text.empty() || text.back() == '\n';
  std::vector<std::string> lines = Split(text, '\n');
  if (!text.empty() && text.back() == '\n') lines.pop_back();
  int line_no = 0;
  for (const std::string &raw : lines) {
    ++line_no;
    std::string line = raw;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (IsBlank(line) || Trim(line)[0] == '#') {
      file.lines.push_back({-1, raw});
      continue;
    }
    std::vector<std::string> fields = Split(line, '\t');
    if (fields.size() != 5 && fields.size() != 6)
      throw ParseError("expected 5 or 6 tab-separated fields, found " +
                           std::to_string(fields.size()),
                       line_no);
    DataCategory cat;
    cat.pid = Trim(fields[0]);
    if (cat.pid.empty()) throw ParseError("empty pid", line_no);
    std::string kind = Trim(fields[1]);
    if (kind == "complex") cat.kind = DataCategory::Kind::kComplex;
    else if (kind == "simple") cat.kind = DataCategory::Kind::kSimple;
    else throw ParseError("kind must be 'complex' or 'simple', found '" + kind + "'", line_no);
    cat.name = Trim(fields[2]);
    std::string broader = Trim(fields[3]);
    if (broader != "-") cat.broader = broader;
    cat.domain = ParseList(Trim(fields[4]));
    if (fields.size() == 6 && !IsBlank(fields[5]) && Trim(fields[5]) != "-") {
      for (const auto &part : Split(fields[5], ';')) {
        if (IsBlank(part)) continue;
        size_t eq = part.find('=');
        if (eq == std::string::npos)
          throw ParseError("restriction '" + Trim(part) + "' lacks '='", line_no);
        std::string lang = Trim(part.substr(0, eq));
        if (lang.empty()) throw ParseError("restriction without a language", line_no);
        if (cat.restrictions.count(lang))
          throw ParseError("two restrictions for language '" + lang + "'", line_no);
        cat.restrictions[lang] = ParseList(Trim(part.substr(eq + 1)));
      }
    }
    try {
      file.registry.Register(cat);
    } catch (const RegistryError &e) {
      throw RegistryError(e.kind(), e.pid(),
                          "line " + std::to_string(line_no) + ": " + e.what());
    }
    file.lines.push_back({static_cast<int>(file.registry.size()) - 1, raw});
  }
  return file;
}

std::string SerializeRegistry(const RegistryFile &file) {
  std::string out;
  std::vector<bool> written(file.registry.size(), false);
  for (size_t i = 0; i < file.lines.size(); ++i) {
    const auto &line = file.lines[i];
    if (line.category >= 0) written[line.category] = true;
    out += line.text;
    if (i + 1 < file.lines.size() || file.final_newline) out += '\n';
  }
  for (size_t i = 0; i < written.size(); ++i) {
    if (written[i]) continue;
    if (!out.empty() && out.back() != '\n') out += '\n';
    out += FormatCategoryLine(file.registry.categories()[i]) + '\n';
  }
  return out;
}

}  // namespace spoken
