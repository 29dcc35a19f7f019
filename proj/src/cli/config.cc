// cli/config.cc

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

#include "cli/config.h"

#include <filesystem>

#include "base/text-utils.h"

namespace spoken {
namespace cli {

namespace {

std::string Resolve(const std::string &path, const std::string &base_dir) {
  std::filesystem::path p(path);
  if (p.is_absolute() || base_dir.empty()) return path;
  return (std::filesystem::path(base_dir) / p).lexically_normal().string();
}

}  // namespace

Config ParseConfig(std::string_view text, const std::string &base_dir) {
  Config config;
  int line_no = 0;
  for (const std::string &raw : Split(text, '\n')) {
    ++line_no;
    std::string line = Trim(raw);
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> words = SplitWhitespace(line);
    const std::string &key = words[0];
    auto expect = [&](size_t n) {
      if (words.size() != n + 1)
        throw ParseError("'" + key + "' takes " + std::to_string(n) + " argument" +
                             (n == 1 ? "" : "s"),
                         line_no);
    };
    if (key == "severity") {
      expect(2);
      std::optional<Severity> s = ParseSeverity(words[2]);
      if (!s)
        throw ParseError("severity must be error or warning, found '" + words[2] + "'",
                         line_no);
      config.severities.Override(words[1], *s);
    } else if (key == "conventions") {
      expect(1);
      config.conventions = Resolve(words[1], base_dir);
    } else if (key == "registry") {
      expect(1);
      config.registry = Resolve(words[1], base_dir);
    } else if (key == "tagset") {
      expect(1);
      config.tagset = Resolve(words[1], base_dir);
    } else if (key == "lang") {
      expect(1);
      config.language = words[1];
    } else if (key == "category") {
      expect(2);
      config.category_pids[words[1]] = words[2];
    } else {
      throw ParseError("unknown directive '" + key + "'", line_no);
    }
  }
  return config;
}

Config LoadConfig(const std::string &path) {
  std::string dir = std::filesystem::path(path).parent_path().string();
  try {
    return ParseConfig(ReadFile(path), dir);
  } catch (const ParseError &e) {
    throw Error(path + ": " + e.what());
  }
}

}  // namespace cli
}  // namespace spoken
