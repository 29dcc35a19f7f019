// cli/config.h

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

#ifndef SPOKEN_CLI_CONFIG_H_
#define SPOKEN_CLI_CONFIG_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "validate/issue.h"

namespace spoken {
namespace cli {

/// Settings read from a configuration file.  One directive per line:
///
///   severity CODE error|warning
///   conventions PATH
///   category NAME PID
///   registry PATH
///   tagset PATH
///   lang CODE
///
/// Blank lines and lines starting with '#' are skipped.  Relative paths are
/// taken relative to the directory of the configuration file.
struct Config {
  SeverityPolicy severities;
  std::optional<std::string> conventions;
  std::optional<std::string> registry;
  std::optional<std::string> tagset;
  std::optional<std::string> language;
  std::map<std::string, std::string> category_pids;
};

/// Throws ParseError with the line number.
Config ParseConfig(std::string_view text, const std::string &base_dir = {});
/// Reads and parses `path`; throws Error.
Config LoadConfig(const std::string &path);

}  // namespace cli
}  // namespace spoken

#endif  // SPOKEN_CLI_CONFIG_H_
