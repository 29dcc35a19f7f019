// cli/commands.h

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

#ifndef SPOKEN_CLI_COMMANDS_H_
#define SPOKEN_CLI_COMMANDS_H_

#include <ostream>
#include <string>
#include <vector>

namespace spoken {
namespace cli {

enum ExitStatus {
  kExitOk = 0,
  kExitErrors = 1,   // validation errors present
  kExitFailure = 2,  // usage, input or output failure
};

/// Runs one invocation of the command-line tool.  `args` excludes the
/// program name.  Reports and converted documents go to `out` (unless an
/// output file is named), diagnostics to `err`.
///
///   validate FILE... [--registry R] [--tagset T] [--lang L]
///                    [--format text|tsv] [--config C] [--jobs N]
///   convert FILE [--from tei|tier] [--to tei|tier] [-o OUT]
///                [--materialize-timeline] [--conventions RULES] [--config C]
///   overlaps FILE [--from tei|tier] [--config C]
///   tag expand --lib LIB TAG
///   tag list --lib LIB
int RunCommand(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace cli
}  // namespace spoken

#endif  // SPOKEN_CLI_COMMANDS_H_
