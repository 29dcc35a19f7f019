// cli/commands.cc

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

#include "cli/commands.h"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <optional>
#include <thread>

#include "CLI11.hpp"
#include "base/text-utils.h"
#include "cli/config.h"
#include "core/annotation-ops.h"
#include "datacat/registry.h"
#include "featstruct/tagset.h"
#include "tei/conventions.h"
#include "tei/fs-markup.h"
#include "tei/reader.h"
#include "tei/writer.h"
#include "tier/convert.h"
#include "validate/checks.h"

namespace spoken {
namespace cli {

namespace {

enum class Format { kTei, kTier };

const std::map<std::string, Format> kFormats = {{"tei", Format::kTei},
                                                {"tier", Format::kTier}};

Format FormatOf(const std::string &path, const std::optional<Format> &given) {
  if (given) return *given;
  return path.ends_with(".tier") ? Format::kTier : Format::kTei;
}

struct Loaded {
  Document doc;
  Findings warnings;
};

Loaded LoadDocument(const std::string &path, Format format, const Config &config) {
  std::string text = ReadFile(path);
  try {
    if (format == Format::kTier) {
      ToCoreOptions options;
      options.category_pids = config.category_pids;
      return {ToCore(ParseTier(text).document, options), {}};
    }
    tei::ParseResult parsed = tei::ParseDocument(text);
    return {std::move(parsed.document), std::move(parsed.warnings)};
  } catch (const ParseError &e) {
    throw Error(path + ": " + e.what());
  }
}

Config ConfigFrom(const std::string &path) { return path.empty() ? Config{} : LoadConfig(path); }

void WriteOutput(const std::string &path, const std::string &bytes, std::ostream &out) {
  if (path.empty()) {
    out << bytes;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error("cannot write '" + path + "'");
  file << bytes;
  if (!file.flush()) throw Error("cannot write '" + path + "'");
}

void PrintFindings(const Findings &findings, std::ostream &err) {
  for (const Finding &f : findings)
    err << "warning " << f.code << " " << f.location << ": " << f.message << "\n";
}

// ---- validate

struct ValidateArgs {
  std::vector<std::string> files;
  std::string registry, tagset, language, format = "text", config;
  std::optional<Format> from;
  int jobs = 1;
};

struct FileOutcome {
  std::string out;
  std::string err;
  int status = kExitOk;
};

FileOutcome ValidateFile(const std::string &path, const ValidateArgs &args,
                         const Config &config, const ValidateOptions &options) {
  FileOutcome outcome;
  try {
    Loaded loaded = LoadDocument(path, FormatOf(path, args.from), config);
    Report report = ValidateAll(loaded.doc, options, loaded.warnings);
    // Several files: every line names its file.
    bool several = args.files.size() > 1;
    if (args.format == "tsv") {
      outcome.out = FormatTsv(report);
      if (several) {
        std::string prefixed;
        for (const std::string &line : Split(outcome.out, '\n'))
          if (!line.empty()) prefixed += path + "\t" + line + "\n";
        outcome.out = prefixed;
      }
    } else {
      outcome.out = FormatText(report, several ? path : "");
    }
    outcome.status = report.errors() > 0 ? kExitErrors : kExitOk;
  } catch (const Error &e) {
    outcome.err = std::string("error: ") + e.what() + "\n";
    outcome.status = kExitFailure;
  }
  return outcome;
}

int RunValidate(const ValidateArgs &args, std::ostream &out, std::ostream &err) {
  Config config = ConfigFrom(args.config);
  std::string registry_path = !args.registry.empty() ? args.registry : config.registry.value_or("");
  std::string tagset_path = !args.tagset.empty() ? args.tagset : config.tagset.value_or("");

  std::optional<Registry> registry;
  if (!registry_path.empty()) {
    try {
      registry = ParseRegistry(ReadFile(registry_path)).registry;
    } catch (const ParseError &e) {
      throw Error(registry_path + ": " + e.what());
    }
  }
  std::optional<tei::TagsetFile> tagset;
  if (!tagset_path.empty()) {
    try {
      tagset = tei::ReadTagsetFile(ReadFile(tagset_path));
    } catch (const ParseError &e) {
      throw Error(tagset_path + ": " + e.what());
    }
  }

  ValidateOptions options;
  options.registry = registry ? &*registry : nullptr;
  options.tagset = tagset ? &*tagset : nullptr;
  if (!args.language.empty())
    options.language = args.language;
  else
    options.language = config.language;
  options.severities = config.severities;

  // Each file is checked on its own; results are printed in argument order.
  std::vector<FileOutcome> outcomes(args.files.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < args.files.size(); i = next++)
      outcomes[i] = ValidateFile(args.files[i], args, config, options);
  };
  size_t threads = std::min<size_t>(std::max(args.jobs, 1), args.files.size());
  std::vector<std::thread> pool;
  for (size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto &t : pool) t.join();

  int status = kExitOk;
  for (const FileOutcome &o : outcomes) {
    out << o.out;
    err << o.err;
    status = std::max(status, o.status);
  }
  return status;
}

// ---- convert

struct ConvertArgs {
  std::string input, output, conventions, config;
  std::optional<Format> from;
  std::optional<Format> to;
  bool materialize = false;
};

int RunConvert(const ConvertArgs &args, std::ostream &out, std::ostream &err) {
  Config config = ConfigFrom(args.config);
  Format from = FormatOf(args.input, args.from);
  Format to = args.to.value_or(from == Format::kTier ? Format::kTei : Format::kTier);

  Loaded loaded = LoadDocument(args.input, from, config);
  PrintFindings(loaded.warnings, err);
  Document doc = std::move(loaded.doc);

  std::string rules_path =
      !args.conventions.empty() ? args.conventions : config.conventions.value_or("");
  if (!rules_path.empty()) {
    tei::ConventionRules rules;
    try {
      rules = tei::ParseRules(ReadFile(rules_path));
    } catch (const ParseError &e) {
      throw Error(rules_path + ": " + e.what());
    }
    Findings findings;
    doc = tei::PromoteConventions(doc, rules, &findings);
    PrintFindings(findings, err);
  }
  if (args.materialize) doc = SequenceImplicit(doc);

  std::string bytes;
  if (to == Format::kTei) {
    tei::SerializeOptions options;
    options.materialize_timeline = args.materialize;
    bytes = tei::SerializeDocument(doc, options);
  } else {
    FromCoreResult result = FromCore(doc);
    for (const ResidueItem &r : result.residue)
      err << "residue " << r.id << ": " << r.reason << "\n";
    bytes = SerializeTier(result.document);
  }
  WriteOutput(args.output, bytes, out);
  return kExitOk;
}

// ---- overlaps

struct OverlapsArgs {
  std::string input, config;
  std::optional<Format> from;
};

int RunOverlaps(const OverlapsArgs &args, std::ostream &out, std::ostream &err) {
  Config config = ConfigFrom(args.config);
  Loaded loaded = LoadDocument(args.input, FormatOf(args.input, args.from), config);
  PrintFindings(loaded.warnings, err);
  OverlapReport report = OverlapsReport(SequenceImplicit(loaded.doc));
  for (const OverlapPair &p : report.pairs)
    out << p.first << "\t" << p.second << "\t" << p.shared.start << "\t" << p.shared.end
        << "\t" << RelationName(p.relation) << "\n";
  if (report.skipped > 0)
    err << report.skipped << " annotation" << (report.skipped == 1 ? "" : "s")
        << " without a time interval skipped\n";
  return kExitOk;
}

// ---- tag

TagsetLibrary LoadTagset(const std::string &path) {
  try {
    return tei::BuildTagset(tei::ReadTagsetFile(ReadFile(path)));
  } catch (const ParseError &e) {
    throw Error(path + ": " + e.what());
  }
}

int RunTagExpand(const std::string &lib_path, const std::string &tag, std::ostream &out) {
  TagsetLibrary lib = LoadTagset(lib_path);
  if (!lib.FindTag(StripHash(tag))) throw Error("unknown tag '" + tag + "' in " + lib_path);
  for (const auto &[path, value] : Flatten(ResolveTag(lib, tag)))
    out << path << "=" << value.ToString() << "\n";
  return kExitOk;
}

int RunTagList(const std::string &lib_path, std::ostream &out) {
  TagsetLibrary lib = LoadTagset(lib_path);
  for (const auto &tag : lib.tags()) out << tag.id << "\n";
  return kExitOk;
}

}  // namespace

int RunCommand(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Tools for annotated spoken-language corpora", "spokenkit"};
  app.require_subcommand(1);
  auto format_check = CLI::CheckedTransformer(kFormats, CLI::ignore_case);

  ValidateArgs validate;
  CLI::App *validate_cmd = app.add_subcommand("validate", "Check documents and report issues");
  validate_cmd->add_option("files", validate.files, "Documents to check")->required();
  validate_cmd->add_option("--registry", validate.registry, "Data category registry");
  validate_cmd->add_option("--tagset", validate.tagset, "Markup file with tag libraries");
  validate_cmd->add_option("--lang", validate.language, "Language for value restrictions");
  validate_cmd->add_option("--format", validate.format, "Report format")
      ->check(CLI::IsMember({"text", "tsv"}));
  validate_cmd->add_option("--from", validate.from, "Input format")->transform(format_check);
  validate_cmd->add_option("--config", validate.config, "Configuration file");
  validate_cmd->add_option("--jobs,-j", validate.jobs, "Files checked in parallel")
      ->check(CLI::PositiveNumber);

  ConvertArgs convert;
  CLI::App *convert_cmd = app.add_subcommand("convert", "Convert between TEI and tiers");
  convert_cmd->add_option("input", convert.input, "Input document")->required();
  convert_cmd->add_option("--from", convert.from, "Input format")->transform(format_check);
  convert_cmd->add_option("--to", convert.to, "Output format")->transform(format_check);
  convert_cmd->add_option("-o,--output", convert.output, "Output file (default: stdout)");
  convert_cmd->add_flag("--materialize-timeline", convert.materialize,
                        "Sequence unanchored events and write their time points");
  convert_cmd->add_option("--conventions", convert.conventions,
                          "Rules promoting transcription conventions to markup");
  convert_cmd->add_option("--config", convert.config, "Configuration file");

  OverlapsArgs overlaps;
  CLI::App *overlaps_cmd = app.add_subcommand("overlaps", "List overlapping annotations");
  overlaps_cmd->add_option("input", overlaps.input, "Input document")->required();
  overlaps_cmd->add_option("--from", overlaps.from, "Input format")->transform(format_check);
  overlaps_cmd->add_option("--config", overlaps.config, "Configuration file");

  std::string lib_path, tag_id;
  CLI::App *tag_cmd = app.add_subcommand("tag", "Tagset tools");
  tag_cmd->require_subcommand(1);
  CLI::App *expand_cmd = tag_cmd->add_subcommand("expand", "Print the features of a tag");
  expand_cmd->add_option("--lib", lib_path, "Markup file with tag libraries")->required();
  expand_cmd->add_option("tag", tag_id, "Tag id")->required();
  CLI::App *list_cmd = tag_cmd->add_subcommand("list", "Print every tag id");
  list_cmd->add_option("--lib", lib_path, "Markup file with tag libraries")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitFailure;
  }

  try {
    if (*validate_cmd) return RunValidate(validate, out, err);
    if (*convert_cmd) return RunConvert(convert, out, err);
    if (*overlaps_cmd) return RunOverlaps(overlaps, out, err);
    if (*expand_cmd) return RunTagExpand(lib_path, tag_id, out);
    if (*list_cmd) return RunTagList(lib_path, out);
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitFailure;
}

}  // namespace cli
}  // namespace spoken
