// base/error.h

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

#ifndef SPOKEN_BASE_ERROR_H_
#define SPOKEN_BASE_ERROR_H_

#include <stdexcept>
#include <string>
#include <vector>

namespace spoken {

/// Base class of every exception thrown by the toolkit.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string &what) : std::runtime_error(what) {}
};

/// Input could not be read as the expected format.  `line` is 1-based, or 0
/// when no position is known.
class ParseError : public Error {
 public:
  ParseError(const std::string &what, int line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// An identifier did not resolve.
class ReferenceError : public Error {
 public:
  ReferenceError(const std::string &what, std::string id)
      : Error(what + ": " + id), id_(std::move(id)) {}
  const std::string &id() const { return id_; }

 private:
  std::string id_;
};

/// Two values cannot be compared (e.g. intervals on different timelines).
class IncomparableError : public Error {
 public:
  explicit IncomparableError(const std::string &what) : Error(what) {}
};

/// A non-fatal observation made while reading or transforming a document.
/// Validation turns these into issues with a severity.
struct Finding {
  std::string code;
  std::string location;
  std::string message;

  bool operator==(const Finding &) const = default;
};

using Findings = std::vector<Finding>;

}  // namespace spoken

#endif  // SPOKEN_BASE_ERROR_H_
