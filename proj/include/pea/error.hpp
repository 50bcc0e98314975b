// Copyright 2026 The PEA Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace pea {

// Base of every error the library throws. `kind()` is a stable, machine
// readable tag; the CLI prints it as the first field of its error line.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class UnknownLabelError : public Error {
 public:
  explicit UnknownLabelError(const std::string& label)
      : Error("unknown-label", "unknown emotion label '" + label + "'"),
        label_(label) {}
  const std::string& label() const noexcept { return label_; }

 private:
  std::string label_;
};

class EmptySetError : public Error {
 public:
  explicit EmptySetError(const std::string& which)
      : Error("empty-set", "annotation set '" + which + "' is empty") {}
};

// Malformed or inconsistent input data (duplicate records, bad JSON, ...).
class DataError : public Error {
 public:
  explicit DataError(const std::string& what) : Error("data", what) {}
};

// A violated operation precondition (argument out of range and similar).
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what)
      : Error("precondition", what) {}
};

// Warnings collected by operations that degrade gracefully instead of
// failing. Callers decide whether to print or ignore them.
using Warnings = std::vector<std::string>;

}  // namespace pea
