// Copyright 2026 The qgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace qgraph {

/// Base for all library errors. `code()` is a stable machine-readable tag
/// used by the CLI ("E:<code>:<detail>").
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& detail)
      : std::runtime_error("E:" + code + ":" + detail), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

struct NotInvertible : Error {
  explicit NotInvertible(const std::string& d) : Error("not_invertible", d) {}
};

struct InvalidParameter : Error {
  explicit InvalidParameter(const std::string& d) : Error("invalid_parameter", d) {}
};

struct InvalidInput : Error {
  explicit InvalidInput(const std::string& d) : Error("invalid_input", d) {}
};

struct UnsupportedModulus : Error {
  explicit UnsupportedModulus(const std::string& d) : Error("unsupported_modulus", d) {}
};

struct ResourceLimit : Error {
  explicit ResourceLimit(const std::string& d) : Error("resource_limit", d) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& d) : Error("parse", d) {}
};

// Reaching this one means a broken internal invariant, not bad user input.
struct InternalError : Error {
  explicit InternalError(const std::string& d) : Error("internal", d) {}
};

}  // namespace qgraph
