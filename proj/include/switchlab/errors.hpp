// Copyright 2026 The switchlab Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace switchlab {

/// A scenario field violates one of its invariants.
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(std::string field, const std::string& message)
      : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

/// A computation was asked to run outside the regime its formula covers.
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Inputs that cannot come from any valid state.
class InconsistencyError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed scenario file.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::size_t line, std::string field, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) +
                           (field.empty() ? std::string() : " (" + field + ")") + ": " +
                           message),
        line_(line),
        field_(std::move(field)) {}

  std::size_t line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  std::size_t line_;
  std::string field_;
};

}  // namespace switchlab
