/*
 * Copyright 2026 The ponplan Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ponplan {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition or type invariant was violated by caller-supplied input.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Malformed catalog text. Line and column are 1-based; column counts
// comma-separated fields.
class CatalogParseError : public Error {
 public:
  CatalogParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Lookup of a technology name absent from the catalog.
class UnknownTechnology : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

}  // namespace ponplan
