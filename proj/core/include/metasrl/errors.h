// Copyright 2026 The MetaSRL Toolkit Authors.
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

#ifndef METASRL_ERRORS_H_
#define METASRL_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace metasrl {

// Position in an input text. Lines and columns are 1-based, the byte
// offset 0-based.
struct SourceLocation {
  size_t line = 0;
  size_t column = 0;
  size_t offset = 0;

  static SourceLocation At(std::string_view text, size_t offset);

  std::string ToString() const;
};

// Malformed input. what() carries the location prefix.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string &message, SourceLocation location);

  const SourceLocation &location() const { return location_; }
  const std::string &detail() const { return detail_; }

 private:
  SourceLocation location_;
  std::string detail_;
};

// Well-formed input that breaks the document grammar.
class SchemaError : public ParseError {
 public:
  using ParseError::ParseError;
};

// Input that parsed but that the converter cannot map.
class ConversionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace metasrl

#endif  // METASRL_ERRORS_H_
