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

#include "metasrl/errors.h"

#include <algorithm>

namespace metasrl {

SourceLocation SourceLocation::At(std::string_view text, size_t offset) {
  offset = std::min(offset, text.size());
  SourceLocation loc;
  loc.offset = offset;
  loc.line = 1;
  size_t line_start = 0;
  for (size_t i = 0; i < offset; ++i) {
    if (text[i] == '\n') {
      ++loc.line;
      line_start = i + 1;
    }
  }
  loc.column = offset - line_start + 1;
  return loc;
}

std::string SourceLocation::ToString() const {
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

ParseError::ParseError(const std::string &message, SourceLocation location)
    : std::runtime_error(location.ToString() + ": " + message),
      location_(location),
      detail_(message) {}

}  // namespace metasrl
