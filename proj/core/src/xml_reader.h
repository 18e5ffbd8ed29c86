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

// Element-only XML reader. Enough for the graph and catalogue documents:
// elements, attributes, comments, an optional declaration, and
// whitespace between elements. Every element and attribute remembers
// where it started so schema errors can point at it.

#ifndef METASRL_SRC_XML_READER_H_
#define METASRL_SRC_XML_READER_H_

#include <string>
#include <string_view>
#include <vector>

#include "metasrl/errors.h"

namespace metasrl::xml {

struct Attribute {
  std::string name;
  std::string value;
  SourceLocation location;
};

struct Element {
  std::string name;
  std::vector<Attribute> attributes;
  std::vector<Element> children;
  SourceLocation location;

  const Attribute *Find(std::string_view attr) const;
};

// Throws ParseError for malformed markup and SchemaError for character
// data between elements.
Element Parse(std::string_view text);

// Escapes & < > " ' and tab/newline/CR for use inside a double-quoted
// attribute. Throws std::invalid_argument on other control characters,
// which XML 1.0 cannot carry.
std::string EscapeAttribute(std::string_view value);

}  // namespace metasrl::xml

#endif  // METASRL_SRC_XML_READER_H_
