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


// UCCA passages in a line-based format, one record per line:
//   unit <id>
//   term <id> <text...>
//   edge <parent> <child> <category>
//   root <id>
// '#' starts a comment line. Records may appear in any order.

#ifndef METASRL_UCCA_H_
#define METASRL_UCCA_H_

#include <string>
#include <string_view>
#include <vector>

#include "metasrl/errors.h"
#include "metasrl/graph.h"

namespace metasrl {

struct UccaNode {
  enum class Kind { kUnit, kTerminal };

  std::string id;
  Kind kind = Kind::kUnit;
  std::string text;  // terminals only
};

struct UccaEdge {
  std::string parent;
  std::string child;
  std::string category;
};

struct UccaPassage {
  std::vector<UccaNode> nodes;  // declaration order
  std::vector<UccaEdge> edges;  // declaration order
  std::string root;
};

// Throws ParseError on malformed records, duplicate ids, edges to missing
// ids, terminals with children, a missing or terminal root, and non-root
// nodes without a parent.
UccaPassage ParseUcca(std::string_view text);

// Splits a file into passages on lines reading "passage" (optionally
// followed by a name); a file without such lines is one passage.
std::vector<UccaPassage> ParseUccaPassages(std::string_view text);

// Units become "UCCA.Unit" concepts, terminals "UCCA.Terminal" entities
// valued by their text, and each edge a role named by its category.
// Repeated categories under one unit become X[1..k] in document order.
SemanticGraph UccaToGraph(const UccaPassage &passage);

}  // namespace metasrl

#endif  // METASRL_UCCA_H_
