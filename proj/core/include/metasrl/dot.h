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

#ifndef METASRL_DOT_H_
#define METASRL_DOT_H_

#include <string>

#include "metasrl/graph.h"

namespace metasrl {

// Renders a graph as a GraphViz digraph, top to bottom:
//   concepts  -> shape=box, label = name
//   entities  -> shape=ellipse, label = classes (one per line) above value
//   omitted   -> shape=circle, style=filled, fillcolor=gray, label=""
//   edges     -> label = role name or name[index]
// One node statement per line, then one edge statement per line, both in
// the same order as ToXml. Throws InvalidGraphError if the graph fails lax
// validation.
std::string ToDot(const SemanticGraph &graph);

}  // namespace metasrl

#endif  // METASRL_DOT_H_
