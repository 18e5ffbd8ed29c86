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

#include "metasrl/dot.h"

#include <map>

#include "metasrl/validation.h"

namespace metasrl {

namespace {

// Double-quoted DOT string. Newlines become \n line breaks.
std::string Quote(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': break;
      default: out += c;
    }
  }
  out += '"';
  return out;
}

std::string EntityLabel(const EntityNode &entity) {
  std::string out = "\"";
  for (const std::string &cls : entity.classes) {
    out += Quote(cls).substr(1);
    out.pop_back();
    out += "\\n";
  }
  out += Quote(entity.value).substr(1);
  return out;
}

}  // namespace

std::string ToDot(const SemanticGraph &graph) {
  std::vector<Violation> violations = Validate(graph);
  if (!violations.empty()) throw InvalidGraphError(std::move(violations));

  std::string out = "digraph semanticgraph {\n  rankdir=TB;\n";
  for (const auto &[id, node] : graph.nodes()) {
    out += "  " + Quote(id.str()) + " [";
    if (const auto *c = std::get_if<ConceptNode>(&node)) {
      out += "shape=box, label=" + Quote(c->name);
    } else if (const auto *e = std::get_if<EntityNode>(&node)) {
      out += "shape=ellipse, label=" + EntityLabel(*e);
    } else {
      out += "shape=circle, style=filled, fillcolor=gray, label=\"\"";
    }
    out += "];\n";
  }

  std::map<NodeId, std::vector<const Edge *>> by_source;
  for (const Edge &e : graph.edges()) by_source[e.source].push_back(&e);
  for (const auto &[source, edges] : by_source) {
    for (const Edge *e : edges) {
      out += "  " + Quote(source.str()) + " -> " + Quote(e->target.str()) +
             " [label=" + Quote(e->label.ToString()) + "];\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace metasrl
