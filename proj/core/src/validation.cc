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

#include "metasrl/validation.h"

#include <map>
#include <set>

namespace metasrl {

std::string Violation::SubjectString() const {
  if (const auto *id = std::get_if<NodeId>(&subject)) return id->str();
  const Edge &e = std::get<Edge>(subject);
  return e.source.str() + " -" + e.label.ToString() + "-> " + e.target.str();
}

InvalidGraphError::InvalidGraphError(std::vector<Violation> violations)
    : std::runtime_error(
          violations.empty()
              ? std::string("invalid graph")
              : std::string("invalid graph: ") +
                    ViolationCodeName(violations.front().code) + " " +
                    violations.front().message),
      violations_(std::move(violations)) {}

namespace {

struct RoleUse {
  std::set<int> indices;
  bool plain = false;
  const Edge *first = nullptr;
};

}  // namespace

std::vector<Violation> Validate(const SemanticGraph &graph,
                                const ConceptCatalogue *catalogue,
                                ValidationMode mode) {
  const bool strict = mode == ValidationMode::kStrict;
  if (strict && catalogue == nullptr) {
    throw std::invalid_argument("strict validation requires a catalogue");
  }

  std::vector<Violation> out;
  std::set<std::pair<NodeId, RoleLabel>> slots;
  std::map<std::pair<NodeId, std::string>, RoleUse> uses;

  for (const Edge &e : graph.edges()) {
    const Node *source = graph.Find(e.source);
    if (source == nullptr) {
      out.push_back({ViolationCode::kEdgeFromNonConcept, e,
                     "edge source '" + e.source.str() + "' does not exist"});
    } else if (KindOf(*source) == NodeKind::kEntity) {
      out.push_back({ViolationCode::kEntityOutEdge, e,
                     "entity '" + e.source.str() + "' has an outgoing edge"});
    } else if (KindOf(*source) == NodeKind::kOmitted) {
      out.push_back({ViolationCode::kOmittedOutEdge, e,
                     "omitted node '" + e.source.str() +
                         "' has an outgoing edge"});
    }
    if (!graph.Contains(e.target)) {
      out.push_back({ViolationCode::kDanglingTarget, e,
                     "edge target '" + e.target.str() + "' does not exist"});
    }
    if (!slots.emplace(e.source, e.label).second) {
      out.push_back({ViolationCode::kDuplicateRoleSlot, e,
                     "role " + e.label.ToString() + " of '" + e.source.str() +
                         "' is filled more than once"});
    }

    RoleUse &use = uses[{e.source, e.label.name()}];
    if (use.first == nullptr) use.first = &e;
    if (e.label.indexed()) {
      use.indices.insert(*e.label.index());
    } else {
      use.plain = true;
    }

    if (!strict) continue;
    const ConceptNode *source_concept = graph.FindConcept(e.source);
    if (source_concept == nullptr) continue;
    const ConceptDefinition *def = catalogue->Lookup(source_concept->name);
    if (def == nullptr) continue;  // reported once as UNKNOWN_CONCEPT
    const RoleDefinition *role = def->FindRole(e.label.name());
    if (role == nullptr) {
      out.push_back({ViolationCode::kUnknownRole, e,
                     "concept " + source_concept->name + " has no role " +
                         e.label.name()});
    } else if (role->indexed != e.label.indexed()) {
      out.push_back({ViolationCode::kIndexingMismatch, e,
                     "role " + e.label.name() + " of " + source_concept->name +
                         (role->indexed ? " is indexed but used plain"
                                        : " is plain but used indexed")});
    }
  }

  for (const auto &[key, use] : uses) {
    if (use.indices.empty()) continue;
    if (use.plain) {
      out.push_back({ViolationCode::kBadIndexSet, *use.first,
                     "role " + key.second + " of '" + key.first.str() +
                         "' is used both plain and indexed"});
      continue;
    }
    // Contiguous from 1 iff the largest index equals the count.
    if (*use.indices.begin() != 1 ||
        *use.indices.rbegin() != static_cast<int>(use.indices.size())) {
      std::string set;
      for (int i : use.indices) set += (set.empty() ? "" : ",") + std::to_string(i);
      out.push_back({ViolationCode::kBadIndexSet, *use.first,
                     "indices of role " + key.second + " on '" +
                         key.first.str() + "' are {" + set +
                         "}, expected 1.." +
                         std::to_string(use.indices.size())});
    }
  }

  if (strict) {
    for (const auto &[id, node] : graph.nodes()) {
      const auto *c = std::get_if<ConceptNode>(&node);
      if (c != nullptr && !catalogue->Contains(c->name)) {
        out.push_back({ViolationCode::kUnknownConcept, id,
                       "concept " + c->name + " is not in the catalogue"});
      }
    }
  }
  return out;
}

}  // namespace metasrl
