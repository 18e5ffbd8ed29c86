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

#include "metasrl/amr.h"

#include <map>
#include <set>
#include <string>

namespace metasrl {

namespace {

constexpr std::string_view kInverseSuffix = "-of";

bool IsInverse(const std::string &role) {
  return role.size() > kInverseSuffix.size() && role.ends_with(kInverseSuffix);
}

// Converts trees into one graph. Constants whose token is in `promoted`
// map to a single shared concept per token.
class Converter {
 public:
  explicit Converter(std::set<std::string> promoted = {})
      : promoted_(std::move(promoted)) {}

  void AddTree(const PenmanTree &tree) {
    std::map<std::string, NodeId> vars;
    for (const auto &[var, label] : tree.variables) {
      NodeId id = graph_.AddConcept(label);
      vars.emplace(var, id);
      variable_nodes_[var].push_back(id);
    }
    for (const PenmanSlot &slot : tree.slots) {
      const NodeId &owner = vars.at(slot.owner);
      NodeId target;
      bool target_is_concept = true;
      if (slot.value.is_variable()) {
        target = vars.at(slot.value.text);
      } else if (promoted_.contains(slot.value.text)) {
        target = PromotedNode(slot.value.text);
      } else {
        target = graph_.AddEntity(slot.value.text);
        constant_nodes_.emplace(slot.value.text, target);
        target_is_concept = false;
      }
      if (IsInverse(slot.role) && target_is_concept) {
        std::string forward =
            slot.role.substr(0, slot.role.size() - kInverseSuffix.size());
        edges_.push_back({target, std::move(forward), owner});
      } else {
        edges_.push_back({owner, slot.role, target});
      }
    }
  }

  // Resolves a document-level token. Variables win over constants.
  NodeId Resolve(const UmrRelation &rel, const std::string &token) const {
    auto v = variable_nodes_.find(token);
    if (v != variable_nodes_.end()) {
      if (v->second.size() > 1) {
        throw ConversionError(rel.location.ToString() + ": token " + token +
                              " names variables in several sentences");
      }
      return v->second.front();
    }
    auto p = promoted_nodes_.find(token);
    if (p != promoted_nodes_.end()) return p->second;
    auto c = constant_nodes_.lower_bound(token);  // first occurrence
    if (c != constant_nodes_.end() && c->first == token) return c->second;
    throw ConversionError(rel.location.ToString() + ": token " + token +
                          " does not occur in any sentence");
  }

  void AddRelationEdge(RoleEdge edge) { edges_.push_back(std::move(edge)); }

  SemanticGraph Finish() {
    AddRoleEdges(graph_, edges_);
    return std::move(graph_);
  }

  // Edges whose source is an entity cannot go through AddEdge.
  SemanticGraph FinishUnchecked(std::span<const RoleEdge> raw) {
    AddRoleEdges(graph_, edges_);
    for (const RoleEdge &e : raw) {
      graph_.AppendEdgeUnchecked({e.source, RoleLabel(e.role), e.target});
    }
    return std::move(graph_);
  }

 private:
  NodeId PromotedNode(const std::string &token) {
    auto it = promoted_nodes_.find(token);
    if (it != promoted_nodes_.end()) return it->second;
    NodeId id = graph_.AddConcept(token);
    promoted_nodes_.emplace(token, id);
    return id;
  }

  std::set<std::string> promoted_;
  SemanticGraph graph_;
  std::vector<RoleEdge> edges_;
  std::map<std::string, std::vector<NodeId>> variable_nodes_;
  std::map<std::string, NodeId> promoted_nodes_;
  std::multimap<std::string, NodeId> constant_nodes_;
};

}  // namespace

SemanticGraph AmrToGraph(const PenmanTree &tree) {
  Converter converter;
  converter.AddTree(tree);
  return converter.Finish();
}

SemanticGraph AmrToGraph(std::span<const PenmanTree> trees) {
  Converter converter;
  for (const PenmanTree &tree : trees) converter.AddTree(tree);
  return converter.Finish();
}

SemanticGraph UmrToGraph(const UmrDocument &doc, const UmrOptions &options) {
  std::set<std::string> variables;
  for (const PenmanTree &tree : doc.sentences) {
    for (const auto &[var, label] : tree.variables) variables.insert(var);
  }
  std::set<std::string> promoted;
  if (options.promote_constants) {
    for (const UmrRelation &rel : doc.relations) {
      if (!variables.contains(rel.source)) promoted.insert(rel.source);
    }
  }

  Converter converter(std::move(promoted));
  for (const PenmanTree &tree : doc.sentences) converter.AddTree(tree);

  if (options.promote_constants) {
    for (const UmrRelation &rel : doc.relations) {
      converter.AddRelationEdge({converter.Resolve(rel, rel.source),
                                 rel.relation,
                                 converter.Resolve(rel, rel.target)});
    }
    return converter.Finish();
  }
  std::vector<RoleEdge> raw;
  for (const UmrRelation &rel : doc.relations) {
    raw.push_back({converter.Resolve(rel, rel.source), rel.relation,
                   converter.Resolve(rel, rel.target)});
  }
  return converter.FinishUnchecked(raw);
}

}  // namespace metasrl
