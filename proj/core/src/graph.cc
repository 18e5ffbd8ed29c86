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

#include "metasrl/graph.h"

#include <algorithm>
#include <deque>
#include <set>

namespace metasrl {

bool NodeId::IsValid(std::string_view text) {
  if (text.empty()) return false;
  for (char c : text) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
              (c >= '0' && c <= '9') || c == '_' || c == '.' || c == '-';
    if (!ok) return false;
  }
  return true;
}

RoleLabel::RoleLabel(std::string name, std::optional<int> index)
    : name_(std::move(name)), index_(index) {
  if (name_.empty()) throw std::invalid_argument("role name is empty");
  if (index_ && *index_ < 1) {
    throw std::invalid_argument("role index must be >= 1, got " +
                                std::to_string(*index_));
  }
}

std::string RoleLabel::ToString() const {
  if (!index_) return name_;
  return name_ + "[" + std::to_string(*index_) + "]";
}

NodeKind KindOf(const Node &node) {
  switch (node.index()) {
    case 0: return NodeKind::kConcept;
    case 1: return NodeKind::kEntity;
    default: return NodeKind::kOmitted;
  }
}

const char *KindName(NodeKind kind) {
  switch (kind) {
    case NodeKind::kConcept: return "concept";
    case NodeKind::kEntity: return "entity";
    case NodeKind::kOmitted: return "omitted";
  }
  return "?";
}

const char *ViolationCodeName(ViolationCode code) {
  switch (code) {
    case ViolationCode::kEntityOutEdge: return "ENTITY_OUT_EDGE";
    case ViolationCode::kOmittedOutEdge: return "OMITTED_OUT_EDGE";
    case ViolationCode::kEdgeFromNonConcept: return "EDGE_FROM_NON_CONCEPT";
    case ViolationCode::kDanglingTarget: return "DANGLING_TARGET";
    case ViolationCode::kDuplicateRoleSlot: return "DUPLICATE_ROLE_SLOT";
    case ViolationCode::kBadIndexSet: return "BAD_INDEX_SET";
    case ViolationCode::kUnknownConcept: return "UNKNOWN_CONCEPT";
    case ViolationCode::kUnknownRole: return "UNKNOWN_ROLE";
    case ViolationCode::kIndexingMismatch: return "INDEXING_MISMATCH";
  }
  return "?";
}

NodeId SemanticGraph::FreshId() {
  // Skips ids taken by InsertNode, so generated ids never collide.
  while (true) {
    NodeId id("n" + std::to_string(next_id_++));
    if (!nodes_.contains(id)) return id;
  }
}

NodeId SemanticGraph::AddConcept(std::string name) {
  if (name.empty()) throw std::invalid_argument("concept name is empty");
  NodeId id = FreshId();
  nodes_.emplace(id, ConceptNode{std::move(name)});
  return id;
}

NodeId SemanticGraph::AddEntity(std::string value,
                                std::vector<std::string> classes) {
  if (value.empty()) throw std::invalid_argument("entity value is empty");
  for (const std::string &c : classes) {
    if (c.empty()) throw std::invalid_argument("entity class is empty");
  }
  NodeId id = FreshId();
  nodes_.emplace(id, EntityNode{std::move(value), std::move(classes)});
  return id;
}

NodeId SemanticGraph::AddOmitted() {
  NodeId id = FreshId();
  nodes_.emplace(id, OmittedNode{});
  return id;
}

const Edge &SemanticGraph::AddEdge(const NodeId &source, RoleLabel label,
                                   const NodeId &target) {
  const Node *from = Find(source);
  if (from == nullptr) {
    throw GraphError(ViolationCode::kDanglingTarget,
                     "edge source '" + source.str() + "' does not exist");
  }
  if (!Contains(target)) {
    throw GraphError(ViolationCode::kDanglingTarget,
                     "edge target '" + target.str() + "' does not exist");
  }
  switch (KindOf(*from)) {
    case NodeKind::kEntity:
      throw GraphError(ViolationCode::kEntityOutEdge,
                       "entity '" + source.str() + "' cannot have roles");
    case NodeKind::kOmitted:
      throw GraphError(ViolationCode::kOmittedOutEdge,
                       "omitted node '" + source.str() + "' cannot have roles");
    case NodeKind::kConcept:
      break;
  }
  if (FindEdge(source, label) != nullptr) {
    throw GraphError(ViolationCode::kDuplicateRoleSlot,
                     "'" + source.str() + "' already fills role " +
                         label.ToString());
  }
  slots_.emplace(std::pair{source, label}, edges_.size());
  edges_.push_back(Edge{source, std::move(label), target});
  return edges_.back();
}

void SemanticGraph::InsertNode(NodeId id, Node node) {
  if (!NodeId::IsValid(id.str())) {
    throw std::invalid_argument("malformed node id '" + id.str() + "'");
  }
  if (nodes_.contains(id)) {
    throw std::invalid_argument("node id '" + id.str() + "' already used");
  }
  nodes_.emplace(std::move(id), std::move(node));
}

void SemanticGraph::AppendEdgeUnchecked(Edge edge) {
  slots_.emplace(std::pair{edge.source, edge.label}, edges_.size());
  edges_.push_back(std::move(edge));
}

const Node *SemanticGraph::Find(const NodeId &id) const {
  auto it = nodes_.find(id);
  return it == nodes_.end() ? nullptr : &it->second;
}

const ConceptNode *SemanticGraph::FindConcept(const NodeId &id) const {
  const Node *node = Find(id);
  return node == nullptr ? nullptr : std::get_if<ConceptNode>(node);
}

const EntityNode *SemanticGraph::FindEntity(const NodeId &id) const {
  const Node *node = Find(id);
  return node == nullptr ? nullptr : std::get_if<EntityNode>(node);
}

size_t SemanticGraph::OutDegree(const NodeId &id) const {
  return std::count_if(edges_.begin(), edges_.end(),
                       [&](const Edge &e) { return e.source == id; });
}

size_t SemanticGraph::InDegree(const NodeId &id) const {
  return std::count_if(edges_.begin(), edges_.end(),
                       [&](const Edge &e) { return e.target == id; });
}

std::vector<const Edge *> SemanticGraph::OutEdges(const NodeId &id) const {
  std::vector<const Edge *> out;
  for (const Edge &e : edges_) {
    if (e.source == id) out.push_back(&e);
  }
  return out;
}

const Edge *SemanticGraph::FindEdge(const NodeId &source,
                                    const RoleLabel &label) const {
  auto it = slots_.find(std::pair{source, label});
  return it == slots_.end() ? nullptr : &edges_[it->second];
}

bool StructurallyEqual(const SemanticGraph &a, const SemanticGraph &b) {
  if (a.nodes() != b.nodes()) return false;
  if (a.edge_count() != b.edge_count()) return false;
  std::vector<Edge> ea = a.edges();
  std::vector<Edge> eb = b.edges();
  std::sort(ea.begin(), ea.end());
  std::sort(eb.begin(), eb.end());
  return ea == eb;
}

void AddRoleEdges(SemanticGraph &graph, std::span<const RoleEdge> edges) {
  std::map<std::pair<NodeId, std::string>, int> totals;
  for (const RoleEdge &e : edges) ++totals[{e.source, e.role}];

  std::map<std::pair<NodeId, std::string>, int> seen;
  for (const RoleEdge &e : edges) {
    std::pair<NodeId, std::string> key{e.source, e.role};
    if (totals[key] == 1) {
      graph.AddEdge(e.source, RoleLabel(e.role), e.target);
    } else {
      graph.AddEdge(e.source, RoleLabel::Indexed(e.role, ++seen[key]),
                    e.target);
    }
  }
}

namespace {

bool Compatible(const Node &a, const Node &b) {
  if (a.index() != b.index()) return false;
  if (const auto *ca = std::get_if<ConceptNode>(&a)) {
    return ca->name == std::get<ConceptNode>(b).name;
  }
  return a == b;
}

}  // namespace

SemanticGraph Merge(const SemanticGraph &g1, const SemanticGraph &g2,
                    std::span<const std::pair<NodeId, NodeId>> correspondence) {
  std::map<NodeId, NodeId> fused;  // g2 id -> g1 id
  std::set<NodeId> fused_left;
  for (const auto &[left, right] : correspondence) {
    const Node *a = g1.Find(left);
    const Node *b = g2.Find(right);
    if (a == nullptr || b == nullptr) {
      throw std::invalid_argument("correspondence (" + left.str() + ", " +
                                  right.str() + ") names a missing node");
    }
    if (!Compatible(*a, *b)) {
      throw std::invalid_argument("cannot fuse " + left.str() + " with " +
                                  right.str() + ": incompatible nodes");
    }
    if (!fused_left.insert(left).second || !fused.emplace(right, left).second) {
      throw std::invalid_argument("node fused twice in correspondence (" +
                                  left.str() + ", " + right.str() + ")");
    }
  }

  SemanticGraph out;
  std::map<NodeId, NodeId> from_left;
  std::map<NodeId, NodeId> from_right;
  auto copy_node = [&out](const Node &node) {
    return std::visit(
        [&out](const auto &n) -> NodeId {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, ConceptNode>) {
            return out.AddConcept(n.name);
          } else if constexpr (std::is_same_v<T, EntityNode>) {
            return out.AddEntity(n.value, n.classes);
          } else {
            return out.AddOmitted();
          }
        },
        node);
  };
  for (const auto &[id, node] : g1.nodes()) from_left[id] = copy_node(node);
  for (const auto &[id, node] : g2.nodes()) {
    auto it = fused.find(id);
    from_right[id] = it != fused.end() ? from_left.at(it->second)
                                       : copy_node(node);
  }
  for (const Edge &e : g1.edges()) {
    out.AddEdge(from_left.at(e.source), e.label, from_left.at(e.target));
  }
  for (const Edge &e : g2.edges()) {
    out.AddEdge(from_right.at(e.source), e.label, from_right.at(e.target));
  }
  return out;
}

SemanticGraph ReachableSubgraph(const SemanticGraph &graph,
                                const NodeId &root) {
  std::set<NodeId> seen;
  std::deque<NodeId> queue;
  if (graph.Contains(root)) {
    seen.insert(root);
    queue.push_back(root);
  }
  while (!queue.empty()) {
    NodeId id = queue.front();
    queue.pop_front();
    for (const Edge *e : graph.OutEdges(id)) {
      if (graph.Contains(e->target) && seen.insert(e->target).second) {
        queue.push_back(e->target);
      }
    }
  }
  SemanticGraph out;
  for (const NodeId &id : seen) out.InsertNode(id, *graph.Find(id));
  for (const Edge &e : graph.edges()) {
    if (seen.contains(e.source)) out.AppendEdgeUnchecked(e);
  }
  return out;
}

}  // namespace metasrl
