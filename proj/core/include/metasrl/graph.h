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

#ifndef METASRL_GRAPH_H_
#define METASRL_GRAPH_H_

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace metasrl {

// Identifier of a node within one graph. Ids are opaque strings matching
// [A-Za-z0-9_.-]+ and are never reused by a graph once handed out.
class NodeId {
 public:
  NodeId() = default;
  explicit NodeId(std::string value) : value_(std::move(value)) {}

  const std::string &str() const { return value_; }
  bool empty() const { return value_.empty(); }

  // Checks the lexical form of a node id.
  static bool IsValid(std::string_view text);

  auto operator<=>(const NodeId &other) const = default;

 private:
  std::string value_;
};

// A role name, optionally indexed by a positive integer. Indexed roles
// express multiplicity (subEvent[1], subEvent[2], ...).
class RoleLabel {
 public:
  RoleLabel() = default;

  // Throws std::invalid_argument for an empty name or an index < 1.
  explicit RoleLabel(std::string name, std::optional<int> index = {});

  static RoleLabel Indexed(std::string name, int index) {
    return RoleLabel(std::move(name), index);
  }

  const std::string &name() const { return name_; }
  const std::optional<int> &index() const { return index_; }
  bool indexed() const { return index_.has_value(); }

  // "name" or "name[index]".
  std::string ToString() const;

  auto operator<=>(const RoleLabel &other) const = default;

 private:
  std::string name_;
  std::optional<int> index_;
};

struct ConceptNode {
  std::string name;
  bool operator==(const ConceptNode &) const = default;
};

struct EntityNode {
  std::string value;
  std::vector<std::string> classes;
  bool operator==(const EntityNode &) const = default;
};

struct OmittedNode {
  bool operator==(const OmittedNode &) const = default;
};

using Node = std::variant<ConceptNode, EntityNode, OmittedNode>;

enum class NodeKind { kConcept, kEntity, kOmitted };

NodeKind KindOf(const Node &node);
const char *KindName(NodeKind kind);

struct Edge {
  NodeId source;
  RoleLabel label;
  NodeId target;

  auto operator<=>(const Edge &other) const = default;
};

// Closed set of structural and catalogue violations.
enum class ViolationCode {
  kEntityOutEdge,
  kOmittedOutEdge,
  kEdgeFromNonConcept,
  kDanglingTarget,
  kDuplicateRoleSlot,
  kBadIndexSet,
  kUnknownConcept,
  kUnknownRole,
  kIndexingMismatch,
};

// Upper-case wire name, e.g. "ENTITY_OUT_EDGE".
const char *ViolationCodeName(ViolationCode code);

// Raised by graph mutators that would break a structural rule.
class GraphError : public std::runtime_error {
 public:
  GraphError(ViolationCode code, const std::string &message)
      : std::runtime_error(message), code_(code) {}

  ViolationCode code() const { return code_; }

 private:
  ViolationCode code_;
};

// A directed labelled multigraph of concept, entity and omitted nodes.
//
// The Add* mutators enforce the structural rules as they go, so a graph
// built only through them always validates in lax mode. InsertNode and
// AppendEdgeUnchecked bypass the checks; readers and tests use them to
// materialize graphs that validate() is then asked to judge.
//
// Graphs are plain values. Build on one thread, then share as const.
class SemanticGraph {
 public:
  // Throw std::invalid_argument on an empty name or value.
  NodeId AddConcept(std::string name);
  NodeId AddEntity(std::string value, std::vector<std::string> classes = {});
  NodeId AddOmitted();

  // Appends source -label-> target. Throws GraphError with
  // ENTITY_OUT_EDGE / OMITTED_OUT_EDGE when the source is a leaf kind,
  // DANGLING_TARGET when an endpoint is missing, and DUPLICATE_ROLE_SLOT
  // when source already fills label.
  const Edge &AddEdge(const NodeId &source, RoleLabel label,
                      const NodeId &target);

  // Inserts a node under a caller-chosen id. Throws std::invalid_argument
  // for a malformed or already used id.
  void InsertNode(NodeId id, Node node);
  void AppendEdgeUnchecked(Edge edge);

  bool Contains(const NodeId &id) const { return nodes_.contains(id); }
  const Node *Find(const NodeId &id) const;
  const ConceptNode *FindConcept(const NodeId &id) const;
  const EntityNode *FindEntity(const NodeId &id) const;

  // Nodes ordered by id (byte order).
  const std::map<NodeId, Node> &nodes() const { return nodes_; }
  // Edges in insertion order.
  const std::vector<Edge> &edges() const { return edges_; }

  size_t node_count() const { return nodes_.size(); }
  size_t edge_count() const { return edges_.size(); }
  bool empty() const { return nodes_.empty(); }

  size_t OutDegree(const NodeId &id) const;
  size_t InDegree(const NodeId &id) const;
  std::vector<const Edge *> OutEdges(const NodeId &id) const;

  // Edge filling (source, label), or nullptr.
  const Edge *FindEdge(const NodeId &source, const RoleLabel &label) const;

 private:
  NodeId FreshId();

  std::map<NodeId, Node> nodes_;
  std::vector<Edge> edges_;
  // First edge index per (source, label).
  std::map<std::pair<NodeId, RoleLabel>, size_t> slots_;
  size_t next_id_ = 1;
};

// Same node ids with equal payloads, and the same edge multiset.
bool StructurallyEqual(const SemanticGraph &a, const SemanticGraph &b);

// A pending edge whose role may still need an index.
struct RoleEdge {
  NodeId source;
  std::string role;
  NodeId target;
};

// Adds edges, switching a role to indexed form name[1..k] (in the given
// order) whenever one source would otherwise fill it more than once.
void AddRoleEdges(SemanticGraph &graph, std::span<const RoleEdge> edges);

// Fuses g1 and g2 into a new graph. Each correspondence pair (id in g1,
// id in g2) becomes a single node; the pair must be kind-compatible
// (concepts with equal names, entities with equal value and classes,
// or two omitted nodes). Result ids are assigned fresh: g1's nodes in id
// order, then g2's unfused nodes in id order. Throws GraphError or
// std::invalid_argument on an incompatible or malformed correspondence.
SemanticGraph Merge(const SemanticGraph &g1, const SemanticGraph &g2,
                    std::span<const std::pair<NodeId, NodeId>> correspondence);

// Subgraph on the nodes reachable from root, keeping ids.
SemanticGraph ReachableSubgraph(const SemanticGraph &graph,
                                const NodeId &root);

}  // namespace metasrl

#endif  // METASRL_GRAPH_H_
