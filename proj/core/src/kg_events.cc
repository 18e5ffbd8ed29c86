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


#include "metasrl/kg_events.h"

#include <map>
#include <set>
#include <string>

namespace metasrl {

namespace {

// Matches either the expanded IRI or the conventional prefixed name, so
// documents that bind "sem:" to another namespace still work.
bool Names(const Term &term, std::string_view ns, std::string_view local,
           std::string_view prefixed) {
  if (!term.is_resource()) return false;
  if (term.text == prefixed) return true;
  return term.iri.size() == ns.size() + local.size() && term.iri.starts_with(ns) &&
         term.iri.ends_with(local);
}

bool IsType(const Term &t) { return Names(t, kRdfNamespace, "type", "rdf:type"); }
bool IsEventClass(const Term &t) { return Names(t, kSemNamespace, "Event", "sem:Event"); }
bool IsSubEventOf(const Term &t) {
  return Names(t, kSemNamespace, "subEventOf", "sem:subEventOf");
}
bool IsLabel(const Term &t) { return Names(t, kRdfsNamespace, "label", "rdfs:label"); }

class EventBuilder {
 public:
  explicit EventBuilder(const TripleStore &store) : store_(store) {}

  SemanticGraph Build() {
    CollectEvents();
    for (const Term *event : event_order_) {
      NodeId node = graph_.AddConcept("sem:Event");
      events_.emplace(event->iri, node);
      edges_.push_back({node, "id", graph_.AddEntity(event->text)});
    }
    for (const Triple &t : store_.triples) Convert(t);
    AddRoleEdges(graph_, edges_);
    for (const auto &[parent, child] : sub_events_) {
      int index = ++sub_event_count_[parent];
      graph_.AddEdge(parent, RoleLabel("subEvent", index), child);
    }
    return std::move(graph_);
  }

 private:
  void MarkEvent(const Term &term) {
    if (event_iris_.insert(term.iri).second) event_order_.push_back(&term);
  }

  void CollectEvents() {
    for (const Triple &t : store_.triples) {
      if (IsType(t.predicate) && IsEventClass(t.object)) {
        MarkEvent(t.subject);
      } else if (IsSubEventOf(t.predicate) && t.object.is_resource()) {
        MarkEvent(t.subject);
        MarkEvent(t.object);
      }
    }
  }

  NodeId Literal(const Term &term) {
    if (term.text.empty()) {
      throw ConversionError("empty literal cannot become an entity value");
    }
    return graph_.AddEntity(term.text);
  }

  void Convert(const Triple &t) {
    auto event = events_.find(t.subject.iri);
    if (event != events_.end()) {
      const NodeId &e = event->second;
      if (IsType(t.predicate) && IsEventClass(t.object)) return;
      if (IsSubEventOf(t.predicate) && t.object.is_resource()) {
        sub_events_.emplace_back(events_.at(t.object.iri), e);
        return;
      }
      if (IsLabel(t.predicate) && t.object.is_literal()) {
        edges_.push_back({e, t.predicate.text, Literal(t.object)});
        return;
      }
      NodeId p = graph_.AddConcept(t.predicate.text);
      edges_.push_back({e, t.predicate.text, p});
      AddObject(p, t);
      return;
    }
    NodeId p = graph_.AddConcept(t.predicate.text);
    edges_.push_back({p, "subject", SubjectEntity(t.subject)});
    AddObject(p, t);
  }

  // `id` or `value` from a predicate concept to the object.
  void AddObject(const NodeId &p, const Triple &t) {
    if (t.object.is_resource()) {
      edges_.push_back({p, "id", graph_.AddEntity(t.object.text)});
    } else {
      edges_.push_back({p, "value", Literal(t.object)});
    }
  }

  NodeId SubjectEntity(const Term &subject) {
    auto it = subjects_.find(subject.iri);
    if (it != subjects_.end()) return it->second;
    NodeId id = graph_.AddEntity(subject.text);
    subjects_.emplace(subject.iri, id);
    return id;
  }

  const TripleStore &store_;
  SemanticGraph graph_;
  std::set<std::string> event_iris_;
  std::vector<const Term *> event_order_;
  std::map<std::string, NodeId> events_;
  std::map<std::string, NodeId> subjects_;
  std::vector<RoleEdge> edges_;
  std::vector<std::pair<NodeId, NodeId>> sub_events_;  // (parent, child)
  std::map<NodeId, int> sub_event_count_;
};

}  // namespace

SemanticGraph EventsToGraph(const TripleStore &store) {
  return EventBuilder(store).Build();
}

std::vector<NodeId> TopLevelEvents(const SemanticGraph &graph) {
  std::set<NodeId> children;
  for (const Edge &e : graph.edges()) {
    if (e.label.name() == "subEvent") children.insert(e.target);
  }
  std::vector<NodeId> tops;
  for (const auto &[id, node] : graph.nodes()) {
    const auto *c = std::get_if<ConceptNode>(&node);
    if (c != nullptr && c->name == "sem:Event" && !children.contains(id)) {
      tops.push_back(id);
    }
  }
  return tops;
}

}  // namespace metasrl
