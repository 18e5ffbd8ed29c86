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

#include "metasrl/xml_io.h"

#include <charconv>
#include <initializer_list>
#include <map>
#include <set>

#include "metasrl/validation.h"
#include "xml_reader.h"

namespace metasrl {

namespace {

constexpr char kVersion[] = "1";

void AppendAttr(std::string &out, std::string_view name,
                std::string_view value) {
  out += ' ';
  out += name;
  out += "=\"";
  out += xml::EscapeAttribute(value);
  out += '"';
}

[[noreturn]] void SchemaFail(const std::string &message,
                             const SourceLocation &at) {
  throw SchemaError(message, at);
}

// Rejects attributes outside the allowed set.
void CheckAttributes(const xml::Element &e,
                     std::initializer_list<std::string_view> allowed) {
  for (const xml::Attribute &a : e.attributes) {
    bool ok = false;
    for (std::string_view name : allowed) ok = ok || a.name == name;
    if (!ok) {
      SchemaFail("unknown attribute '" + a.name + "' on <" + e.name + ">",
                 a.location);
    }
  }
}

const xml::Attribute &Required(const xml::Element &e, std::string_view name,
                               bool allow_empty = false) {
  const xml::Attribute *a = e.Find(name);
  if (a == nullptr) {
    SchemaFail("<" + e.name + "> is missing attribute '" + std::string(name) +
                   "'",
               e.location);
  }
  if (!allow_empty && a->value.empty()) {
    SchemaFail("attribute '" + std::string(name) + "' on <" + e.name +
                   "> is empty",
               a->location);
  }
  return *a;
}

void CheckRoot(const xml::Element &root, std::string_view expected) {
  if (root.name != expected) {
    SchemaFail("root element must be <" + std::string(expected) + ">, got <" +
                   root.name + ">",
               root.location);
  }
  CheckAttributes(root, {"version"});
  const xml::Attribute &version = Required(root, "version");
  if (version.value != kVersion) {
    SchemaFail("unsupported version \"" + version.value + "\"",
               version.location);
  }
}

void CheckNoChildren(const xml::Element &e) {
  if (!e.children.empty()) {
    SchemaFail("<" + e.name + "> must be empty", e.children.front().location);
  }
}

// Canonical positive decimal: no sign, no leading zero, fits in int.
int ParseIndex(const xml::Attribute &a) {
  const std::string &v = a.value;
  int value = 0;
  auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), value);
  if (v.empty() || v[0] == '0' || v[0] == '-' || v[0] == '+' ||
      ec != std::errc() || p != v.data() + v.size() || value < 1) {
    SchemaFail("index must be a positive integer, got \"" + v + "\"",
               a.location);
  }
  return value;
}

NodeId ParseId(const xml::Attribute &a) {
  if (!NodeId::IsValid(a.value)) {
    SchemaFail("malformed node id \"" + a.value + "\"", a.location);
  }
  return NodeId(a.value);
}

struct PendingRole {
  Edge edge;
  SourceLocation target_location;
};

void ReadRoles(const xml::Element &owner, const NodeId &source,
               std::vector<PendingRole> &roles) {
  for (const xml::Element &child : owner.children) {
    if (child.name != "role") {
      SchemaFail("unexpected <" + child.name + "> inside <" + owner.name + ">",
                 child.location);
    }
    CheckAttributes(child, {"name", "index", "target"});
    CheckNoChildren(child);
    const xml::Attribute &name = Required(child, "name");
    const xml::Attribute *index = child.Find("index");
    const xml::Attribute &target = Required(child, "target");
    std::optional<int> idx;
    if (index != nullptr) idx = ParseIndex(*index);
    roles.push_back({Edge{source, RoleLabel(name.value, idx), ParseId(target)},
                     target.location});
  }
}

}  // namespace

std::string ToXml(const SemanticGraph &graph) {
  std::vector<Violation> violations = Validate(graph);
  if (!violations.empty()) throw InvalidGraphError(std::move(violations));

  std::map<NodeId, std::vector<const Edge *>> roles;
  for (const Edge &e : graph.edges()) roles[e.source].push_back(&e);

  std::string out = "<semanticgraph version=\"1\"";
  if (graph.empty()) return out + "/>";
  out += '>';
  for (const auto &[id, node] : graph.nodes()) {
    if (const auto *c = std::get_if<ConceptNode>(&node)) {
      out += "<concept";
      AppendAttr(out, "id", id.str());
      AppendAttr(out, "name", c->name);
      auto it = roles.find(id);
      if (it == roles.end()) {
        out += "/>";
        continue;
      }
      out += '>';
      for (const Edge *e : it->second) {
        out += "<role";
        AppendAttr(out, "name", e->label.name());
        if (e->label.indexed()) {
          AppendAttr(out, "index", std::to_string(*e->label.index()));
        }
        AppendAttr(out, "target", e->target.str());
        out += "/>";
      }
      out += "</concept>";
    } else if (const auto *en = std::get_if<EntityNode>(&node)) {
      out += "<entity";
      AppendAttr(out, "id", id.str());
      AppendAttr(out, "value", en->value);
      if (en->classes.empty()) {
        out += "/>";
        continue;
      }
      out += '>';
      for (const std::string &cls : en->classes) {
        out += "<class";
        AppendAttr(out, "name", cls);
        out += "/>";
      }
      out += "</entity>";
    } else {
      out += "<omitted";
      AppendAttr(out, "id", id.str());
      out += "/>";
    }
  }
  out += "</semanticgraph>";
  return out;
}

SemanticGraph FromXml(std::string_view document) {
  xml::Element root = xml::Parse(document);
  CheckRoot(root, "semanticgraph");

  SemanticGraph graph;
  std::vector<PendingRole> roles;
  for (const xml::Element &e : root.children) {
    NodeId id;
    if (e.name == "concept") {
      CheckAttributes(e, {"id", "name"});
      id = ParseId(Required(e, "id"));
      const xml::Attribute &name = Required(e, "name");
      if (graph.Contains(id)) SchemaFail("duplicate id \"" + id.str() + "\"", e.location);
      graph.InsertNode(id, ConceptNode{name.value});
      ReadRoles(e, id, roles);
    } else if (e.name == "entity") {
      CheckAttributes(e, {"id", "value"});
      id = ParseId(Required(e, "id"));
      EntityNode entity{Required(e, "value").value, {}};
      xml::Element roles_only{e.name, {}, {}, e.location};
      for (const xml::Element &child : e.children) {
        if (child.name == "class") {
          CheckAttributes(child, {"name"});
          CheckNoChildren(child);
          entity.classes.push_back(Required(child, "name").value);
        } else if (child.name == "role") {
          roles_only.children.push_back(child);
        } else {
          SchemaFail("unexpected <" + child.name + "> inside <entity>",
                     child.location);
        }
      }
      if (graph.Contains(id)) SchemaFail("duplicate id \"" + id.str() + "\"", e.location);
      graph.InsertNode(id, std::move(entity));
      ReadRoles(roles_only, id, roles);
    } else if (e.name == "omitted") {
      CheckAttributes(e, {"id"});
      id = ParseId(Required(e, "id"));
      if (graph.Contains(id)) SchemaFail("duplicate id \"" + id.str() + "\"", e.location);
      graph.InsertNode(id, OmittedNode{});
      ReadRoles(e, id, roles);
    } else {
      SchemaFail("unexpected <" + e.name + "> inside <semanticgraph>",
                 e.location);
    }
  }
  for (PendingRole &role : roles) {
    if (!graph.Contains(role.edge.target)) {
      SchemaFail("role target \"" + role.edge.target.str() +
                     "\" does not name a node",
                 role.target_location);
    }
    graph.AppendEdgeUnchecked(std::move(role.edge));
  }
  return graph;
}

std::string CatalogueToXml(const ConceptCatalogue &catalogue) {
  std::string out = "<catalogue version=\"1\"";
  if (catalogue.empty()) return out + "/>";
  out += '>';
  for (const auto &[name, def] : catalogue.entries()) {
    out += "<concept";
    AppendAttr(out, "name", name);
    if (def.roles.empty()) {
      out += "/>";
      continue;
    }
    out += '>';
    for (const RoleDefinition &role : def.roles) {
      out += "<role";
      AppendAttr(out, "name", role.name);
      if (role.indexed) AppendAttr(out, "indexed", "true");
      out += "/>";
    }
    out += "</concept>";
  }
  out += "</catalogue>";
  return out;
}

ConceptCatalogue CatalogueFromXml(std::string_view document) {
  xml::Element root = xml::Parse(document);
  CheckRoot(root, "catalogue");

  ConceptCatalogue catalogue;
  for (const xml::Element &e : root.children) {
    if (e.name != "concept") {
      SchemaFail("unexpected <" + e.name + "> inside <catalogue>", e.location);
    }
    CheckAttributes(e, {"name"});
    ConceptDefinition def;
    def.name = Required(e, "name").value;
    std::set<std::string> seen;
    for (const xml::Element &r : e.children) {
      if (r.name != "role") {
        SchemaFail("unexpected <" + r.name + "> inside <concept>", r.location);
      }
      CheckAttributes(r, {"name", "indexed"});
      CheckNoChildren(r);
      RoleDefinition role;
      role.name = Required(r, "name").value;
      if (const xml::Attribute *indexed = r.Find("indexed")) {
        if (indexed->value != "true" && indexed->value != "false") {
          SchemaFail("indexed must be \"true\" or \"false\"",
                     indexed->location);
        }
        role.indexed = indexed->value == "true";
      }
      if (!seen.insert(role.name).second) {
        SchemaFail("concept " + def.name + " declares role " + role.name +
                       " twice",
                   r.location);
      }
      def.roles.push_back(std::move(role));
    }
    if (catalogue.Contains(def.name)) {
      SchemaFail("concept " + def.name + " is defined twice", e.location);
    }
    catalogue.Define(std::move(def));
  }
  return catalogue;
}

}  // namespace metasrl
