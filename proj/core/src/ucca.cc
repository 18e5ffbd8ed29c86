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


#include "metasrl/ucca.h"

#include <map>
#include <set>

namespace metasrl {

namespace {

bool IsBlank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

struct Field {
  std::string_view text;
  size_t offset;
};

// Whitespace-separated fields; the last one keeps the rest of the line
// once `max` fields have been read.
std::vector<Field> SplitFields(std::string_view line, size_t base, size_t max) {
  std::vector<Field> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && IsBlank(line[i])) ++i;
    if (i >= line.size()) break;
    size_t start = i;
    if (out.size() + 1 == max) {
      size_t end = line.size();
      while (end > start && IsBlank(line[end - 1])) --end;
      out.push_back({line.substr(start, end - start), base + start});
      break;
    }
    while (i < line.size() && !IsBlank(line[i])) ++i;
    out.push_back({line.substr(start, i - start), base + start});
  }
  return out;
}

class UccaParser {
 public:
  UccaParser(std::string_view text, size_t begin, size_t end)
      : text_(text), begin_(begin), end_(end) {}

  UccaPassage Parse() {
    size_t pos = begin_;
    while (pos < end_) {
      size_t eol = text_.find('\n', pos);
      if (eol == std::string_view::npos || eol > end_) eol = end_;
      Record(text_.substr(pos, eol - pos), pos);
      pos = eol + 1;
    }
    Check();
    return std::move(passage_);
  }

 private:
  [[noreturn]] void Fail(const std::string &message, size_t offset) const {
    throw ParseError(message, SourceLocation::At(text_, offset));
  }

  void Record(std::string_view line, size_t offset) {
    std::vector<Field> head = SplitFields(line, offset, 2);
    if (head.empty() || head[0].text.front() == '#') return;
    std::string_view kind = head[0].text;
    if (kind == "unit" || kind == "root") {
      std::vector<Field> f = SplitFields(line, offset, 3);
      if (f.size() != 2) Fail(std::string(kind) + " record takes exactly one id", offset);
      if (kind == "unit") {
        AddNode(f[1], UccaNode::Kind::kUnit, "");
      } else {
        if (!passage_.root.empty()) Fail("duplicate root record", offset);
        passage_.root = f[1].text;
        root_offset_ = f[1].offset;
      }
    } else if (kind == "term") {
      std::vector<Field> f = SplitFields(line, offset, 3);
      if (f.size() != 3) Fail("term record needs an id and text", offset);
      AddNode(f[1], UccaNode::Kind::kTerminal, std::string(f[2].text));
    } else if (kind == "edge") {
      std::vector<Field> f = SplitFields(line, offset, 5);
      if (f.size() != 4) Fail("edge record needs parent, child and category", offset);
      passage_.edges.push_back(
          {std::string(f[1].text), std::string(f[2].text), std::string(f[3].text)});
      edge_offsets_.push_back({f[1].offset, f[2].offset});
    } else {
      Fail("unknown record '" + std::string(kind) + "'", offset);
    }
  }

  void AddNode(const Field &id, UccaNode::Kind kind, std::string text) {
    if (!NodeId::IsValid(id.text)) Fail("invalid id '" + std::string(id.text) + "'", id.offset);
    if (!kinds_.emplace(std::string(id.text), kind).second) {
      Fail("duplicate id '" + std::string(id.text) + "'", id.offset);
    }
    passage_.nodes.push_back({std::string(id.text), kind, std::move(text)});
  }

  void Check() {
    std::set<std::string> has_parent;
    for (size_t i = 0; i < passage_.edges.size(); ++i) {
      const UccaEdge &e = passage_.edges[i];
      auto parent = kinds_.find(e.parent);
      if (parent == kinds_.end()) Fail("edge from missing id '" + e.parent + "'", edge_offsets_[i].first);
      if (!kinds_.contains(e.child)) Fail("edge to missing id '" + e.child + "'", edge_offsets_[i].second);
      if (parent->second == UccaNode::Kind::kTerminal) {
        Fail("terminal '" + e.parent + "' cannot have children", edge_offsets_[i].first);
      }
      has_parent.insert(e.child);
    }
    if (passage_.root.empty()) Fail("missing root record", end_);
    auto root = kinds_.find(passage_.root);
    if (root == kinds_.end()) Fail("root '" + passage_.root + "' is not declared", root_offset_);
    if (root->second == UccaNode::Kind::kTerminal) {
      Fail("root '" + passage_.root + "' is a terminal", root_offset_);
    }
    for (const UccaNode &n : passage_.nodes) {
      if (n.id != passage_.root && !has_parent.contains(n.id)) {
        Fail("node '" + n.id + "' has no parent", end_);
      }
    }
  }

  std::string_view text_;
  size_t begin_;
  size_t end_;
  size_t root_offset_ = 0;
  UccaPassage passage_;
  std::map<std::string, UccaNode::Kind> kinds_;
  std::vector<std::pair<size_t, size_t>> edge_offsets_;
};

bool IsPassageHeader(std::string_view line) {
  size_t i = 0;
  while (i < line.size() && IsBlank(line[i])) ++i;
  line.remove_prefix(i);
  return line.starts_with("passage") &&
         (line.size() == 7 || IsBlank(line[7]));
}

}  // namespace

UccaPassage ParseUcca(std::string_view text) {
  return UccaParser(text, 0, text.size()).Parse();
}

std::vector<UccaPassage> ParseUccaPassages(std::string_view text) {
  std::vector<size_t> starts;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    if (IsPassageHeader(text.substr(pos, eol - pos))) starts.push_back(pos);
    pos = eol + 1;
  }
  if (starts.empty()) return {ParseUcca(text)};
  std::vector<UccaPassage> passages;
  for (size_t i = 0; i < starts.size(); ++i) {
    size_t body = text.find('\n', starts[i]);
    body = body == std::string_view::npos ? text.size() : body + 1;
    size_t end = i + 1 < starts.size() ? starts[i + 1] : text.size();
    passages.push_back(UccaParser(text, body, end).Parse());
  }
  return passages;
}

SemanticGraph UccaToGraph(const UccaPassage &passage) {
  SemanticGraph g;
  std::map<std::string, NodeId> ids;
  for (const UccaNode &n : passage.nodes) {
    NodeId id = n.kind == UccaNode::Kind::kUnit ? g.AddConcept("UCCA.Unit")
                                                : g.AddEntity(n.text, {"UCCA.Terminal"});
    ids.emplace(n.id, id);
  }
  std::vector<RoleEdge> edges;
  for (const UccaEdge &e : passage.edges) {
    edges.push_back({ids.at(e.parent), e.category, ids.at(e.child)});
  }
  AddRoleEdges(g, edges);
  return g;
}

}  // namespace metasrl
