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


#include "support/suite_oracles.h"

#include <regex>
#include <set>
#include <sstream>

namespace metasrl::testing {

ConceptCatalogue MatrixCatalogue() {
  ConceptCatalogue cat;
  cat.Define({"Bottom", {{"Container"}, {"Contained"}}, ""});
  cat.Define({"Well", {}, ""});
  cat.Define({"Event", {{"subEvent", true}, {"id"}}, ""});
  return cat;
}

std::vector<MatrixCase> ViolationMatrix() {
  return {
      {ViolationCode::kEntityOutEdge, false,
       [] {
         SemanticGraph g;
         g.InsertNode(NodeId("e"), EntityNode{"4", {}});
         g.InsertNode(NodeId("w"), ConceptNode{"Well"});
         g.AppendEdgeUnchecked({NodeId("e"), RoleLabel("Container"), NodeId("w")});
         return g;
       }},
      {ViolationCode::kOmittedOutEdge, false,
       [] {
         SemanticGraph g;
         g.InsertNode(NodeId("o"), OmittedNode{});
         g.InsertNode(NodeId("w"), ConceptNode{"Well"});
         g.AppendEdgeUnchecked({NodeId("o"), RoleLabel("Container"), NodeId("w")});
         return g;
       }},
      {ViolationCode::kEdgeFromNonConcept, false,
       [] {
         SemanticGraph g;
         g.InsertNode(NodeId("w"), ConceptNode{"Well"});
         g.AppendEdgeUnchecked({NodeId("ghost"), RoleLabel("Container"), NodeId("w")});
         return g;
       }},
      {ViolationCode::kDanglingTarget, false,
       [] {
         SemanticGraph g;
         g.InsertNode(NodeId("b"), ConceptNode{"Bottom"});
         g.AppendEdgeUnchecked({NodeId("b"), RoleLabel("Container"), NodeId("ghost")});
         return g;
       }},
      {ViolationCode::kDuplicateRoleSlot, false,
       [] {
         SemanticGraph g;
         g.InsertNode(NodeId("b"), ConceptNode{"Bottom"});
         g.InsertNode(NodeId("w1"), ConceptNode{"Well"});
         g.InsertNode(NodeId("w2"), ConceptNode{"Well"});
         g.AppendEdgeUnchecked({NodeId("b"), RoleLabel("Container"), NodeId("w1")});
         g.AppendEdgeUnchecked({NodeId("b"), RoleLabel("Container"), NodeId("w2")});
         return g;
       }},
      {ViolationCode::kBadIndexSet, false,
       [] {
         SemanticGraph g;
         NodeId ev = g.AddConcept("Event");
         NodeId a = g.AddConcept("Event");
         NodeId b = g.AddConcept("Event");
         g.AddEdge(ev, RoleLabel("subEvent", 1), a);
         g.AddEdge(ev, RoleLabel("subEvent", 3), b);
         return g;
       }},
      {ViolationCode::kUnknownConcept, true,
       [] {
         SemanticGraph g;
         g.AddConcept("Mystery");
         return g;
       }},
      {ViolationCode::kUnknownRole, true,
       [] {
         SemanticGraph g;
         NodeId b = g.AddConcept("Bottom");
         g.AddEdge(b, RoleLabel("Lid"), g.AddConcept("Well"));
         return g;
       }},
      {ViolationCode::kIndexingMismatch, true,
       [] {
         SemanticGraph g;
         NodeId b = g.AddConcept("Bottom");
         g.AddEdge(b, RoleLabel("Container", 1), g.AddConcept("Well"));
         return g;
       }},
  };
}

std::vector<std::string> PenmanBlocks(const std::string &text) {
  std::vector<std::string> blocks;
  std::istringstream in(text);
  std::string block;
  for (std::string line; std::getline(in, line);) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      if (block.find('(') != std::string::npos) blocks.push_back(block);
      block.clear();
    } else {
      block += line + "\n";
    }
  }
  if (block.find('(') != std::string::npos) blocks.push_back(block);
  return blocks;
}

SurfaceCounts CountSurface(const std::string &text) {
  std::vector<std::string> tokens;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    size_t first = line.find_first_not_of(" \t");
    if (first != std::string::npos && line[first] == '#') continue;
    size_t i = 0;
    while (i < line.size()) {
      char c = line[i];
      if (c == ' ' || c == '\t' || c == '\r') {
        ++i;
      } else if (c == '(' || c == ')' || c == '/') {
        tokens.emplace_back(1, c);
        ++i;
      } else if (c == '"') {
        size_t j = i + 1;
        while (j < line.size() && line[j] != '"') j += line[j] == '\\' ? 2 : 1;
        tokens.push_back(line.substr(i, j + 1 - i));
        i = j + 1;
      } else {
        size_t j = i;
        while (j < line.size() && std::string(" \t\r()/\"").find(line[j]) == std::string::npos) ++j;
        std::string tok = line.substr(i, j - i);
        tokens.push_back(tok.substr(0, tok.find('~')));
        i = j;
      }
    }
  }
  std::set<std::string> defined;
  for (size_t i = 0; i + 1 < tokens.size(); ++i) {
    if (tokens[i + 1] == "/") defined.insert(tokens[i]);
  }
  SurfaceCounts counts;
  counts.variables = defined.size();
  for (size_t i = 0; i + 1 < tokens.size(); ++i) {
    if (tokens[i].empty() || tokens[i][0] != ':') continue;
    ++counts.slots;
    const std::string &next = tokens[i + 1];
    if (next != "(" && !defined.contains(next)) ++counts.constants;
  }
  return counts;
}

SemanticGraph ExpectedEventsGraph() {
  SemanticGraph want;
  NodeId top = want.AddConcept("sem:Event");
  want.AddEdge(top, RoleLabel("id"), want.AddEntity("wd:Q1073320"));
  want.AddEdge(top, RoleLabel("rdfs:label"), want.AddEntity("Insurrection of 10 August 1792"));
  NodeId stamp = want.AddConcept("sem:hasTimeStamp");
  want.AddEdge(top, RoleLabel("sem:hasTimeStamp"), stamp);
  want.AddEdge(stamp, RoleLabel("value"), want.AddEntity("1792-08-10"));
  NodeId place = want.AddConcept("sem:hasPlace");
  want.AddEdge(top, RoleLabel("sem:hasPlace"), place);
  want.AddEdge(place, RoleLabel("id"), want.AddEntity("wd:Q90"));
  NodeId c1 = want.AddConcept("sem:Event");
  want.AddEdge(c1, RoleLabel("id"), want.AddEntity("wd:Q2986291"));
  NodeId c2 = want.AddConcept("sem:Event");
  want.AddEdge(c2, RoleLabel("id"), want.AddEntity("wd:Q3428516"));
  want.AddEdge(top, RoleLabel("subEvent", 1), c1);
  want.AddEdge(top, RoleLabel("subEvent", 2), c2);
  return want;
}

std::string ReflowTurtle(const std::string &ttl, std::mt19937 &rng) {
  static const std::vector<std::string> fillers = {" ", "  ", "\t", "\n", "\n\n",
                                                   " # note\n", "\n# x . ; ,\n  "};
  std::string out;
  char quote = 0;
  bool in_iri = false;
  bool in_comment = false;
  for (size_t i = 0; i < ttl.size(); ++i) {
    char c = ttl[i];
    if (in_comment) {
      if (c == '\n') {
        in_comment = false;
        out += '\n';
      }
      continue;
    }
    if (quote != 0) {
      out += c;
      if (c == '\\') out += ttl[++i];
      else if (c == quote) quote = 0;
      continue;
    }
    if (in_iri) {
      out += c;
      if (c == '>') in_iri = false;
      continue;
    }
    if (c == '"' || c == '\'') quote = c;
    if (c == '<') in_iri = true;
    if (c == '#') {
      in_comment = true;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\n') {
      while (i + 1 < ttl.size() && (ttl[i + 1] == ' ' || ttl[i + 1] == '\t' || ttl[i + 1] == '\n')) ++i;
      out += fillers[std::uniform_int_distribution<size_t>(0, fillers.size() - 1)(rng)];
      continue;
    }
    out += c;
  }
  return out;
}

std::map<std::string, int> CausationSpanCounts(const ConllSentence &s) {
  std::map<std::string, int> counts;
  for (const ConllToken &t : s.tokens) {
    if (t.causation.rfind("B-", 0) == 0) ++counts[t.causation.substr(2)];
  }
  return counts;
}

std::vector<std::pair<size_t, size_t>> UccaDeclaredCounts(const std::string &text) {
  std::vector<std::pair<size_t, size_t>> declared;
  std::regex header(R"(^passage \S+ nodes=(\d+) edges=(\d+)\r?$)");
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    std::smatch m;
    if (std::regex_match(line, m, header)) declared.emplace_back(std::stoul(m[1]), std::stoul(m[2]));
  }
  return declared;
}

}  // namespace metasrl::testing
