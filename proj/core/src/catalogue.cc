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

#include "metasrl/catalogue.h"

#include <set>
#include <stdexcept>

namespace metasrl {

const RoleDefinition *ConceptDefinition::FindRole(std::string_view role) const {
  for (const RoleDefinition &r : roles) {
    if (r.name == role) return &r;
  }
  return nullptr;
}

std::string ConceptDefinition::Signature() const {
  std::string out = name + "(";
  for (size_t i = 0; i < roles.size(); ++i) {
    if (i > 0) out += ", ";
    out += roles[i].name;
    if (roles[i].indexed) out += "[]";
  }
  out += ")";
  return out;
}

void ConceptCatalogue::Define(ConceptDefinition def) {
  if (def.name.empty()) throw std::invalid_argument("concept name is empty");
  std::set<std::string_view> seen;
  for (const RoleDefinition &r : def.roles) {
    if (r.name.empty()) {
      throw std::invalid_argument("concept " + def.name +
                                  " declares an empty role name");
    }
    if (!seen.insert(r.name).second) {
      throw std::invalid_argument("concept " + def.name +
                                  " declares role " + r.name + " twice");
    }
  }
  if (entries_.contains(def.name)) {
    throw std::invalid_argument("concept " + def.name + " is already defined");
  }
  std::string key = def.name;
  entries_.emplace(std::move(key), std::move(def));
}

const ConceptDefinition *ConceptCatalogue::Lookup(std::string_view name) const {
  auto it = entries_.find(name);
  return it == entries_.end() ? nullptr : &it->second;
}

ConceptCatalogue DefineConcept(ConceptCatalogue catalogue,
                               ConceptDefinition def) {
  catalogue.Define(std::move(def));
  return catalogue;
}

ConceptCatalogue WellExampleCatalogue() {
  ConceptCatalogue c;
  c.Define({"Bottom",
            {{"Container"}, {"Contained"}},
            "Contained sits at the bottom of Container."});
  c.Define({"Lighting",
            {{"Object"}, {"Degree"}, {"Source"}},
            "Object is lit to Degree, optionally by Source."});
  c.Define({"IsA", {{"A"}, {"B"}, {"Degree"}}, "A is equal to B."});
  c.Define({"Well", {}, ""});
  c.Define({"Room", {}, ""});
  c.Define({"Office", {}, ""});
  return c;
}

ConceptCatalogue CausationCatalogue() {
  ConceptCatalogue c;
  c.Define({"Sentence",
            {{"content"}, {"source"}},
            "A sentence-sized portion of analysed text."});
  c.Define({"Causation",
            {{"cause", true}, {"effect", true}},
            "Cause brings about effect."});
  c.Define({"LanguageDoc",
            {{"language"}, {"element", true}},
            "A document in a natural language made of surface elements."});
  return c;
}

}  // namespace metasrl
