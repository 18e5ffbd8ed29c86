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

#ifndef METASRL_CATALOGUE_H_
#define METASRL_CATALOGUE_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace metasrl {

struct RoleDefinition {
  std::string name;
  bool indexed = false;
  bool operator==(const RoleDefinition &) const = default;
};

// A concept and the roles it offers. Role names are unique.
struct ConceptDefinition {
  std::string name;
  std::vector<RoleDefinition> roles;
  std::string description;

  const RoleDefinition *FindRole(std::string_view role) const;

  // "Name(role, indexed[])".
  std::string Signature() const;

  bool operator==(const ConceptDefinition &) const = default;
};

// Registry of concept definitions keyed by name.
class ConceptCatalogue {
 public:
  // Adds a definition in place. Throws std::invalid_argument for an empty
  // name, duplicate role names, or a name that is already defined.
  void Define(ConceptDefinition def);

  const ConceptDefinition *Lookup(std::string_view name) const;
  bool Contains(std::string_view name) const {
    return Lookup(name) != nullptr;
  }

  // Entries sorted by concept name.
  const std::map<std::string, ConceptDefinition, std::less<>> &entries()
      const {
    return entries_;
  }
  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  bool operator==(const ConceptCatalogue &) const = default;

 private:
  std::map<std::string, ConceptDefinition, std::less<>> entries_;
};

// Value-returning form of ConceptCatalogue::Define.
ConceptCatalogue DefineConcept(ConceptCatalogue catalogue,
                               ConceptDefinition def);

// Catalogue for the well/office example graph:
// Bottom(Container, Contained), Lighting(Object, Degree, Source),
// IsA(A, B, Degree), Well(), Room(), Office().
ConceptCatalogue WellExampleCatalogue();

// Catalogue for causation graphs built from CoNLL annotations:
// Sentence(content, source), Causation(cause[], effect[]),
// LanguageDoc(language, element[]).
ConceptCatalogue CausationCatalogue();

}  // namespace metasrl

#endif  // METASRL_CATALOGUE_H_
