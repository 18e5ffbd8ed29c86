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

// Canonical XML exchange format for semantic graphs and catalogues.
//
//   semanticgraph(version="1") ::= (concept | entity | omitted)*
//   concept(id, name)          ::= role*
//   role(name, index?, target) ::= empty
//   entity(id, value)          ::= class*
//   class(name)                ::= empty
//   omitted(id)                ::= empty
//   catalogue(version="1")     ::= concept*
//   concept(name)              ::= role*      role(name, indexed?)
//
// Output is compact (no whitespace between elements), nodes sorted by id,
// roles in insertion order under their source concept.

#ifndef METASRL_XML_IO_H_
#define METASRL_XML_IO_H_

#include <string>
#include <string_view>

#include "metasrl/catalogue.h"
#include "metasrl/errors.h"
#include "metasrl/graph.h"

namespace metasrl {

// Throws InvalidGraphError if the graph fails lax validation.
std::string ToXml(const SemanticGraph &graph);

// Throws ParseError on malformed markup and SchemaError when the document
// breaks the grammar: unknown elements or attributes, missing attributes,
// bad version, id collisions, or role targets naming a missing id.
//
// A role element is also accepted under entity and omitted elements so
// that such graphs can be loaded and reported by Validate().
SemanticGraph FromXml(std::string_view document);

std::string CatalogueToXml(const ConceptCatalogue &catalogue);
ConceptCatalogue CatalogueFromXml(std::string_view document);

}  // namespace metasrl

#endif  // METASRL_XML_IO_H_
