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

#ifndef METASRL_TURTLE_H_
#define METASRL_TURTLE_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "metasrl/errors.h"

namespace metasrl {

inline constexpr std::string_view kRdfNamespace =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kXsdNamespace =
    "http://www.w3.org/2001/XMLSchema#";

// An RDF term: a resource (IRI) or a literal.
struct Term {
  enum class Kind { kResource, kLiteral };

  Kind kind = Kind::kResource;
  // Resources: the name as displayed, i.e. the prefixed name when one
  // applies ("wd:Q1"), otherwise "<iri>". Literals: the lexical form.
  std::string text;
  // Resources: the expanded IRI.
  std::string iri;
  // Literals only; datatype is a display name like "xsd:integer".
  std::string datatype;
  std::string language;

  bool is_resource() const { return kind == Kind::kResource; }
  bool is_literal() const { return kind == Kind::kLiteral; }
  bool operator==(const Term &) const = default;
};

struct Triple {
  Term subject;
  Term predicate;
  Term object;
  bool operator==(const Triple &) const = default;
};

struct TripleStore {
  std::map<std::string, std::string> prefixes;  // prefix -> namespace IRI
  std::vector<Triple> triples;                  // document order

  // Display name for an IRI: "p:local" for the longest declared
  // namespace that prefixes it, else "<iri>".
  std::string Compact(std::string_view iri) const;
};

// Parses the supported Turtle subset: @prefix / PREFIX directives,
// prefixed names, <IRI>s, the "a" keyword, string literals with @lang or
// ^^datatype, integer/decimal/boolean literals, ';' and ',' lists, '.'
// terminators and '#' comments. Blank nodes, collections, @base and long
// strings raise a ParseError whose message starts with
// "unsupported construct".
TripleStore ParseTurtle(std::string_view text);

}  // namespace metasrl

#endif  // METASRL_TURTLE_H_
