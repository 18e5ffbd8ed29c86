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

#ifndef METASRL_PENMAN_H_
#define METASRL_PENMAN_H_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "metasrl/errors.h"

namespace metasrl {

struct PenmanValue {
  enum class Kind {
    kNode,       // a nested (var / concept ...) defined in place
    kReference,  // a bare symbol naming a variable defined elsewhere
    kConstant,   // string literal, number or other symbol
  };

  Kind kind = Kind::kConstant;
  // Variable name for kNode/kReference; constant text otherwise, with the
  // quotes of a string literal removed.
  std::string text;
  bool quoted = false;

  bool is_variable() const { return kind != Kind::kConstant; }
  bool operator==(const PenmanValue &) const = default;
};

// One (owner, :role, value) slot. The role is stored without its colon.
struct PenmanSlot {
  std::string owner;
  std::string role;
  PenmanValue value;
  bool operator==(const PenmanSlot &) const = default;
};

struct PenmanTree {
  std::string root;
  // (variable, concept label) in definition order.
  std::vector<std::pair<std::string, std::string>> variables;
  // Slots in surface order (pre-order).
  std::vector<PenmanSlot> slots;

  const std::string *ConceptOf(std::string_view variable) const;
};

// Parses a single PENMAN expression. Metadata lines starting with '#' and
// alignment suffixes (~e.N) are skipped. A bare symbol is a variable
// reference when the expression defines that variable; an undefined
// variable-shaped symbol (a lower-case letter followed only by digits,
// e.g. "x" or "b2") is an error. Throws ParseError (with byte offset) for
// unbalanced parentheses, a missing '/', a role without value, undefined
// references, duplicate definitions, or trailing content.
PenmanTree ParsePenman(std::string_view text);

// Parses every expression in a file (blank-line separated blocks).
std::vector<PenmanTree> ParsePenmanDocument(std::string_view text);

// A document-level UMR relation such as (s1t2 :contained s1t).
struct UmrRelation {
  std::string source;
  std::string relation;
  std::string target;
  SourceLocation location;
};

struct UmrDocument {
  std::vector<PenmanTree> sentences;
  std::vector<UmrRelation> relations;
};

// Reads sentence-level PENMAN blocks and document-level blocks. A block
// whose first line is "# doc" holds one "(source rel target)" relation per
// line; the relation may carry a leading colon.
UmrDocument ParseUmr(std::string_view text);

}  // namespace metasrl

#endif  // METASRL_PENMAN_H_
