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

// Conversion of AMR and UMR structures into semantic graphs.
//
// AMR: every variable becomes a concept named by its concept label, every
// constant occurrence an entity, every slot an edge. References reuse the
// referenced variable's node. An inverse role "X-of" whose value is a
// variable becomes the forward edge value -X-> owner. When a node would
// fill the same role more than once the role switches to X[1..k].
//
// UMR: sentences convert as AMR and are combined by disjoint union. A
// constant used as the source of a document-level relation is promoted to
// one concept named by its token; each relation (x, rel, y) then becomes
// an edge x -rel-> y. Coreference relations are edges too; nodes are never
// unified across sentences.

#ifndef METASRL_AMR_H_
#define METASRL_AMR_H_

#include <span>

#include "metasrl/errors.h"
#include "metasrl/graph.h"
#include "metasrl/penman.h"

namespace metasrl {

SemanticGraph AmrToGraph(const PenmanTree &tree);

// Disjoint union of the per-tree conversions, in order.
SemanticGraph AmrToGraph(std::span<const PenmanTree> trees);

struct UmrOptions {
  // When false, constants stay entities even if a document-level relation
  // starts at them. The result then carries entity out-edges and fails
  // validation; this exists to demonstrate why promotion is needed.
  bool promote_constants = true;
};

// Throws ConversionError when a relation token names neither a variable
// nor a constant of any sentence, or names variables of several sentences.
SemanticGraph UmrToGraph(const UmrDocument &doc, const UmrOptions &options = {});

}  // namespace metasrl

#endif  // METASRL_AMR_H_
