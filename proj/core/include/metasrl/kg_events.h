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


// Conversion of knowledge-graph event triples into semantic graphs.
//
// Each event (a subject typed sem:Event, or either side of a
// sem:subEventOf triple) becomes a "sem:Event" concept with an `id` role
// to an entity holding its prefixed name. rdfs:label literals attach
// directly to the event. sem:subEventOf triples become subEvent[1..k]
// roles owned by the encompassing event, in document order. Any other
// triple (E, p, o) adds role p to a concept named p, which carries `id`
// (resource object) or `value` (literal object) to an entity.
//
// Triples of non-event subjects S form detached islands: concept p with
// `subject` to a shared entity for S plus the same `id`/`value` role.

#ifndef METASRL_KG_EVENTS_H_
#define METASRL_KG_EVENTS_H_

#include <vector>

#include "metasrl/errors.h"
#include "metasrl/graph.h"
#include "metasrl/turtle.h"

namespace metasrl {

inline constexpr std::string_view kSemNamespace =
    "http://semanticweb.cs.vu.nl/2009/11/sem/";
inline constexpr std::string_view kRdfsNamespace =
    "http://www.w3.org/2000/01/rdf-schema#";

// Throws ConversionError on an empty literal.
SemanticGraph EventsToGraph(const TripleStore &store);

// "sem:Event" concepts that are nobody's sub-event, in id order.
std::vector<NodeId> TopLevelEvents(const SemanticGraph &graph);

}  // namespace metasrl

#endif  // METASRL_KG_EVENTS_H_
