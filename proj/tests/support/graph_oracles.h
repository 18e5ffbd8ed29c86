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


#ifndef METASRL_TESTS_SUPPORT_GRAPH_ORACLES_H_
#define METASRL_TESTS_SUPPORT_GRAPH_ORACLES_H_

#include <cstdint>
#include <string>

#include "metasrl/graph.h"

namespace metasrl::testing {

struct RandomGraphOptions {
  size_t max_nodes = 30;
  size_t max_edges = 60;
};

// Valid graph drawn from a seeded std::mt19937. Covers all node kinds,
// plain and indexed roles, caller-chosen ids, and values that need
// escaping.
SemanticGraph RandomValidGraph(uint32_t seed, const RandomGraphOptions &options = {});

// Brute-force isomorphism: a bijection between node sets that preserves
// kinds, payloads and the labelled edge multiset. Ids are ignored.
bool Isomorphic(const SemanticGraph &a, const SemanticGraph &b);

// Reads a whole file; throws std::runtime_error when unreadable.
std::string ReadTextFile(const std::string &path);

}  // namespace metasrl::testing

#endif  // METASRL_TESTS_SUPPORT_GRAPH_ORACLES_H_
