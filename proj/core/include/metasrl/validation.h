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

#ifndef METASRL_VALIDATION_H_
#define METASRL_VALIDATION_H_

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "metasrl/catalogue.h"
#include "metasrl/graph.h"

namespace metasrl {

struct Violation {
  ViolationCode code;
  std::variant<NodeId, Edge> subject;
  std::string message;

  // Node id, or "source -label-> target" for an edge.
  std::string SubjectString() const;

  bool operator==(const Violation &) const = default;
};

enum class ValidationMode { kLax, kStrict };

// Checks the structural rules (both modes) and, in strict mode, the
// catalogue rules. Strict mode requires a catalogue and throws
// std::invalid_argument without one. The result order is deterministic:
// edge checks in edge order, then index sets by (source, role), then
// concept names by node id.
std::vector<Violation> Validate(const SemanticGraph &graph,
                                const ConceptCatalogue *catalogue,
                                ValidationMode mode);

inline std::vector<Violation> Validate(const SemanticGraph &graph) {
  return Validate(graph, nullptr, ValidationMode::kLax);
}

// Thrown by operations that require a lax-valid graph.
class InvalidGraphError : public std::runtime_error {
 public:
  explicit InvalidGraphError(std::vector<Violation> violations);

  const std::vector<Violation> &violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

}  // namespace metasrl

#endif  // METASRL_VALIDATION_H_
