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


#include <gtest/gtest.h>

#include <functional>

#include "metasrl/catalogue.h"
#include "metasrl/validation.h"
#include "support/suite_oracles.h"
#include "support/well_example.h"

namespace metasrl {
namespace {

TEST(ValidationMatrixTest, EachCodeHasAnExclusiveMinimalTrigger) {
  ConceptCatalogue cat = testing::MatrixCatalogue();
  std::set<ViolationCode> seen;
  for (const testing::MatrixCase &c : testing::ViolationMatrix()) {
    SCOPED_TRACE(ViolationCodeName(c.code));
    SemanticGraph g = c.build();
    EXPECT_LE(g.node_count(), 3u);
    std::vector<Violation> strict = Validate(g, &cat, ValidationMode::kStrict);
    ASSERT_EQ(strict.size(), 1u);
    EXPECT_EQ(strict[0].code, c.code);
    std::vector<Violation> lax = Validate(g, &cat, ValidationMode::kLax);
    if (c.strict_only) {
      EXPECT_TRUE(lax.empty());
    } else {
      ASSERT_EQ(lax.size(), 1u);
      EXPECT_EQ(lax[0].code, c.code);
    }
    seen.insert(c.code);
  }
  EXPECT_EQ(seen.size(), 9u);
}

TEST(ValidationTest, WellExampleIsStrictlyValid) {
  auto w = testing::BuildWellExample();
  ConceptCatalogue cat = WellExampleCatalogue();
  EXPECT_TRUE(Validate(w.graph, &cat, ValidationMode::kStrict).empty());
  EXPECT_TRUE(Validate(w.graph).empty());
}

TEST(ValidationTest, StrictNeedsCatalogue) {
  SemanticGraph g;
  EXPECT_THROW(Validate(g, nullptr, ValidationMode::kStrict), std::invalid_argument);
}

TEST(ValidationTest, PlainAndIndexedMixIsBadIndexSet) {
  SemanticGraph g;
  NodeId ev = g.AddConcept("Event");
  g.AddEdge(ev, RoleLabel("subEvent"), g.AddConcept("Event"));
  g.AddEdge(ev, RoleLabel("subEvent", 1), g.AddConcept("Event"));
  std::vector<Violation> v = Validate(g);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].code, ViolationCode::kBadIndexSet);
}

TEST(ValidationTest, IndexSetMustStartAtOne) {
  SemanticGraph g;
  NodeId ev = g.AddConcept("Event");
  g.AddEdge(ev, RoleLabel("subEvent", 2), g.AddConcept("Event"));
  ASSERT_EQ(Validate(g).size(), 1u);
  EXPECT_EQ(Validate(g)[0].code, ViolationCode::kBadIndexSet);
}

TEST(ValidationTest, UnknownConceptSuppressesRoleChecks) {
  ConceptCatalogue cat = testing::MatrixCatalogue();
  SemanticGraph g;
  NodeId m = g.AddConcept("Mystery");
  g.AddEdge(m, RoleLabel("anything", 1), g.AddConcept("Well"));
  std::vector<Violation> v = Validate(g, &cat, ValidationMode::kStrict);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].code, ViolationCode::kUnknownConcept);
  EXPECT_EQ(v[0].SubjectString(), m.str());
}

TEST(ValidationTest, EdgeSubjectFormatting) {
  SemanticGraph g;
  g.InsertNode(NodeId("b"), ConceptNode{"Bottom"});
  g.AppendEdgeUnchecked({NodeId("b"), RoleLabel("x", 2), NodeId("gone")});
  std::vector<Violation> v = Validate(g);
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v[0].SubjectString(), "b -x[2]-> gone");
}

TEST(ValidationTest, CodeNames) {
  EXPECT_STREQ(ViolationCodeName(ViolationCode::kEntityOutEdge), "ENTITY_OUT_EDGE");
  EXPECT_STREQ(ViolationCodeName(ViolationCode::kOmittedOutEdge), "OMITTED_OUT_EDGE");
  EXPECT_STREQ(ViolationCodeName(ViolationCode::kEdgeFromNonConcept), "EDGE_FROM_NON_CONCEPT");
  EXPECT_STREQ(ViolationCodeName(ViolationCode::kDanglingTarget), "DANGLING_TARGET");
  EXPECT_STREQ(ViolationCodeName(ViolationCode::kDuplicateRoleSlot), "DUPLICATE_ROLE_SLOT");
  EXPECT_STREQ(ViolationCodeName(ViolationCode::kBadIndexSet), "BAD_INDEX_SET");
  EXPECT_STREQ(ViolationCodeName(ViolationCode::kUnknownConcept), "UNKNOWN_CONCEPT");
  EXPECT_STREQ(ViolationCodeName(ViolationCode::kUnknownRole), "UNKNOWN_ROLE");
  EXPECT_STREQ(ViolationCodeName(ViolationCode::kIndexingMismatch), "INDEXING_MISMATCH");
}

}  // namespace
}  // namespace metasrl
