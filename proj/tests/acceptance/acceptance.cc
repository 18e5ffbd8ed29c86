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


// Acceptance runner. Prints one PASS/FAIL line per criterion and exits
// non-zero when any criterion fails.
//
//   metasrl_acceptance CLI_PATH DATA_DIR
//   metasrl_acceptance --emit-random-xml COUNT

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "metasrl/amr.h"
#include "metasrl/catalogue.h"
#include "metasrl/conll.h"
#include "metasrl/dot.h"
#include "metasrl/kg_events.h"
#include "metasrl/penman.h"
#include "metasrl/turtle.h"
#include "metasrl/ucca.h"
#include "metasrl/validation.h"
#include "metasrl/xml_io.h"
#include "support/graph_oracles.h"
#include "support/suite_oracles.h"
#include "support/well_example.h"

namespace metasrl::acceptance {
namespace {

namespace fs = std::filesystem;
using testing::ReadTextFile;

constexpr int kRandomGraphs = 1000;

class Check {
 public:
  void Expect(bool condition, const std::string &what) {
    if (!condition) failures_.push_back(what);
  }
  bool ok() const { return failures_.empty(); }
  const std::vector<std::string> &failures() const { return failures_; }

 private:
  std::vector<std::string> failures_;
};

struct Context {
  std::string cli;
  std::string data;
  std::string self;
  fs::path work;

  std::string Data(const std::string &name) const { return data + "/" + name; }
};

size_t DotNodeStatements(const std::string &dot) {
  static const std::regex node_re(R"(^\s*"[^"]+"\s*\[)");
  size_t n = 0;
  std::istringstream in(dot);
  for (std::string line; std::getline(in, line);) {
    if (line.find("->") == std::string::npos && std::regex_search(line, node_re)) ++n;
  }
  return n;
}

std::string Quote(const std::string &arg) {
  std::string out = "'";
  for (char c : arg) {
    if (c == '\'') out += "'\\''";
    else out += c;
  }
  return out + "'";
}

int ExitStatus(int raw) { return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1; }

struct Process {
  int code;
  std::string out;
};

Process Capture(const std::string &command) {
  Process p{-1, ""};
  FILE *pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return p;
  char buffer[65536];
  size_t n;
  while ((n = fread(buffer, 1, sizeof(buffer), pipe)) > 0) p.out.append(buffer, n);
  p.code = ExitStatus(pclose(pipe));
  return p;
}

int RunCli(const Context &ctx, const std::vector<std::string> &args) {
  std::string command = Quote(ctx.cli);
  for (const std::string &a : args) command += " " + Quote(a);
  command += " >" + Quote((ctx.work / "last.out").string()) + " 2>" +
             Quote((ctx.work / "last.err").string());
  return ExitStatus(std::system(command.c_str()));
}

const NodeId *ConceptNamed(const SemanticGraph &g, const std::string &name) {
  for (const auto &[id, node] : g.nodes()) {
    if (auto *c = std::get_if<ConceptNode>(&node); c && c->name == name) return &id;
  }
  return nullptr;
}

void WellExampleReconstruction(const Context &, Check &check) {
  testing::WellExample w = testing::BuildWellExample();
  ConceptCatalogue cat = WellExampleCatalogue();
  check.Expect(w.graph.node_count() == 8, "8 nodes");
  check.Expect(Validate(w.graph, &cat, ValidationMode::kStrict).empty(), "strict validation is clean");
  const EntityNode *degree = w.graph.FindEntity(w.degree);
  check.Expect(degree != nullptr && degree->value == "4" &&
                   degree->classes == std::vector<std::string>{"5-level degree"},
               "degree entity");
  const Edge *prob = w.graph.FindEdge(w.isa, RoleLabel("Degree"));
  check.Expect(prob != nullptr && w.graph.FindEntity(prob->target) != nullptr,
               "IsA probability degree slot holds an entity");
  check.Expect(DotNodeStatements(ToDot(w.graph)) == 8, "8 DOT node statements");
}

void ValidationMatrix(const Context &, Check &check) {
  ConceptCatalogue cat = testing::MatrixCatalogue();
  std::set<ViolationCode> covered;
  for (const testing::MatrixCase &c : testing::ViolationMatrix()) {
    std::string name = ViolationCodeName(c.code);
    SemanticGraph g = c.build();
    std::vector<Violation> strict = Validate(g, &cat, ValidationMode::kStrict);
    check.Expect(strict.size() == 1 && strict[0].code == c.code, name + ": strict gives exactly this code");
    std::vector<Violation> lax = Validate(g, &cat, ValidationMode::kLax);
    if (c.strict_only) {
      check.Expect(lax.empty(), name + ": silent in lax mode");
    } else {
      check.Expect(lax.size() == 1 && lax[0].code == c.code, name + ": lax gives exactly this code");
    }
    covered.insert(c.code);
  }
  check.Expect(covered.size() == 9, "all 9 codes covered");
}

std::string RandomXmlStream(int count) {
  std::string out;
  for (int seed = 0; seed < count; ++seed) {
    out += ToXml(testing::RandomValidGraph(static_cast<uint32_t>(seed)));
    out += '\n';
  }
  return out;
}

void SerializationRoundTrip(const Context &ctx, Check &check) {
  int mismatches = 0;
  for (int seed = 0; seed < kRandomGraphs; ++seed) {
    SemanticGraph g = testing::RandomValidGraph(static_cast<uint32_t>(seed));
    if (!StructurallyEqual(FromXml(ToXml(g)), g)) ++mismatches;
  }
  check.Expect(mismatches == 0, std::to_string(mismatches) + " round-trip mismatches");

  std::string here = RandomXmlStream(kRandomGraphs);
  std::string command = Quote(ctx.self) + " --emit-random-xml " + std::to_string(kRandomGraphs);
  Process first = Capture(command);
  Process second = Capture(command);
  check.Expect(first.code == 0 && second.code == 0, "emit processes exit 0");
  check.Expect(first.out == second.out, "two processes emit identical bytes");
  check.Expect(first.out == here, "child process bytes match this process");
}

void AmrConversion(const Context &ctx, Check &check) {
  std::vector<std::string> blocks = testing::PenmanBlocks(ReadTextFile(ctx.Data("amr_suite.txt")));
  check.Expect(blocks.size() == 20, "20 suite cases");
  std::regex features[] = {std::regex(R"(:polarity\s+-)"), std::regex(R"(-of\s)"),
                           std::regex(R"(:quant\s+\d)")};
  bool has_feature[3] = {false, false, false};
  bool reentrancy = false;
  for (size_t i = 0; i < blocks.size(); ++i) {
    const std::string &block = blocks[i];
    testing::SurfaceCounts counts = testing::CountSurface(block);
    SemanticGraph g = AmrToGraph(ParsePenman(block));
    std::string tag = "case " + std::to_string(i + 1);
    check.Expect(g.node_count() == counts.variables + counts.constants, tag + ": node count");
    check.Expect(g.edge_count() == counts.slots, tag + ": edge count");
    for (int f = 0; f < 3; ++f) has_feature[f] |= std::regex_search(block, features[f]);
    for (const auto &[id, node] : g.nodes()) {
      reentrancy |= KindOf(node) == NodeKind::kConcept && g.InDegree(id) >= 2;
    }
  }
  check.Expect(has_feature[0] && has_feature[1] && has_feature[2] && reentrancy,
               "suite covers polarity, inverse roles, quantities and re-entrancy");

  std::vector<std::string> pairs = testing::PenmanBlocks(ReadTextFile(ctx.Data("inverse_pairs.txt")));
  check.Expect(pairs.size() == 5, "5 inverse pairs");
  for (size_t i = 0; i < pairs.size(); ++i) {
    std::vector<PenmanTree> trees = ParsePenmanDocument(pairs[i]);
    check.Expect(trees.size() == 2 && testing::Isomorphic(AmrToGraph(trees[0]), AmrToGraph(trees[1])),
                 "pair " + std::to_string(i + 1) + " equivalent");
  }
}

void UmrConversion(const Context &ctx, Check &check) {
  UmrDocument doc = ParseUmr(ReadTextFile(ctx.Data("umr_s1t2.txt")));
  SemanticGraph g = UmrToGraph(doc);
  const NodeId *s1t2 = ConceptNamed(g, "s1t2");
  check.Expect(s1t2 != nullptr, "s1t2 is a concept");
  if (s1t2 != nullptr) {
    bool temporal_in = false;
    for (const Edge &e : g.edges()) temporal_in |= e.target == *s1t2 && e.label.name() == "temporal";
    check.Expect(temporal_in, "incoming temporal edge");
    check.Expect(g.FindEdge(*s1t2, RoleLabel("contained")) != nullptr, "outgoing contained edge");
  }
  check.Expect(Validate(g).empty(), "promoted conversion passes lax validation");

  SemanticGraph naive = UmrToGraph(doc, {.promote_constants = false});
  std::vector<Violation> v = Validate(naive);
  bool entity_out = false;
  for (const Violation &x : v) entity_out |= x.code == ViolationCode::kEntityOutEdge;
  check.Expect(entity_out, "naive conversion fails lax validation");
}

void KgConversion(const Context &ctx, Check &check) {
  std::string ttl = ReadTextFile(ctx.Data("events.ttl"));
  SemanticGraph g = EventsToGraph(ParseTurtle(ttl));
  check.Expect(testing::Isomorphic(g, testing::ExpectedEventsGraph()), "rule structure");
  check.Expect(Validate(g).empty(), "valid");

  std::vector<NodeId> tops = TopLevelEvents(g);
  check.Expect(tops.size() == 1, "one top-level event");
  if (tops.size() == 1) {
    std::vector<std::string> children;
    for (int i = 1; i <= 3; ++i) {
      const Edge *e = g.FindEdge(tops[0], RoleLabel("subEvent", i));
      if (e == nullptr) break;
      const Edge *id = g.FindEdge(e->target, RoleLabel("id"));
      children.push_back(id ? g.FindEntity(id->target)->value : "");
    }
    check.Expect(children == std::vector<std::string>{"wd:Q2986291", "wd:Q3428516"},
                 "subEvent[1..2] in document order");
  }

  std::string reference = ToXml(g);
  check.Expect(reference + "\n" == ReadTextFile(ctx.Data("events.expected.xml")), "golden XML bytes");
  check.Expect(ToXml(EventsToGraph(ParseTurtle(ReadTextFile(ctx.Data("events_reformatted.ttl"))))) ==
                   reference,
               "reformatted file gives identical bytes");
  std::mt19937 rng(20);
  int differing = 0;
  for (int i = 0; i < 100; ++i) {
    if (ToXml(EventsToGraph(ParseTurtle(testing::ReflowTurtle(ttl, rng)))) != reference) ++differing;
  }
  check.Expect(differing == 0, std::to_string(differing) + " reflowed variants differ");
}

void ConllConversion(const Context &ctx, Check &check) {
  std::vector<ConllSentence> sentences = ParseConll(ReadTextFile(ctx.Data("causation_it.conll")));
  check.Expect(sentences.size() == 5, "5 sentences");
  ConceptCatalogue cat = CausationCatalogue();
  int cause_only_with_omitted_effect = 0;
  for (size_t i = 0; i < sentences.size(); ++i) {
    const ConllSentence &s = sentences[i];
    std::string tag = "sentence " + std::to_string(i + 1);
    check.Expect(s.language == "it", tag + ": language");
    SemanticGraph g = CausationToGraph(s);
    check.Expect(Validate(g, &cat, ValidationMode::kStrict).empty(), tag + ": strict validation");

    std::string annotated;
    for (const ConllToken &t : s.tokens) {
      if (t.causation != "O") annotated += (annotated.empty() ? "" : " ") + t.form;
    }
    std::string rebuilt;
    if (const NodeId *doc = ConceptNamed(g, "LanguageDoc")) {
      for (int k = 1;; ++k) {
        const Edge *e = g.FindEdge(*doc, RoleLabel("element", k));
        if (e == nullptr) break;
        rebuilt += (rebuilt.empty() ? "" : " ") + g.FindEntity(e->target)->value;
      }
    }
    check.Expect(rebuilt == annotated, tag + ": span text reconstruction");

    std::map<std::string, int> spans = testing::CausationSpanCounts(s);
    if (spans["Cause"] > 0 && spans["Effect"] == 0) {
      const NodeId *causation = ConceptNamed(g, "Causation");
      const Edge *effect = causation ? g.FindEdge(*causation, RoleLabel("effect", 1)) : nullptr;
      const Node *target = effect ? g.Find(effect->target) : nullptr;
      if (target != nullptr && KindOf(*target) == NodeKind::kOmitted) ++cause_only_with_omitted_effect;
    }
  }
  check.Expect(cause_only_with_omitted_effect == 1, "cause-only sentence has an omitted effect");
}

void UccaConversion(const Context &ctx, Check &check) {
  std::string text = ReadTextFile(ctx.Data("ucca_suite.txt"));
  std::vector<UccaPassage> passages = ParseUccaPassages(text);
  std::vector<std::pair<size_t, size_t>> declared = testing::UccaDeclaredCounts(text);
  check.Expect(passages.size() == 10 && declared.size() == 10, "10 passages");
  size_t multi_parent = 0;
  for (size_t i = 0; i < passages.size() && i < declared.size(); ++i) {
    std::string tag = "passage " + std::to_string(i + 1);
    SemanticGraph g = UccaToGraph(passages[i]);
    check.Expect(g.node_count() == declared[i].first, tag + ": node count");
    check.Expect(g.edge_count() == declared[i].second, tag + ": edge count");
    bool multi = false;
    for (const auto &[id, node] : g.nodes()) {
      if (const auto *c = std::get_if<ConceptNode>(&node)) {
        check.Expect(c->name == "UCCA.Unit", tag + ": unit named UCCA.Unit");
      }
      multi |= g.InDegree(id) >= 2;
    }
    multi_parent += multi;
  }
  check.Expect(multi_parent >= 1, "a multi-parent passage");
}

void CliEndToEnd(const Context &ctx, Check &check) {
  auto path = [&](const std::string &name) { return (ctx.work / name).string(); };

  check.Expect(RunCli(ctx, {"convert", "--from", "ttl", "--to", "xml", ctx.Data("events.ttl"), "-o",
                            path("events.xml")}) == 0,
               "ttl->xml exits 0");
  check.Expect(RunCli(ctx, {"validate", path("events.xml")}) == 0, "events.xml re-validates");
  check.Expect(RunCli(ctx, {"render", path("events.xml"), "-o", path("events.dot")}) == 0,
               "xml->dot exits 0");
  if (fs::exists(path("events.dot"))) {
    size_t want = testing::ExpectedEventsGraph().node_count();
    check.Expect(DotNodeStatements(ReadTextFile(path("events.dot"))) == want, "DOT node statements");
  }

  check.Expect(RunCli(ctx, {"convert", "--from", "amr", "--to", "xml", ctx.Data("amr_suite.txt"), "-o",
                            path("amr.xml")}) == 0,
               "amr->xml exits 0");
  check.Expect(RunCli(ctx, {"validate", path("amr.xml")}) == 0, "amr.xml re-validates");
  if (fs::exists(path("amr.xml"))) {
    size_t want = 0;
    for (const std::string &b : testing::PenmanBlocks(ReadTextFile(ctx.Data("amr_suite.txt")))) {
      testing::SurfaceCounts c = testing::CountSurface(b);
      want += c.variables + c.constants;
    }
    check.Expect(FromXml(ReadTextFile(path("amr.xml"))).node_count() == want, "amr.xml node count");
  }

  std::ofstream(path("bad.xml")) << "<semanticgraph version=\"1\"><entity id=\"e\" value=\"x\">"
                                    "<role name=\"r\" target=\"c\"/></entity>"
                                    "<concept id=\"c\" name=\"C\"/></semanticgraph>\n";
  std::ofstream(path("broken.amr")) << "(b / boy :ARG0 \n";
  struct Case {
    std::vector<std::string> args;
    int code;
  };
  const std::vector<Case> matrix = {
      {{"catalogue", "list", "builtin:causation"}, 0},
      {{"validate", path("bad.xml")}, 1},
      {{"render", path("bad.xml")}, 1},
      {{"validate", path("does-not-exist.xml")}, 2},
      {{"convert", "--from", "amr", "--to", "xml", path("broken.amr")}, 2},
      {{"convert", "--from", "amr", "--to", "xml", "--no-such-flag", path("broken.amr")}, 3},
      {{"validate", "--strict", path("bad.xml")}, 3},
      {{}, 3},
  };
  for (const Case &c : matrix) {
    std::string joined;
    for (const std::string &a : c.args) joined += " " + a;
    int code = RunCli(ctx, c.args);
    check.Expect(code == c.code, "metasrl" + joined + " exited " + std::to_string(code) + ", want " +
                                     std::to_string(c.code));
  }
  RunCli(ctx, {"validate", path("bad.xml")});
  std::string report = ReadTextFile(path("last.out"));
  check.Expect(report.starts_with("ENTITY_OUT_EDGE\t") && std::count(report.begin(), report.end(), '\n') == 1,
               "validate reports one ENTITY_OUT_EDGE line");
}

struct Criterion {
  int number;
  const char *name;
  std::function<void(const Context &, Check &)> run;
};

int RunAll(const Context &ctx) {
  const std::vector<Criterion> criteria = {
      {1, "well example reconstruction", WellExampleReconstruction},
      {2, "validation matrix", ValidationMatrix},
      {3, "serialization round-trip and determinism", SerializationRoundTrip},
      {4, "AMR conversion", AmrConversion},
      {5, "UMR conversion", UmrConversion},
      {6, "KG event conversion", KgConversion},
      {7, "CoNLL causation conversion", ConllConversion},
      {8, "UCCA conversion", UccaConversion},
      {9, "CLI end-to-end", CliEndToEnd},
  };
  int failed = 0;
  for (const Criterion &c : criteria) {
    Check check;
    try {
      c.run(ctx, check);
    } catch (const std::exception &e) {
      check.Expect(false, std::string("exception: ") + e.what());
    }
    std::cout << (check.ok() ? "PASS" : "FAIL") << " " << c.number << " " << c.name << "\n";
    for (const std::string &f : check.failures()) std::cout << "     " << f << "\n";
    failed += !check.ok();
  }
  std::cout << (9 - failed) << "/9 criteria passed\n";
  return failed == 0 ? 0 : 1;
}

std::string SelfPath(const char *argv0) {
  std::error_code ec;
  fs::path p = fs::read_symlink("/proc/self/exe", ec);
  return ec ? fs::absolute(argv0).string() : p.string();
}

}  // namespace
}  // namespace metasrl::acceptance

int main(int argc, char **argv) {
  using namespace metasrl::acceptance;
  if (argc == 3 && std::string(argv[1]) == "--emit-random-xml") {
    std::cout << RandomXmlStream(std::stoi(argv[2]));
    return 0;
  }
  if (argc != 3) {
    std::cerr << "usage: " << argv[0] << " CLI_PATH DATA_DIR\n";
    return 2;
  }
  Context ctx;
  ctx.cli = fs::absolute(argv[1]).string();
  ctx.data = fs::absolute(argv[2]).string();
  ctx.self = SelfPath(argv[0]);
  ctx.work = fs::temp_directory_path() / ("metasrl_acceptance_" + std::to_string(getpid()));
  fs::create_directories(ctx.work);
  int code = RunAll(ctx);
  fs::remove_all(ctx.work);
  return code;
}
