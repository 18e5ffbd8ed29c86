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


#include "cli.h"

#include <unistd.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <future>
#include <map>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
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

namespace metasrl::cli {

namespace fs = std::filesystem;

namespace {

// Failure with a fixed exit code and a diagnostic for the error stream.
class Failure : public std::runtime_error {
 public:
  Failure(int code, const std::string &message)
      : std::runtime_error(message), code_(code) {}
  int code() const { return code_; }

 private:
  int code_;
};

std::string ReadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure(kExitInputError, path + ": cannot read file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Failure(kExitInputError, path + ": read error");
  return buffer.str();
}

// Temp file in the target directory, then rename.
void WriteAtomically(const fs::path &path, const std::string &data) {
  static std::atomic<unsigned> counter{0};
  fs::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Failure(kExitInputError, path.string() + ": cannot write file");
    out << data;
    out.flush();
    if (!out) {
      std::error_code ignored;
      fs::remove(tmp, ignored);
      throw Failure(kExitInputError, path.string() + ": write error");
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Failure(kExitInputError, path.string() + ": cannot replace file");
  }
}

SemanticGraph Union(std::vector<SemanticGraph> graphs) {
  if (graphs.empty()) return {};
  SemanticGraph acc = std::move(graphs.front());
  for (size_t i = 1; i < graphs.size(); ++i) acc = Merge(acc, graphs[i], {});
  return acc;
}

struct ConvertOptions {
  std::string from;
  std::string to;
  std::string output;
  std::string lang;
  bool combine = true;
  std::vector<std::string> inputs;
};

// One or more graphs from one input. Several graphs only for split
// Turtle output.
std::vector<SemanticGraph> ConvertText(const ConvertOptions &opts,
                                       const std::string &text) {
  if (opts.from == "amr") {
    return {AmrToGraph(ParsePenmanDocument(text))};
  }
  if (opts.from == "umr") {
    return {UmrToGraph(ParseUmr(text))};
  }
  if (opts.from == "conll") {
    std::vector<SemanticGraph> parts;
    std::string lang = opts.lang.empty() ? "und" : opts.lang;
    for (const ConllSentence &s : ParseConll(text, lang)) {
      parts.push_back(CausationToGraph(s));
    }
    return {Union(std::move(parts))};
  }
  if (opts.from == "ucca") {
    std::vector<SemanticGraph> parts;
    for (const UccaPassage &p : ParseUccaPassages(text)) parts.push_back(UccaToGraph(p));
    return {Union(std::move(parts))};
  }
  SemanticGraph graph = EventsToGraph(ParseTurtle(text));
  if (opts.combine) return {std::move(graph)};
  // One graph per top-level event; nodes outside every event tree form
  // a final extra graph.
  std::vector<SemanticGraph> parts;
  std::map<NodeId, bool> covered;
  for (const NodeId &top : TopLevelEvents(graph)) {
    SemanticGraph part = ReachableSubgraph(graph, top);
    for (const auto &[id, node] : part.nodes()) covered[id] = true;
    parts.push_back(std::move(part));
  }
  SemanticGraph rest;
  for (const auto &[id, node] : graph.nodes()) {
    if (!covered.contains(id)) rest.InsertNode(id, node);
  }
  for (const Edge &e : graph.edges()) {
    if (!covered.contains(e.source)) rest.AppendEdgeUnchecked(e);
  }
  if (!rest.empty()) parts.push_back(std::move(rest));
  return parts;
}

std::string Serialize(const std::string &to, const SemanticGraph &graph) {
  return to == "dot" ? ToDot(graph) : ToXml(graph) + "\n";
}

// Runs one conversion; returns the rendered outputs keyed by path
// ("" for standard output).
std::vector<std::pair<fs::path, std::string>> ConvertOne(
    const ConvertOptions &opts, const std::string &input, const fs::path &target) {
  std::string text = ReadFile(input);
  std::vector<SemanticGraph> graphs;
  try {
    graphs = ConvertText(opts, text);
  } catch (const ParseError &e) {
    throw Failure(kExitInputError, input + ": " + e.what());
  } catch (const ConversionError &e) {
    throw Failure(kExitInputError, input + ": " + e.what());
  } catch (const GraphError &e) {
    throw Failure(kExitInputError, input + ": " + e.what());
  } catch (const InvalidGraphError &e) {
    throw Failure(kExitInputError, input + ": " + e.what());
  }
  std::vector<std::pair<fs::path, std::string>> outputs;
  try {
    if (opts.combine || opts.from != "ttl") {
      outputs.emplace_back(target, Serialize(opts.to, graphs.front()));
      return outputs;
    }
    for (size_t i = 0; i < graphs.size(); ++i) {
      std::string suffix = std::to_string(i + 1);
      if (suffix.size() < 2) suffix.insert(0, "0");
      suffix.insert(0, "-");
      fs::path path = target.parent_path() /
                      (target.stem().string() + suffix + target.extension().string());
      outputs.emplace_back(path, Serialize(opts.to, graphs[i]));
    }
  } catch (const InvalidGraphError &e) {
    throw Failure(kExitInputError, input + ": converted graph is invalid: " + e.what());
  }
  return outputs;
}

int Convert(const ConvertOptions &opts, std::ostream &out, std::ostream &err) {
  bool many = opts.inputs.size() > 1;
  if (many) {
    if (opts.output.empty() || !fs::is_directory(opts.output)) {
      err << "metasrl: several inputs need -o naming an existing directory\n";
      return kExitUsage;
    }
  }
  if (!opts.combine && opts.from == "ttl" && opts.output.empty()) {
    err << "metasrl: --no-combine needs -o\n";
    return kExitUsage;
  }
  std::vector<fs::path> targets;
  for (const std::string &input : opts.inputs) {
    if (!many) {
      targets.emplace_back(opts.output);
    } else {
      fs::path name = fs::path(input).filename();
      name.replace_extension(opts.to);
      targets.push_back(fs::path(opts.output) / name);
    }
  }

  std::vector<std::future<std::vector<std::pair<fs::path, std::string>>>> jobs;
  for (size_t i = 0; i < opts.inputs.size(); ++i) {
    jobs.push_back(std::async(many ? std::launch::async : std::launch::deferred,
                              [&, i] {
                                auto outputs = ConvertOne(opts, opts.inputs[i], targets[i]);
                                for (const auto &[path, data] : outputs) {
                                  if (!path.empty()) WriteAtomically(path, data);
                                }
                                return outputs;
                              }));
  }
  int code = kExitOk;
  for (auto &job : jobs) {
    try {
      for (const auto &[path, data] : job.get()) {
        if (path.empty()) out << data;
      }
    } catch (const Failure &f) {
      err << "metasrl: " << f.what() << "\n";
      code = std::max(code, f.code());
    }
  }
  return code;
}

ConceptCatalogue LoadCatalogue(const std::string &name) {
  if (name == "builtin:causation") return CausationCatalogue();
  if (name == "builtin:example") return WellExampleCatalogue();
  std::string text = ReadFile(name);
  try {
    return CatalogueFromXml(text);
  } catch (const ParseError &e) {
    throw Failure(kExitInputError, name + ": " + e.what());
  }
}

SemanticGraph LoadGraph(const std::string &path) {
  std::string text = ReadFile(path);
  try {
    return FromXml(text);
  } catch (const ParseError &e) {
    throw Failure(kExitInputError, path + ": " + e.what());
  }
}

void PrintViolations(const std::vector<Violation> &violations, std::ostream &os) {
  for (const Violation &v : violations) {
    os << ViolationCodeName(v.code) << '\t' << v.SubjectString() << '\t' << v.message
       << '\n';
  }
}

int ValidateCommand(const std::string &input, const std::string &catalogue_arg,
                    bool strict, std::ostream &out, std::ostream &err) {
  if (strict && catalogue_arg.empty()) {
    err << "metasrl: --strict needs --catalogue\n";
    return kExitUsage;
  }
  SemanticGraph graph = LoadGraph(input);
  std::optional<ConceptCatalogue> catalogue;
  if (!catalogue_arg.empty()) catalogue = LoadCatalogue(catalogue_arg);
  std::vector<Violation> violations =
      Validate(graph, catalogue ? &*catalogue : nullptr,
               strict ? ValidationMode::kStrict : ValidationMode::kLax);
  PrintViolations(violations, out);
  return violations.empty() ? kExitOk : kExitViolations;
}

int RenderCommand(const std::string &input, const std::string &output,
                  std::ostream &out, std::ostream &err) {
  SemanticGraph graph = LoadGraph(input);
  std::string dot;
  try {
    dot = ToDot(graph);
  } catch (const InvalidGraphError &e) {
    err << "metasrl: " << input << ": graph is invalid\n";
    PrintViolations(e.violations(), err);
    return kExitViolations;
  }
  if (output.empty()) {
    out << dot;
  } else {
    WriteAtomically(output, dot);
  }
  return kExitOk;
}

int CatalogueList(const std::string &name, std::ostream &out) {
  ConceptCatalogue catalogue = LoadCatalogue(name);
  for (const auto &[name, def] : catalogue.entries()) out << def.Signature() << '\n';
  return kExitOk;
}

}  // namespace

int Run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"MetaSRL++ semantic graph toolkit", "metasrl"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  ConvertOptions conv;
  CLI::App *convert = app.add_subcommand("convert", "Convert annotations into a semantic graph");
  convert->add_option("--from", conv.from, "Input format")
      ->required()
      ->check(CLI::IsMember({"amr", "umr", "ttl", "conll", "ucca"}));
  convert->add_option("--to", conv.to, "Output format")
      ->required()
      ->check(CLI::IsMember({"xml", "dot"}));
  convert->add_option("-o,--output", conv.output,
                      "Output file, or directory for several inputs");
  convert->add_option("--lang", conv.lang, "Default language for CoNLL input");
  convert->add_flag("--combine,!--no-combine", conv.combine,
                    "Emit one graph per Turtle file (default) or one per top-level event");
  convert->add_option("inputs", conv.inputs, "Input files")->required();

  std::string validate_input;
  std::string catalogue_arg;
  bool strict = false;
  CLI::App *validate = app.add_subcommand("validate", "Validate a graph XML file");
  validate->add_option("--catalogue", catalogue_arg,
                       "Catalogue XML file, or builtin:causation / builtin:example");
  validate->add_flag("--strict", strict, "Check concepts and roles against the catalogue");
  validate->add_option("input", validate_input, "Graph XML file")->required();

  std::string render_input;
  std::string render_output;
  CLI::App *render = app.add_subcommand("render", "Render a graph XML file as DOT");
  render->add_option("input", render_input, "Graph XML file")->required();
  render->add_option("-o,--output", render_output, "Output file");

  std::string list_arg;
  CLI::App *catalogue = app.add_subcommand("catalogue", "Inspect concept catalogues");
  catalogue->require_subcommand(1);
  CLI::App *list = catalogue->add_subcommand("list", "Print concept signatures");
  list->add_option("file", list_arg,
                   "Catalogue XML file, or builtin:causation / builtin:example")
      ->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "metasrl: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*convert) return Convert(conv, out, err);
    if (*validate) return ValidateCommand(validate_input, catalogue_arg, strict, out, err);
    if (*render) return RenderCommand(render_input, render_output, out, err);
    return CatalogueList(list_arg, out);
  } catch (const Failure &f) {
    err << "metasrl: " << f.what() << "\n";
    return f.code();
  } catch (const std::exception &e) {
    err << "metasrl: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace metasrl::cli
