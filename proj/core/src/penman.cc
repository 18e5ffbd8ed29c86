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

#include "metasrl/penman.h"

#include <map>
#include <set>

namespace metasrl {

const std::string *PenmanTree::ConceptOf(std::string_view variable) const {
  for (const auto &[var, label] : variables) {
    if (var == variable) return &label;
  }
  return nullptr;
}

namespace {

bool IsSpace(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

bool IsDelimiter(char c) {
  return IsSpace(c) || c == '(' || c == ')' || c == '"' || c == '~';
}

// "x", "b", "s2": the shape AMR uses for variables.
bool LooksLikeVariable(std::string_view s) {
  if (s.empty() || s[0] < 'a' || s[0] > 'z') return false;
  for (size_t i = 1; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

class PenmanParser {
 public:
  // Parses within text[begin, end); offsets in errors are relative to the
  // whole text.
  PenmanParser(std::string_view text, size_t begin, size_t end)
      : text_(text), pos_(begin), end_(end) {}

  bool AtEnd() {
    SkipTrivia();
    return pos_ >= end_;
  }

  size_t position() const { return pos_; }

  PenmanTree ParseTree() {
    tree_ = PenmanTree{};
    definitions_.clear();
    symbol_offsets_.clear();
    SkipTrivia();
    if (pos_ >= end_) Fail("empty PENMAN expression");
    if (text_[pos_] != '(') Fail("expected '(' to start an expression");
    tree_.root = ParseNode();
    Resolve();
    return std::move(tree_);
  }

 private:
  [[noreturn]] void Fail(const std::string &message) const { FailAt(message, pos_); }
  [[noreturn]] void FailAt(const std::string &message, size_t offset) const {
    throw ParseError(message, SourceLocation::At(text_, offset));
  }

  bool AtLineStart(size_t at) const {
    while (at > 0) {
      char c = text_[at - 1];
      if (c == '\n') return true;
      if (c != ' ' && c != '\t' && c != '\r') return false;
      --at;
    }
    return true;
  }

  // Whitespace and '#' metadata lines.
  void SkipTrivia() {
    while (pos_ < end_) {
      char c = text_[pos_];
      if (IsSpace(c)) {
        ++pos_;
      } else if (c == '#' && AtLineStart(pos_)) {
        while (pos_ < end_ && text_[pos_] != '\n') ++pos_;
      } else {
        return;
      }
    }
  }

  void SkipAlignment() {
    if (pos_ < end_ && text_[pos_] == '~') {
      while (pos_ < end_ && !IsSpace(text_[pos_]) && text_[pos_] != '(' &&
             text_[pos_] != ')') {
        ++pos_;
      }
    }
  }

  std::string ParseSymbol(bool stop_at_slash = false) {
    size_t start = pos_;
    while (pos_ < end_ && !IsDelimiter(text_[pos_]) &&
           !(stop_at_slash && text_[pos_] == '/')) {
      ++pos_;
    }
    std::string symbol(text_.substr(start, pos_ - start));
    SkipAlignment();
    return symbol;
  }

  std::string ParseString() {
    size_t start = pos_;
    ++pos_;  // opening quote
    std::string out;
    while (true) {
      if (pos_ >= end_) FailAt("unterminated string literal", start);
      char c = text_[pos_++];
      if (c == '"') break;
      if (c == '\\' && pos_ < end_) c = text_[pos_++];
      out += c;
    }
    if (out.empty()) FailAt("empty string literal", start);
    SkipAlignment();
    return out;
  }

  // After '(' : var '/' concept slot* ')'. Returns the variable.
  std::string ParseNode() {
    size_t open = pos_++;
    SkipTrivia();
    size_t var_at = pos_;
    if (pos_ >= end_) FailAt("unbalanced '('", open);
    std::string var = ParseSymbol(/*stop_at_slash=*/true);
    if (var.empty() || var[0] == ':') FailAt("expected a variable", var_at);
    SkipTrivia();
    if (pos_ >= end_ || text_[pos_] != '/') Fail("missing '/' after variable " + var);
    ++pos_;
    SkipTrivia();
    if (pos_ >= end_) FailAt("unbalanced '('", open);
    std::string label;
    if (text_[pos_] == '"') {
      label = ParseString();
    } else {
      size_t at = pos_;
      label = ParseSymbol();
      if (label.empty() || label[0] == ':') FailAt("missing concept for variable " + var, at);
    }
    if (!definitions_.emplace(var, var_at).second) {
      FailAt("variable " + var + " is defined twice", var_at);
    }
    tree_.variables.emplace_back(var, label);

    while (true) {
      SkipTrivia();
      if (pos_ >= end_) FailAt("unbalanced '(': missing ')'", open);
      char c = text_[pos_];
      if (c == ')') {
        ++pos_;
        SkipAlignment();
        return var;
      }
      if (c != ':') Fail("expected a role or ')'");
      size_t role_at = pos_;
      std::string role = ParseSymbol().substr(1);
      if (role.empty()) FailAt("empty role name", role_at);
      SkipTrivia();
      if (pos_ >= end_ || text_[pos_] == ')' || text_[pos_] == ':') {
        FailAt("role :" + role + " has no value", role_at);
      }
      size_t slot_index = tree_.slots.size();
      tree_.slots.push_back({var, role, {}});
      PenmanValue value;
      if (text_[pos_] == '(') {
        value.kind = PenmanValue::Kind::kNode;
        value.text = ParseNode();
      } else if (text_[pos_] == '"') {
        value.text = ParseString();
        value.quoted = true;
      } else {
        size_t at = pos_;
        value.text = ParseSymbol();
        if (value.text.empty()) Fail("unexpected character");
        symbol_offsets_.emplace(slot_index, at);
      }
      tree_.slots[slot_index].value = std::move(value);
    }
  }

  // Bare symbols become references once every definition is known.
  void Resolve() {
    for (const auto &[index, offset] : symbol_offsets_) {
      PenmanValue &value = tree_.slots[index].value;
      if (definitions_.contains(value.text)) {
        value.kind = PenmanValue::Kind::kReference;
      } else if (LooksLikeVariable(value.text)) {
        FailAt("undefined variable " + value.text, offset);
      }
    }
  }

  std::string_view text_;
  size_t pos_;
  size_t end_;
  PenmanTree tree_;
  std::map<std::string, size_t> definitions_;
  std::map<size_t, size_t> symbol_offsets_;  // slot index -> offset
};

std::string_view Trim(std::string_view s) {
  while (!s.empty() && IsSpace(s.front())) s.remove_prefix(1);
  while (!s.empty() && IsSpace(s.back())) s.remove_suffix(1);
  return s;
}

struct Block {
  size_t begin;
  size_t end;
};

// Splits on lines that are empty or whitespace-only.
std::vector<Block> SplitBlocks(std::string_view text) {
  std::vector<Block> blocks;
  size_t pos = 0;
  size_t block_begin = std::string_view::npos;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    bool blank = Trim(text.substr(pos, eol - pos)).empty();
    if (blank) {
      if (block_begin != std::string_view::npos) {
        blocks.push_back({block_begin, pos});
        block_begin = std::string_view::npos;
      }
    } else if (block_begin == std::string_view::npos) {
      block_begin = pos;
    }
    pos = eol + 1;
  }
  if (block_begin != std::string_view::npos) blocks.push_back({block_begin, text.size()});
  return blocks;
}

void ParseDocRelations(std::string_view text, Block block,
                       std::vector<UmrRelation> &out) {
  size_t pos = block.begin;
  bool header_seen = false;
  while (pos < block.end) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos || eol > block.end) eol = block.end;
    std::string_view line = Trim(text.substr(pos, eol - pos));
    size_t line_at = pos + (text.substr(pos, eol - pos).find_first_not_of(" \t\r"));
    pos = eol + 1;
    if (line.empty()) continue;
    if (line[0] == '#') {
      header_seen = true;
      continue;
    }
    SourceLocation loc = SourceLocation::At(text, line_at);
    if (!header_seen || line.front() != '(' || line.back() != ')') {
      throw ParseError("document relation must look like (source rel target)", loc);
    }
    std::vector<std::string> fields;
    std::string_view inner = line.substr(1, line.size() - 2);
    size_t i = 0;
    while (i < inner.size()) {
      while (i < inner.size() && IsSpace(inner[i])) ++i;
      size_t start = i;
      while (i < inner.size() && !IsSpace(inner[i])) ++i;
      if (i > start) fields.emplace_back(inner.substr(start, i - start));
    }
    if (fields.size() != 3) {
      throw ParseError("document relation needs exactly 3 fields, got " +
                           std::to_string(fields.size()),
                       loc);
    }
    for (const std::string &f : fields) {
      if (f.find_first_of("()") != std::string::npos) {
        throw ParseError("nested document relations are not supported", loc);
      }
    }
    std::string relation = fields[1];
    if (relation[0] == ':') relation.erase(0, 1);
    if (relation.empty()) throw ParseError("empty relation name", loc);
    out.push_back({fields[0], relation, fields[2], loc});
  }
}

bool IsDocHeader(std::string_view text, Block block) {
  size_t eol = text.find('\n', block.begin);
  if (eol == std::string_view::npos || eol > block.end) eol = block.end;
  return Trim(text.substr(block.begin, eol - block.begin)) == "# doc";
}

}  // namespace

PenmanTree ParsePenman(std::string_view text) {
  PenmanParser parser(text, 0, text.size());
  PenmanTree tree = parser.ParseTree();
  if (!parser.AtEnd()) {
    throw ParseError("unexpected content after the expression",
                     SourceLocation::At(text, parser.position()));
  }
  return tree;
}

std::vector<PenmanTree> ParsePenmanDocument(std::string_view text) {
  std::vector<PenmanTree> trees;
  PenmanParser parser(text, 0, text.size());
  while (!parser.AtEnd()) trees.push_back(parser.ParseTree());
  return trees;
}

UmrDocument ParseUmr(std::string_view text) {
  UmrDocument doc;
  for (const Block &block : SplitBlocks(text)) {
    if (IsDocHeader(text, block)) {
      ParseDocRelations(text, block, doc.relations);
      continue;
    }
    PenmanParser parser(text, block.begin, block.end);
    while (!parser.AtEnd()) doc.sentences.push_back(parser.ParseTree());
  }
  return doc;
}

}  // namespace metasrl
