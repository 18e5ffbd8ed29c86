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


#include "metasrl/conll.h"

#include <charconv>

namespace metasrl {

namespace {

constexpr size_t kColumns = 9;

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

// "# lang = it" -> "it"; empty when the comment is something else.
std::string_view LanguageComment(std::string_view line) {
  std::string_view rest = Trim(line.substr(1));
  if (!rest.starts_with("lang")) return {};
  rest = Trim(rest.substr(4));
  if (rest.empty() || rest.front() != '=') return {};
  return Trim(rest.substr(1));
}

std::vector<std::string> SplitTabs(std::string_view line) {
  std::vector<std::string> fields;
  size_t start = 0;
  while (true) {
    size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.emplace_back(line.substr(start));
      return fields;
    }
    fields.emplace_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

bool ParseLabel(std::string_view tag, CausationLabel &label) {
  if (tag == "Cause") {
    label = CausationLabel::kCause;
  } else if (tag == "Effect") {
    label = CausationLabel::kEffect;
  } else {
    return false;
  }
  return true;
}

class ConllParser {
 public:
  ConllParser(std::string_view text, std::string_view default_language)
      : text_(text), language_(default_language) {}

  std::vector<ConllSentence> Parse() {
    size_t pos = 0;
    while (pos <= text_.size()) {
      size_t eol = text_.find('\n', pos);
      if (eol == std::string_view::npos) eol = text_.size();
      std::string_view raw = text_.substr(pos, eol - pos);
      if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
      Line(raw, pos);
      pos = eol + 1;
    }
    Flush();
    return std::move(sentences_);
  }

 private:
  [[noreturn]] void Fail(const std::string &message, size_t offset) const {
    throw ParseError(message, SourceLocation::At(text_, offset));
  }

  void Line(std::string_view line, size_t offset) {
    if (Trim(line).empty()) {
      Flush();
      return;
    }
    if (line.front() == '#') {
      std::string_view lang = LanguageComment(line);
      if (!lang.empty()) {
        if (!current_.tokens.empty()) Fail("language comment inside a sentence", offset);
        language_ = lang;
      }
      return;
    }
    std::vector<std::string> fields = SplitTabs(line);
    if (fields.size() != kColumns) {
      Fail("expected " + std::to_string(kColumns) + " tab-separated columns, got " +
               std::to_string(fields.size()),
           offset);
    }
    if (current_.tokens.empty()) {
      current_.language = language_;
      current_.location = SourceLocation::At(text_, offset);
    }
    ConllToken token;
    const std::string &id = fields[0];
    auto [end, ec] = std::from_chars(id.data(), id.data() + id.size(), token.id);
    int expected = static_cast<int>(current_.tokens.size()) + 1;
    if (ec != std::errc() || end != id.data() + id.size()) {
      Fail("token id '" + id + "' is not an integer", offset);
    }
    if (token.id != expected) {
      Fail("token id " + id + " breaks the sequence; expected " +
               std::to_string(expected),
           offset);
    }
    token.form = fields[1];
    if (token.form.empty()) Fail("empty FORM column", offset);
    token.lemma = fields[2];
    token.upos = fields[3];
    token.xpos = fields[4];
    token.feats = fields[5];
    token.head = fields[6];
    token.deprel = fields[7];
    token.causation = fields[8];
    CheckTag(token.causation, offset + line.rfind('\t') + 1);
    previous_tag_ = token.causation;
    current_.tokens.push_back(std::move(token));
  }

  void CheckTag(const std::string &tag, size_t offset) const {
    if (tag == "O") return;
    CausationLabel label;
    if (tag.size() < 3 || tag[1] != '-' || (tag[0] != 'B' && tag[0] != 'I') ||
        !ParseLabel(std::string_view(tag).substr(2), label)) {
      Fail("malformed causation tag '" + tag + "'", offset);
    }
    if (tag[0] == 'I') {
      std::string_view prev = previous_tag_;
      if (current_.tokens.empty() || prev.size() < 3 || prev.substr(2) != tag.substr(2)) {
        Fail("tag " + tag + " does not continue a " + tag.substr(2) + " span", offset);
      }
    }
  }

  void Flush() {
    if (!current_.tokens.empty()) sentences_.push_back(std::move(current_));
    current_ = ConllSentence{};
    previous_tag_.clear();
  }

  std::string_view text_;
  std::string language_;
  std::string previous_tag_;
  ConllSentence current_;
  std::vector<ConllSentence> sentences_;
};

}  // namespace

std::vector<CausationSpan> ConllSentence::Spans() const {
  std::vector<CausationSpan> spans;
  for (size_t i = 0; i < tokens.size(); ++i) {
    const std::string &tag = tokens[i].causation;
    CausationLabel label;
    if (tag.size() < 3 || !ParseLabel(std::string_view(tag).substr(2), label)) continue;
    if (tag[0] == 'B' || spans.empty() || spans.back().last != i ||
        spans.back().label != label) {
      spans.push_back({label, i, i + 1});
    } else {
      spans.back().last = i + 1;
    }
  }
  return spans;
}

std::string ConllSentence::SpanText(const CausationSpan &span) const {
  std::string text;
  for (size_t i = span.first; i < span.last; ++i) {
    if (i > span.first) text += ' ';
    text += tokens[i].form;
  }
  return text;
}

std::vector<ConllSentence> ParseConll(std::string_view text,
                                      std::string_view default_language) {
  return ConllParser(text, default_language).Parse();
}

SemanticGraph CausationToGraph(const ConllSentence &sentence) {
  std::vector<CausationSpan> spans = sentence.Spans();
  if (spans.empty()) {
    throw ConversionError(sentence.location.ToString() + ": no causation annotation");
  }
  SemanticGraph g;
  NodeId top = g.AddConcept("Sentence");
  NodeId causation = g.AddConcept("Causation");
  NodeId doc = g.AddConcept("LanguageDoc");
  NodeId language = g.AddEntity(sentence.language);
  std::vector<NodeId> elements;
  for (const CausationSpan &span : spans) {
    elements.push_back(g.AddEntity(sentence.SpanText(span), {"UnanalysedSubtree"}));
  }

  g.AddEdge(top, RoleLabel("content"), causation);
  g.AddEdge(top, RoleLabel("source"), doc);
  int causes = 0;
  int effects = 0;
  for (size_t i = 0; i < spans.size(); ++i) {
    if (spans[i].label == CausationLabel::kCause) {
      g.AddEdge(causation, RoleLabel("cause", ++causes), elements[i]);
    }
  }
  for (size_t i = 0; i < spans.size(); ++i) {
    if (spans[i].label == CausationLabel::kEffect) {
      g.AddEdge(causation, RoleLabel("effect", ++effects), elements[i]);
    }
  }
  if (causes == 0 || effects == 0) {
    NodeId omitted = g.AddOmitted();
    g.AddEdge(causation, RoleLabel(causes == 0 ? "cause" : "effect", 1), omitted);
  }
  g.AddEdge(doc, RoleLabel("language"), language);
  for (size_t i = 0; i < elements.size(); ++i) {
    g.AddEdge(doc, RoleLabel("element", static_cast<int>(i) + 1), elements[i]);
  }
  return g;
}

}  // namespace metasrl
