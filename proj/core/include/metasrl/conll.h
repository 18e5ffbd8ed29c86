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


// CoNLL-style causation annotations.
//
// Token lines carry 9 tab-separated columns:
//   ID FORM LEMMA UPOS XPOS FEATS HEAD DEPREL CAUSATION
// CAUSATION is a BIO tag over {Cause, Effect} or "O". Sentences are
// separated by blank lines. A "# lang = xx" comment sets the language for
// its sentence and every following one until changed.

#ifndef METASRL_CONLL_H_
#define METASRL_CONLL_H_

#include <string>
#include <string_view>
#include <vector>

#include "metasrl/errors.h"
#include "metasrl/graph.h"

namespace metasrl {

enum class CausationLabel { kCause, kEffect };

struct ConllToken {
  int id = 0;
  std::string form;
  std::string lemma;
  std::string upos;
  std::string xpos;
  std::string feats;
  std::string head;
  std::string deprel;
  std::string causation;  // "O", "B-Cause", "I-Effect", ...
};

struct CausationSpan {
  CausationLabel label;
  size_t first;  // token positions, half-open
  size_t last;
};

struct ConllSentence {
  std::vector<ConllToken> tokens;
  std::string language = "und";
  SourceLocation location;  // first token line

  // Spans in sentence order.
  std::vector<CausationSpan> Spans() const;
  // Space-joined forms of a span.
  std::string SpanText(const CausationSpan &span) const;
};

// default_language replaces "und" for sentences before any "# lang" line.
std::vector<ConllSentence> ParseConll(std::string_view text,
                                      std::string_view default_language = "und");

// Builds Sentence -content-> Causation and Sentence -source-> LanguageDoc.
// Causation carries cause[i] / effect[i] to UnanalysedSubtree entities,
// which LanguageDoc shares through element[i]. A missing side becomes an
// omitted node. Throws ConversionError "no causation annotation" for a
// sentence without spans.
SemanticGraph CausationToGraph(const ConllSentence &sentence);

}  // namespace metasrl

#endif  // METASRL_CONLL_H_
