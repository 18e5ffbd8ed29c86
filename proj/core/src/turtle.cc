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

#include "metasrl/turtle.h"

#include <cctype>
#include <charconv>

namespace metasrl {

namespace {

bool IsLocalChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
         c == '.' || c == ':' || c == '%' ||
         static_cast<unsigned char>(c) >= 0x80;
}

bool IsPrefixChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
         c == '.' || static_cast<unsigned char>(c) >= 0x80;
}

void AppendUtf8(std::string &out, unsigned long cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

class TurtleParser {
 public:
  explicit TurtleParser(std::string_view text) : text_(text) {}

  TripleStore Parse() {
    while (true) {
      SkipTrivia();
      if (AtEnd()) break;
      if (Peek('@') || StartsWithKeyword("PREFIX") || StartsWithKeyword("BASE")) {
        ParseDirective();
      } else {
        ParseStatement();
      }
    }
    // Full IRIs get their display names once every prefix is known.
    for (Triple &t : store_.triples) {
      for (Term *term : {&t.subject, &t.predicate, &t.object}) {
        if (term->is_resource() && term->text.empty()) {
          term->text = store_.Compact(term->iri);
        }
      }
    }
    return std::move(store_);
  }

 private:
  bool AtEnd() const { return pos_ >= text_.size(); }
  bool Peek(char c) const { return !AtEnd() && text_[pos_] == c; }
  bool Peek(std::string_view s) const { return text_.substr(pos_, s.size()) == s; }

  [[noreturn]] void FailAt(const std::string &message, size_t offset) const {
    throw ParseError(message, SourceLocation::At(text_, offset));
  }
  [[noreturn]] void Fail(const std::string &message) const { FailAt(message, pos_); }
  [[noreturn]] void Unsupported(const std::string &what) const {
    Fail("unsupported construct: " + what);
  }

  void SkipTrivia() {
    while (!AtEnd()) {
      char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        ++pos_;
      } else if (c == '#') {
        while (!AtEnd() && text_[pos_] != '\n') ++pos_;
      } else {
        return;
      }
    }
  }

  // Case-insensitive keyword followed by whitespace.
  bool StartsWithKeyword(std::string_view keyword) const {
    if (text_.size() - pos_ <= keyword.size()) return false;
    for (size_t i = 0; i < keyword.size(); ++i) {
      if (std::toupper(static_cast<unsigned char>(text_[pos_ + i])) != keyword[i]) {
        return false;
      }
    }
    char next = text_[pos_ + keyword.size()];
    return next == ' ' || next == '\t' || next == '\n' || next == '\r';
  }

  void Expect(char c) {
    SkipTrivia();
    if (!Peek(c)) Fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void ParseDirective() {
    bool sparql_style = !Peek('@');
    if (Peek("@base") || StartsWithKeyword("BASE")) Unsupported("base IRI");
    if (!sparql_style) {
      if (!Peek("@prefix")) Fail("unknown directive");
      pos_ += 7;
    } else {
      pos_ += 6;
    }
    SkipTrivia();
    size_t at = pos_;
    std::string prefix;
    while (!AtEnd() && IsPrefixChar(text_[pos_])) prefix += text_[pos_++];
    if (!Peek(':')) FailAt("expected a prefix name ending in ':'", at);
    ++pos_;
    SkipTrivia();
    if (!Peek('<')) Fail("expected an IRI after the prefix name");
    store_.prefixes[prefix] = ParseIriRef();
    if (!sparql_style) Expect('.');
  }

  void ParseStatement() {
    Term subject = ParseSubject();
    while (true) {
      Term predicate = ParsePredicate();
      while (true) {
        Term object = ParseObject();
        store_.triples.push_back({subject, predicate, std::move(object)});
        SkipTrivia();
        if (!Peek(',')) break;
        ++pos_;
      }
      SkipTrivia();
      if (Peek('.')) {
        ++pos_;
        return;
      }
      if (!Peek(';')) Fail("expected ';', ',' or '.'");
      // Repeated ';' and a ';' before the final '.' are legal.
      while (Peek(';')) {
        ++pos_;
        SkipTrivia();
      }
      if (Peek('.')) {
        ++pos_;
        return;
      }
    }
  }

  void RejectUnsupported() {
    if (Peek('[')) Unsupported("blank node");
    if (Peek('(')) Unsupported("collection");
    if (Peek("_:")) Unsupported("blank node");
    if (Peek("\"\"\"") || Peek("'''")) Unsupported("long string");
  }

  Term ParseSubject() {
    SkipTrivia();
    RejectUnsupported();
    if (Peek('"') || Peek('\'')) Fail("a literal cannot be a subject");
    return ParseResource();
  }

  Term ParsePredicate() {
    SkipTrivia();
    RejectUnsupported();
    if (Peek('a') && pos_ + 1 < text_.size()) {
      char next = text_[pos_ + 1];
      if (next == ' ' || next == '\t' || next == '\n' || next == '\r' ||
          next == '<' || next == '"') {
        ++pos_;
        return Term{Term::Kind::kResource, "rdf:type",
                    std::string(kRdfNamespace) + "type", "", ""};
      }
    }
    if (Peek('"') || Peek('\'')) Fail("a literal cannot be a predicate");
    return ParseResource();
  }

  Term ParseObject() {
    SkipTrivia();
    RejectUnsupported();
    if (AtEnd()) Fail("expected an object");
    char c = text_[pos_];
    if (c == '"' || c == '\'') return ParseStringLiteral();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '+' || c == '-' ||
        (c == '.' && pos_ + 1 < text_.size() &&
         std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
      return ParseNumber();
    }
    for (std::string_view b : {"true", "false"}) {
      if (Peek(b) && (pos_ + b.size() == text_.size() ||
                      !IsLocalChar(text_[pos_ + b.size()]))) {
        pos_ += b.size();
        return Term{Term::Kind::kLiteral, std::string(b), "", "xsd:boolean", ""};
      }
    }
    return ParseResource();
  }

  Term ParseResource() {
    if (AtEnd()) Fail("expected an IRI or prefixed name");
    if (Peek('<')) {
      Term t;
      t.iri = ParseIriRef();
      return t;  // display text filled in at the end
    }
    size_t at = pos_;
    std::string prefix;
    while (!AtEnd() && IsPrefixChar(text_[pos_])) prefix += text_[pos_++];
    if (!Peek(':')) {
      pos_ = at;
      Fail("expected an IRI or prefixed name");
    }
    ++pos_;
    std::string local;
    while (!AtEnd() && IsLocalChar(text_[pos_])) local += text_[pos_++];
    // A trailing '.' terminates the statement rather than the name.
    while (!local.empty() && local.back() == '.') {
      local.pop_back();
      --pos_;
    }
    auto it = store_.prefixes.find(prefix);
    if (it == store_.prefixes.end()) FailAt("unknown prefix '" + prefix + ":'", at);
    Term t;
    t.text = prefix + ":" + local;
    t.iri = it->second + local;
    return t;
  }

  std::string ParseIriRef() {
    size_t at = pos_;
    ++pos_;  // '<'
    std::string iri;
    while (true) {
      if (AtEnd()) FailAt("unterminated IRI", at);
      char c = text_[pos_++];
      if (c == '>') break;
      if (c == ' ' || c == '\n' || c == '\t' || c == '<' || c == '"') {
        FailAt("illegal character in IRI", pos_ - 1);
      }
      iri += c;
    }
    return iri;
  }

  void ParseEscape(std::string &out) {
    size_t at = pos_ - 1;
    if (AtEnd()) FailAt("dangling escape", at);
    char c = text_[pos_++];
    switch (c) {
      case 't': out += '\t'; return;
      case 'b': out += '\b'; return;
      case 'n': out += '\n'; return;
      case 'r': out += '\r'; return;
      case 'f': out += '\f'; return;
      case '"': out += '"'; return;
      case '\'': out += '\''; return;
      case '\\': out += '\\'; return;
      case 'u':
      case 'U': {
        size_t len = c == 'u' ? 4 : 8;
        if (text_.size() - pos_ < len) FailAt("truncated unicode escape", at);
        unsigned long cp = 0;
        auto [p, ec] = std::from_chars(text_.data() + pos_,
                                       text_.data() + pos_ + len, cp, 16);
        if (ec != std::errc() || p != text_.data() + pos_ + len || cp > 0x10FFFF) {
          FailAt("bad unicode escape", at);
        }
        pos_ += len;
        AppendUtf8(out, cp);
        return;
      }
      default:
        FailAt(std::string("unknown escape \\") + c, at);
    }
  }

  Term ParseStringLiteral() {
    size_t at = pos_;
    char quote = text_[pos_++];
    Term t{Term::Kind::kLiteral, "", "", "", ""};
    while (true) {
      if (AtEnd()) FailAt("unterminated string literal", at);
      char c = text_[pos_++];
      if (c == quote) break;
      if (c == '\n' || c == '\r') FailAt("newline in string literal", at);
      if (c == '\\') {
        ParseEscape(t.text);
      } else {
        t.text += c;
      }
    }
    if (Peek('@')) {
      ++pos_;
      while (!AtEnd() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                          text_[pos_] == '-')) {
        t.language += text_[pos_++];
      }
      if (t.language.empty()) Fail("empty language tag");
    } else if (Peek("^^")) {
      pos_ += 2;
      Term type = ParseResource();
      t.datatype = type.text.empty() ? "<" + type.iri + ">" : type.text;
    }
    return t;
  }

  Term ParseNumber() {
    size_t start = pos_;
    if (Peek('+') || Peek('-')) ++pos_;
    auto digits = [this] {
      size_t n = 0;
      while (!AtEnd() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
        ++n;
      }
      return n;
    };
    size_t whole = digits();
    std::string type = "xsd:integer";
    if (Peek('.') && pos_ + 1 < text_.size() &&
        std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      ++pos_;
      digits();
      type = "xsd:decimal";
    } else if (whole == 0) {
      FailAt("malformed number", start);
    }
    if (Peek('e') || Peek('E')) {
      ++pos_;
      if (Peek('+') || Peek('-')) ++pos_;
      if (digits() == 0) FailAt("malformed exponent", start);
      type = "xsd:double";
    }
    return Term{Term::Kind::kLiteral,
                std::string(text_.substr(start, pos_ - start)), "", type, ""};
  }

  std::string_view text_;
  size_t pos_ = 0;
  TripleStore store_;
};

bool IsCompactLocal(std::string_view local) {
  if (local.empty() || local.back() == '.') return false;
  for (char c : local) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-' &&
        c != '.') {
      return false;
    }
  }
  return true;
}

}  // namespace

std::string TripleStore::Compact(std::string_view iri) const {
  const std::pair<const std::string, std::string> *best = nullptr;
  for (const auto &entry : prefixes) {
    const std::string &ns = entry.second;
    if (ns.empty() || !iri.starts_with(ns) || !IsCompactLocal(iri.substr(ns.size()))) {
      continue;
    }
    if (best == nullptr || ns.size() > best->second.size()) best = &entry;
  }
  if (best == nullptr) return "<" + std::string(iri) + ">";
  return best->first + ":" + std::string(iri.substr(best->second.size()));
}

TripleStore ParseTurtle(std::string_view text) {
  return TurtleParser(text).Parse();
}

}  // namespace metasrl
