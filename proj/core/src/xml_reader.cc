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

#include "xml_reader.h"

#include <charconv>
#include <stdexcept>

namespace metasrl::xml {

const Attribute *Element::Find(std::string_view attr) const {
  for (const Attribute &a : attributes) {
    if (a.name == attr) return &a;
  }
  return nullptr;
}

namespace {

bool IsSpace(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

bool IsNameStart(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' ||
         c == ':' || static_cast<unsigned char>(c) >= 0x80;
}

bool IsNameChar(char c) {
  return IsNameStart(c) || (c >= '0' && c <= '9') || c == '-' || c == '.';
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

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  Element ParseDocument() {
    if (text_.substr(0, 3) == "\xEF\xBB\xBF") pos_ = 3;
    SkipMisc();
    if (Peek("<?xml")) {
      size_t end = text_.find("?>", pos_);
      if (end == std::string_view::npos) Fail("unterminated XML declaration");
      pos_ = end + 2;
    }
    SkipMisc();
    if (AtEnd()) Fail("document has no root element");
    if (text_[pos_] != '<') FailSchema("text outside the root element");
    Element root = ParseElement();
    SkipMisc();
    if (!AtEnd()) {
      if (text_[pos_] == '<') Fail("more than one root element");
      FailSchema("text after the root element");
    }
    return root;
  }

 private:
  bool AtEnd() const { return pos_ >= text_.size(); }
  bool Peek(std::string_view s) const { return text_.substr(pos_, s.size()) == s; }
  // Positions only move forward except on error paths, so the line scan
  // resumes from the previous query.
  SourceLocation Here() const {
    if (pos_ < scanned_) {
      scanned_ = 0;
      line_ = 1;
      line_start_ = 0;
    }
    for (; scanned_ < pos_ && scanned_ < text_.size(); ++scanned_) {
      if (text_[scanned_] == '\n') {
        ++line_;
        line_start_ = scanned_ + 1;
      }
    }
    return SourceLocation{line_, pos_ - line_start_ + 1, pos_};
  }

  [[noreturn]] void Fail(const std::string &message) const {
    throw ParseError(message, Here());
  }
  [[noreturn]] void FailSchema(const std::string &message) const {
    throw SchemaError(message, Here());
  }

  void SkipSpace() {
    while (!AtEnd() && IsSpace(text_[pos_])) ++pos_;
  }

  // Whitespace and comments.
  void SkipMisc() {
    while (true) {
      SkipSpace();
      if (!Peek("<!--")) return;
      size_t end = text_.find("-->", pos_ + 4);
      if (end == std::string_view::npos) Fail("unterminated comment");
      pos_ = end + 3;
    }
  }

  std::string ParseName() {
    if (AtEnd() || !IsNameStart(text_[pos_])) Fail("expected a name");
    size_t start = pos_;
    while (!AtEnd() && IsNameChar(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void ParseReference(std::string &out) {
    size_t start = pos_;
    size_t end = text_.find(';', pos_);
    if (end == std::string_view::npos || end - pos_ > 12) {
      Fail("malformed character reference");
    }
    std::string_view ref = text_.substr(pos_ + 1, end - pos_ - 1);
    pos_ = end + 1;
    if (ref == "amp") { out += '&'; return; }
    if (ref == "lt") { out += '<'; return; }
    if (ref == "gt") { out += '>'; return; }
    if (ref == "quot") { out += '"'; return; }
    if (ref == "apos") { out += '\''; return; }
    if (ref.size() > 1 && ref[0] == '#') {
      int base = 10;
      std::string_view digits = ref.substr(1);
      if (!digits.empty() && digits[0] == 'x') {
        base = 16;
        digits.remove_prefix(1);
      }
      unsigned long cp = 0;
      auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(),
                                     cp, base);
      if (!digits.empty() && ec == std::errc() &&
          p == digits.data() + digits.size() && cp > 0 && cp <= 0x10FFFF) {
        AppendUtf8(out, cp);
        return;
      }
    }
    pos_ = start;
    Fail("unknown entity reference '&" + std::string(ref) + ";'");
  }

  Attribute ParseAttribute() {
    Attribute attr;
    attr.location = Here();
    attr.name = ParseName();
    SkipSpace();
    if (AtEnd() || text_[pos_] != '=') Fail("expected '=' after attribute " + attr.name);
    ++pos_;
    SkipSpace();
    if (AtEnd() || (text_[pos_] != '"' && text_[pos_] != '\'')) {
      Fail("attribute value must be quoted");
    }
    char quote = text_[pos_++];
    while (true) {
      if (AtEnd()) Fail("unterminated attribute value");
      char c = text_[pos_];
      if (c == quote) {
        ++pos_;
        break;
      }
      if (c == '<') Fail("'<' in attribute value");
      if (c == '&') {
        ParseReference(attr.value);
      } else {
        // Attribute-value normalization: literal whitespace becomes a space.
        attr.value += (c == '\t' || c == '\n' || c == '\r') ? ' ' : c;
        ++pos_;
      }
    }
    return attr;
  }

  Element ParseElement() {
    Element element;
    element.location = Here();
    ++pos_;  // '<'
    if (Peek("!")) Fail("unsupported markup declaration");
    if (Peek("?")) Fail("unsupported processing instruction");
    element.name = ParseName();
    while (true) {
      size_t before = pos_;
      SkipSpace();
      if (AtEnd()) Fail("unterminated start tag <" + element.name + ">");
      if (Peek("/>")) {
        pos_ += 2;
        return element;
      }
      if (text_[pos_] == '>') {
        ++pos_;
        break;
      }
      if (before == pos_) Fail("expected whitespace before attribute");
      Attribute attr = ParseAttribute();
      if (element.Find(attr.name) != nullptr) {
        pos_ = attr.location.offset;
        Fail("duplicate attribute " + attr.name);
      }
      element.attributes.push_back(std::move(attr));
    }

    while (true) {
      SkipMisc();
      if (AtEnd()) Fail("missing end tag </" + element.name + ">");
      if (Peek("</")) {
        pos_ += 2;
        std::string name = ParseName();
        if (name != element.name) {
          Fail("end tag </" + name + "> does not match <" + element.name + ">");
        }
        SkipSpace();
        if (AtEnd() || text_[pos_] != '>') Fail("malformed end tag");
        ++pos_;
        return element;
      }
      if (text_[pos_] != '<') FailSchema("unexpected text inside <" + element.name + ">");
      element.children.push_back(ParseElement());
    }
  }

  std::string_view text_;
  size_t pos_ = 0;
  mutable size_t scanned_ = 0;
  mutable size_t line_ = 1;
  mutable size_t line_start_ = 0;
};

}  // namespace

Element Parse(std::string_view text) { return Reader(text).ParseDocument(); }

std::string EscapeAttribute(std::string_view value) {
  std::string out;
  out.reserve(value.size());
  for (char c : value) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      case '\t': out += "&#9;"; break;
      case '\n': out += "&#10;"; break;
      case '\r': out += "&#13;"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          throw std::invalid_argument(
              "control character " +
              std::to_string(static_cast<unsigned char>(c)) +
              " cannot be serialized");
        }
        out += c;
    }
  }
  return out;
}

}  // namespace metasrl::xml
