// Copyright 2026 The GTE Authors. All Rights Reserved.
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

#include "gte/xml.hpp"

#include <cctype>

#include "gte/errors.hpp"

namespace gte {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedMarkup: return "MalformedMarkup";
    case ErrorCode::UnknownTag: return "UnknownTag";
    case ErrorCode::BadFeatureValue: return "BadFeatureValue";
    case ErrorCode::MissingMood: return "MissingMood";
    case ErrorCode::ConflictingFlavor: return "ConflictingFlavor";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::BadRow: return "BadRow";
    case ErrorCode::UnknownVerb: return "UnknownVerb";
    case ErrorCode::NotPossessive: return "NotPossessive";
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::OutOfCoverage: return "OutOfCoverage";
    case ErrorCode::UnknownWord: return "UnknownWord";
    case ErrorCode::IncompleteModel: return "IncompleteModel";
    case ErrorCode::NotSupported: return "NotSupported";
    case ErrorCode::RuleParseError: return "ParseError";
    case ErrorCode::UnboundTemplateVariable: return "UnboundTemplateVariable";
    case ErrorCode::BadReversedLink: return "BadReversedLink";
    case ErrorCode::UnknownRule: return "UnknownRule";
    case ErrorCode::MissingBinding: return "MissingBinding";
    case ErrorCode::CaseChangeOnNonPronoun: return "CaseChangeOnNonPronoun";
  }
  return "Unknown";
}

const RawNode* RawNode::child(std::string_view name) const {
  for (const auto& c : children) {
    if (c.tag == name) return &c;
  }
  return nullptr;
}

std::vector<const RawNode*> RawNode::children_named(std::string_view name) const {
  std::vector<const RawNode*> out;
  for (const auto& c : children) {
    if (c.tag == name) out.push_back(&c);
  }
  return out;
}

const std::string* RawNode::attribute(std::string_view name) const {
  auto it = attributes.find(std::string(name));
  return it == attributes.end() ? nullptr : &it->second;
}

namespace {

bool is_blank(std::string_view s) {
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.' ||
         c == ':';
}

class Reader {
 public:
  explicit Reader(std::string_view src) : src_(src) {}

  RawNode document() {
    skip_misc();
    if (at_end() || peek() != '<') fail("expected root element");
    RawNode root = element();
    skip_misc();
    if (!at_end()) fail("content after root element");
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::MalformedMarkup, "line " + std::to_string(line_) + ": " + what);
  }

  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return src_[pos_]; }
  bool starts_with(std::string_view s) const { return src_.substr(pos_, s.size()) == s; }

  void advance(std::size_t n = 1) {
    for (std::size_t i = 0; i < n && pos_ < src_.size(); ++i) {
      if (src_[pos_] == '\n') ++line_;
      ++pos_;
    }
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  void skip_until(std::string_view terminator) {
    while (!at_end() && !starts_with(terminator)) advance();
    if (at_end()) fail("unterminated construct, expected '" + std::string(terminator) + "'");
    advance(terminator.size());
  }

  // Whitespace, comments, processing instructions and doctype outside elements.
  void skip_misc() {
    for (;;) {
      skip_space();
      if (starts_with("<?")) {
        skip_until("?>");
      } else if (starts_with("<!--")) {
        skip_until("-->");
      } else if (starts_with("<!DOCTYPE")) {
        skip_until(">");
      } else {
        return;
      }
    }
  }

  std::string name() {
    std::size_t start = pos_;
    while (!at_end() && is_name_char(peek())) advance();
    if (start == pos_) fail("expected a name");
    return std::string(src_.substr(start, pos_ - start));
  }

  std::string decode(std::string_view raw) const {
    std::string out;
    out.reserve(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
      if (raw[i] != '&') {
        out.push_back(raw[i]);
        continue;
      }
      auto semi = raw.find(';', i);
      if (semi == std::string_view::npos) fail("unterminated entity");
      auto ent = raw.substr(i + 1, semi - i - 1);
      if (ent == "lt") out.push_back('<');
      else if (ent == "gt") out.push_back('>');
      else if (ent == "amp") out.push_back('&');
      else if (ent == "quot") out.push_back('"');
      else if (ent == "apos") out.push_back('\'');
      else if (!ent.empty() && ent[0] == '#') {
        unsigned long cp = 0;
        try {
          cp = ent.size() > 1 && (ent[1] == 'x' || ent[1] == 'X')
                   ? std::stoul(std::string(ent.substr(2)), nullptr, 16)
                   : std::stoul(std::string(ent.substr(1)), nullptr, 10);
        } catch (const std::exception&) {
          fail("bad character reference &" + std::string(ent) + ";");
        }
        append_utf8(out, cp);
      } else {
        fail("unknown entity &" + std::string(ent) + ";");
      }
      i = semi;
    }
    return out;
  }

  static void append_utf8(std::string& out, unsigned long cp) {
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
  }

  RawNode element() {
    RawNode node;
    node.line = line_;
    advance();  // '<'
    node.tag = name();
    for (;;) {
      skip_space();
      if (at_end()) fail("unterminated start tag <" + node.tag + ">");
      if (starts_with("/>")) {
        advance(2);
        return node;
      }
      if (peek() == '>') {
        advance();
        break;
      }
      std::string attr = name();
      skip_space();
      if (at_end() || peek() != '=') fail("expected '=' after attribute " + attr);
      advance();
      skip_space();
      if (at_end() || (peek() != '"' && peek() != '\'')) fail("expected quoted attribute value");
      char quote = peek();
      advance();
      std::size_t start = pos_;
      while (!at_end() && peek() != quote) advance();
      if (at_end()) fail("unterminated attribute value");
      std::string value = decode(src_.substr(start, pos_ - start));
      advance();
      if (!node.attributes.emplace(attr, std::move(value)).second) {
        fail("duplicate attribute " + attr);
      }
    }

    std::string text;
    for (;;) {
      if (at_end()) fail("missing </" + node.tag + ">");
      if (starts_with("<!--")) {
        skip_until("-->");
      } else if (starts_with("</")) {
        advance(2);
        std::string closing = name();
        if (closing != node.tag) {
          fail("mismatched </" + closing + ">, expected </" + node.tag + ">");
        }
        skip_space();
        if (at_end() || peek() != '>') fail("expected '>'");
        advance();
        break;
      } else if (peek() == '<') {
        node.children.push_back(element());
      } else {
        std::size_t start = pos_;
        while (!at_end() && peek() != '<') advance();
        text += decode(src_.substr(start, pos_ - start));
      }
    }
    if (!node.children.empty()) {
      if (!is_blank(text)) fail("mixed text and elements inside <" + node.tag + ">");
    } else {
      node.text = std::move(text);
    }
    return node;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
};

}  // namespace

RawNode parse_xml(std::string_view source) { return Reader(source).document(); }

std::string xml_escape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

}  // namespace gte
