// Copyright 2026 The Mathspeak Authors
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

#include "mathspeak/dom.hpp"

#include <algorithm>
#include <cstdint>

namespace mathspeak {

namespace {

bool is_ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n';
}

// Recursion guard; MathML this deep is not markup, it is an attack.
constexpr int kMaxElementDepth = 512;

bool is_name_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' ||
         c == ':' || static_cast<unsigned char>(c) >= 0x80;
}

bool is_name_char(char c) {
  return is_name_start(c) || (c >= '0' && c <= '9') || c == '-' || c == '.';
}

// Trims ASCII whitespace at both ends and collapses interior runs to a
// single space.
std::string collapse_whitespace(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool pending_space = false;
  for (char c : s) {
    if (is_ascii_space(c)) {
      if (!out.empty()) pending_space = true;
    } else {
      if (pending_space) out.push_back(' ');
      pending_space = false;
      out.push_back(c);
    }
  }
  return out;
}

void append_utf8(std::string& out, uint32_t cp) {
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

class DomParser {
 public:
  explicit DomParser(std::string_view text) : text_(text) {
    // Skip a UTF-8 byte order mark.
    if (text_.substr(0, 3) == "\xEF\xBB\xBF") pos_ = 3;
  }

  Document parse() {
    std::vector<Node> top;
    parse_content(top, /*close_name=*/nullptr, /*token_context=*/false);
    if (!eof()) fail("unexpected closing tag");

    size_t element_count = 0;
    for (const Node& n : top) {
      if (n.is_element()) ++element_count;
    }
    Document doc;
    if (element_count == 1 && top.size() == 1) {
      doc.root = std::move(std::get<Element>(top.front().data));
    } else {
      doc.root.name = kFragmentRootName;
      doc.root.position = {1, 1};
      doc.root.children = std::move(top);
    }
    return doc;
  }

 private:
  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char peek_at(size_t ahead) const {
    size_t i = pos_ + ahead;
    return i < text_.size() ? text_[i] : '\0';
  }

  void advance() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
      // Count code points, not bytes, within a line.
      ++column_;
    }
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line_, column_);
  }

  [[noreturn]] void fail_at(const std::string& message, int line,
                            int column) const {
    throw ParseError(message, line, column);
  }

  bool starts_with(std::string_view s) const {
    return text_.substr(pos_, s.size()) == s;
  }

  void expect(char c, const char* what) {
    if (eof() || peek() != c) fail(std::string("expected ") + what);
    advance();
  }

  void skip_spaces() {
    while (!eof() && is_ascii_space(peek())) advance();
  }

  std::string parse_raw_name() {
    if (eof() || !is_name_start(peek())) fail("expected a name");
    size_t start = pos_;
    while (!eof() && is_name_char(peek())) advance();
    return std::string(text_.substr(start, pos_ - start));
  }

  static std::string strip_prefix(const std::string& name) {
    size_t colon = name.find(':');
    return colon == std::string::npos ? name : name.substr(colon + 1);
  }

  // At '&'. Appends the decoded character(s).
  void parse_entity(std::string& out) {
    int at_line = line_, at_column = column_;
    advance();  // '&'
    size_t start = pos_;
    while (!eof() && peek() != ';' && peek() != '<' && peek() != '&' &&
           pos_ - start < 32) {
      advance();
    }
    if (eof() || peek() != ';') {
      fail_at("unterminated entity reference", at_line, at_column);
    }
    std::string_view body = text_.substr(start, pos_ - start);
    advance();  // ';'
    if (body == "amp") {
      out.push_back('&');
    } else if (body == "lt") {
      out.push_back('<');
    } else if (body == "gt") {
      out.push_back('>');
    } else if (body == "quot") {
      out.push_back('"');
    } else if (body == "apos") {
      out.push_back('\'');
    } else if (!body.empty() && body[0] == '#') {
      uint32_t cp = 0;
      bool ok = body.size() > 1;
      if (body.size() > 2 && (body[1] == 'x' || body[1] == 'X')) {
        for (size_t i = 2; i < body.size() && ok; ++i) {
          char c = body[i];
          uint32_t digit;
          if (c >= '0' && c <= '9') digit = c - '0';
          else if (c >= 'a' && c <= 'f') digit = c - 'a' + 10;
          else if (c >= 'A' && c <= 'F') digit = c - 'A' + 10;
          else { ok = false; break; }
          cp = cp * 16 + digit;
          if (cp > 0x10FFFF) ok = false;
        }
        ok = ok && body.size() > 2;
      } else {
        for (size_t i = 1; i < body.size() && ok; ++i) {
          char c = body[i];
          if (c < '0' || c > '9') { ok = false; break; }
          cp = cp * 10 + (c - '0');
          if (cp > 0x10FFFF) ok = false;
        }
      }
      if (ok && (cp == 0 || (cp >= 0xD800 && cp <= 0xDFFF))) ok = false;
      if (!ok) fail_at("invalid character reference", at_line, at_column);
      append_utf8(out, cp);
    } else {
      fail_at("undefined entity '" + std::string(body) + "'", at_line,
              at_column);
    }
  }

  // Parses a run of nodes until EOF or a closing tag. When close_name is
  // non-null the run belongs to that element and its closing tag is
  // consumed here. Token elements keep raw text runs; finish_element
  // collapses them in one pass so splits at entities or comments do not
  // disturb interior whitespace.
  void parse_content(std::vector<Node>& out, const std::string* close_name,
                     bool token_context) {
    std::string pending_text;
    auto flush_text = [&] {
      if (pending_text.empty()) return;
      if (token_context) {
        out.push_back(Node{std::move(pending_text)});
        pending_text.clear();
        return;
      }
      std::string collapsed = collapse_whitespace(pending_text);
      pending_text.clear();
      if (!collapsed.empty()) out.push_back(Node{std::move(collapsed)});
    };

    while (!eof()) {
      char c = peek();
      if (c == '<') {
        if (peek_at(1) == '/') {
          flush_text();
          if (close_name == nullptr) {
            return;  // top level: caller reports the error
          }
          int at_line = line_, at_column = column_;
          advance();
          advance();
          std::string raw = parse_raw_name();
          skip_spaces();
          expect('>', "'>'");
          if (strip_prefix(raw) != *close_name) {
            fail_at("mismatched closing tag '" + raw + "', expected '" +
                        *close_name + "'",
                    at_line, at_column);
          }
          return;
        }
        if (starts_with("<!--")) {
          flush_text();
          skip_comment();
        } else if (starts_with("<?")) {
          flush_text();
          skip_processing_instruction();
        } else if (peek_at(1) == '!') {
          flush_text();
          skip_declaration();
        } else {
          flush_text();
          out.push_back(Node{parse_element()});
        }
      } else if (c == '&') {
        parse_entity(pending_text);
      } else {
        pending_text.push_back(c);
        advance();
      }
    }
    flush_text();
    if (close_name != nullptr) {
      fail("unexpected end of input inside element '" + *close_name + "'");
    }
  }

  void skip_comment() {
    int at_line = line_, at_column = column_;
    pos_advance(4);  // "<!--"
    while (!eof()) {
      if (starts_with("-->")) {
        pos_advance(3);
        return;
      }
      advance();
    }
    fail_at("unterminated comment", at_line, at_column);
  }

  void skip_processing_instruction() {
    int at_line = line_, at_column = column_;
    pos_advance(2);  // "<?"
    while (!eof()) {
      if (starts_with("?>")) {
        pos_advance(2);
        return;
      }
      advance();
    }
    fail_at("unterminated processing instruction", at_line, at_column);
  }

  void skip_declaration() {
    int at_line = line_, at_column = column_;
    if (!starts_with("<!DOCTYPE") && !starts_with("<!doctype")) {
      fail("unsupported markup declaration");
    }
    pos_advance(2);
    int bracket_depth = 0;
    while (!eof()) {
      char c = peek();
      if (c == '[') ++bracket_depth;
      if (c == ']') --bracket_depth;
      if (c == '>' && bracket_depth <= 0) {
        advance();
        return;
      }
      advance();
    }
    fail_at("unterminated DOCTYPE declaration", at_line, at_column);
  }

  void pos_advance(size_t n) {
    for (size_t i = 0; i < n && !eof(); ++i) advance();
  }

  Element parse_element() {
    if (++depth_ > kMaxElementDepth) fail("markup nested too deeply");
    Element e;
    e.position = {line_, column_};
    advance();  // '<'
    e.name = strip_prefix(parse_raw_name());

    while (true) {
      skip_spaces();
      if (eof()) fail("unterminated tag for element '" + e.name + "'");
      char c = peek();
      if (c == '>') {
        advance();
        parse_content(e.children, &e.name, e.is_token());
        finish_element(e);
        --depth_;
        return e;
      }
      if (c == '/') {
        advance();
        expect('>', "'>' after '/'");
        finish_element(e);
        --depth_;
        return e;
      }
      int at_line = line_, at_column = column_;
      std::string attr_name = parse_raw_name();
      skip_spaces();
      expect('=', "'=' after attribute name");
      skip_spaces();
      if (eof() || (peek() != '"' && peek() != '\'')) {
        fail("expected a quoted attribute value");
      }
      char quote = peek();
      advance();
      std::string value;
      while (!eof() && peek() != quote) {
        char vc = peek();
        if (vc == '&') {
          parse_entity(value);
        } else {
          // Attribute-value normalization: literal whitespace becomes a
          // plain space.
          value.push_back(is_ascii_space(vc) ? ' ' : vc);
          advance();
        }
      }
      if (eof()) fail_at("unterminated attribute value", at_line, at_column);
      advance();  // closing quote
      for (const Attribute& a : e.attributes) {
        if (a.name == attr_name) {
          fail_at("duplicate attribute '" + attr_name + "'", at_line,
                  at_column);
        }
      }
      e.attributes.push_back({std::move(attr_name), std::move(value)});
    }
  }

  // Merges adjacent text runs inside token elements so entity boundaries do
  // not split the content.
  static void finish_element(Element& e) {
    if (!e.is_token()) return;
    std::string merged;
    std::vector<Node> rest;
    for (Node& n : e.children) {
      if (n.is_text()) {
        merged += n.text();
      } else {
        rest.push_back(std::move(n));
      }
    }
    e.children.clear();
    merged = collapse_whitespace(merged);
    if (!merged.empty()) e.children.push_back(Node{std::move(merged)});
    for (Node& n : rest) e.children.push_back(std::move(n));
  }

  std::string_view text_;
  size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
  int depth_ = 0;
};

void escape_text(std::string_view s, std::string& out) {
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out.push_back(c);
    }
  }
}

void escape_attribute(std::string_view s, std::string& out) {
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
}

void serialize_element(const Element& e, std::string& out) {
  out.push_back('<');
  out += e.name;
  std::vector<const Attribute*> attrs;
  attrs.reserve(e.attributes.size());
  for (const Attribute& a : e.attributes) attrs.push_back(&a);
  std::sort(attrs.begin(), attrs.end(),
            [](const Attribute* a, const Attribute* b) {
              return a->name < b->name;
            });
  for (const Attribute* a : attrs) {
    out.push_back(' ');
    out += a->name;
    out += "=\"";
    escape_attribute(a->value, out);
    out.push_back('"');
  }
  if (e.children.empty()) {
    out += "/>";
    return;
  }
  out.push_back('>');
  for (const Node& n : e.children) {
    if (n.is_element()) {
      serialize_element(n.element(), out);
    } else {
      escape_text(n.text(), out);
    }
  }
  out += "</";
  out += e.name;
  out.push_back('>');
}

void collect_math_roots(const Element& e, std::vector<const Element*>& out) {
  if (e.name == "math") out.push_back(&e);
  for (const Node& n : e.children) {
    if (n.is_element()) collect_math_roots(n.element(), out);
  }
}

}  // namespace

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error(message + " at line " + std::to_string(line) +
                         ", column " + std::to_string(column)),
      line_(line),
      column_(column) {}

const std::string* Element::attribute(std::string_view attr_name) const {
  for (const Attribute& a : attributes) {
    if (a.name == attr_name) return &a.value;
  }
  return nullptr;
}

bool Element::is_token() const {
  return name == "mi" || name == "mo" || name == "mn" || name == "mtext" ||
         name == "ms";
}

std::string Element::text() const {
  std::string out;
  for (const Node& n : children) {
    if (n.is_text()) out += n.text();
  }
  return out;
}

std::vector<const Element*> Element::child_elements() const {
  std::vector<const Element*> out;
  for (const Node& n : children) {
    if (n.is_element()) out.push_back(&n.element());
  }
  return out;
}

const Element* Element::first_child_element() const {
  for (const Node& n : children) {
    if (n.is_element()) return &n.element();
  }
  return nullptr;
}

Document parse_document(std::string_view input) {
  DomParser parser(input);
  return parser.parse();
}

std::vector<const Element*> math_roots(const Document& doc) {
  std::vector<const Element*> out;
  collect_math_roots(doc.root, out);
  return out;
}

std::string serialize_canonical(const Element& e) {
  std::string out;
  serialize_element(e, out);
  return out;
}

std::string serialize_canonical(const Document& doc) {
  if (doc.root.name == kFragmentRootName) {
    std::string out;
    for (const Node& n : doc.root.children) {
      if (n.is_element()) {
        serialize_element(n.element(), out);
      } else {
        escape_text(n.text(), out);
      }
    }
    return out;
  }
  return serialize_canonical(doc.root);
}

bool structurally_equal(const Element& a, const Element& b) {
  if (a.name != b.name) return false;
  if (a.attributes.size() != b.attributes.size()) return false;
  auto sorted_attrs = [](const Element& e) {
    std::vector<std::pair<std::string, std::string>> v;
    for (const Attribute& attr : e.attributes) v.emplace_back(attr.name, attr.value);
    std::sort(v.begin(), v.end());
    return v;
  };
  if (sorted_attrs(a) != sorted_attrs(b)) return false;
  if (a.children.size() != b.children.size()) return false;
  for (size_t i = 0; i < a.children.size(); ++i) {
    const Node& na = a.children[i];
    const Node& nb = b.children[i];
    if (na.is_element() != nb.is_element()) return false;
    if (na.is_element()) {
      if (!structurally_equal(na.element(), nb.element())) return false;
    } else if (na.text() != nb.text()) {
      return false;
    }
  }
  return true;
}

bool structurally_equal(const Document& a, const Document& b) {
  return structurally_equal(a.root, b.root);
}

}  // namespace mathspeak
