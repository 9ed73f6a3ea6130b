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

#include "mathspeak/intent.hpp"

#include <cstdint>

namespace mathspeak {

namespace {

// Letter test over decoded code points: exact for ASCII, common letter
// blocks elsewhere.
bool is_letter(uint32_t cp) {
  if (cp < 0x80) {
    return (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z');
  }
  if (cp >= 0x00C0 && cp <= 0x024F) return cp != 0x00D7 && cp != 0x00F7;
  if (cp >= 0x0370 && cp <= 0x03FF) return true;   // Greek
  if (cp >= 0x0400 && cp <= 0x04FF) return true;   // Cyrillic
  if (cp >= 0x0530 && cp <= 0x058F) return true;   // Armenian
  if (cp >= 0x05D0 && cp <= 0x05EA) return true;   // Hebrew
  if (cp >= 0x0620 && cp <= 0x064A) return true;   // Arabic
  if (cp >= 0x1E00 && cp <= 0x1FFF) return true;   // Latin/Greek extended
  if (cp >= 0x3040 && cp <= 0x30FF) return true;   // Kana
  if (cp >= 0x4E00 && cp <= 0x9FFF) return true;   // CJK
  return false;
}

bool is_digit(uint32_t cp) { return cp >= '0' && cp <= '9'; }

bool is_name_start(uint32_t cp) { return cp == '_' || is_letter(cp); }

bool is_name_continue(uint32_t cp) {
  return is_name_start(cp) || is_digit(cp) || cp == '-' || cp == '.';
}

bool is_space(uint32_t cp) {
  return cp == ' ' || cp == '\t' || cp == '\r' || cp == '\n';
}

constexpr int kMaxNestingDepth = 256;

class IntentParser {
 public:
  explicit IntentParser(std::string_view text) : text_(text) {}

  IntentParseResult parse() {
    skip_spaces();
    IntentExpr expr;
    if (eof()) return error("empty intent value");
    if (peek() == ':') {
      expr.head = EmptyHead{};
      if (!parse_properties(expr.properties)) return take_error();
      if (expr.properties.empty()) return error("expected a property name");
    } else {
      if (!parse_expr(expr)) return take_error();
    }
    skip_spaces();
    if (!eof()) return error("unexpected trailing input");
    return expr;
  }

 private:
  bool eof() const { return byte_ >= text_.size(); }

  // Decodes the code point at the cursor. Malformed bytes decode to a
  // replacement value so parsing stays total over arbitrary input.
  uint32_t peek() const {
    size_t len;
    return decode(byte_, len);
  }

  uint32_t decode(size_t at, size_t& len) const {
    const auto* s = reinterpret_cast<const unsigned char*>(text_.data());
    unsigned char b0 = s[at];
    if (b0 < 0x80) {
      len = 1;
      return b0;
    }
    size_t need = 0;
    uint32_t cp = 0;
    if ((b0 & 0xE0) == 0xC0) {
      need = 1;
      cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
      need = 2;
      cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
      need = 3;
      cp = b0 & 0x07;
    } else {
      len = 1;
      return 0xFFFD;
    }
    for (size_t i = 1; i <= need; ++i) {
      if (at + i >= text_.size() || (s[at + i] & 0xC0) != 0x80) {
        len = 1;
        return 0xFFFD;
      }
      cp = (cp << 6) | (s[at + i] & 0x3F);
    }
    len = need + 1;
    return cp;
  }

  void advance() {
    size_t len;
    decode(byte_, len);
    byte_ += len;
    ++cp_index_;
  }

  void skip_spaces() {
    while (!eof() && is_space(peek())) advance();
  }

  // Records a failure; parse functions return false and the caller
  // propagates.
  bool set_error(const std::string& message) {
    if (!error_.has_value()) error_ = SyntaxError{cp_index_, message};
    return false;
  }

  SyntaxError take_error() {
    return error_.value_or(SyntaxError{cp_index_, "syntax error"});
  }

  SyntaxError error(const std::string& message) {
    return SyntaxError{cp_index_, message};
  }

  std::string read_name() {
    size_t start = byte_;
    advance();  // validated name-start character
    while (!eof() && is_name_continue(peek())) advance();
    return std::string(text_.substr(start, byte_ - start));
  }

  bool parse_expr(IntentExpr& out) {
    if (++depth_ > kMaxNestingDepth) {
      return set_error("expression nested too deeply");
    }
    skip_spaces();
    bool ok = parse_head(out) && parse_properties(out.properties) &&
              parse_application(out);
    --depth_;
    return ok;
  }

  bool parse_head(IntentExpr& out) {
    if (eof()) return set_error("expected an expression");
    uint32_t c = peek();
    if (c == '$') {
      advance();
      if (eof() || !is_name_start(peek())) {
        return set_error("'$' must be followed by a name");
      }
      out.head = Reference{read_name()};
      return true;
    }
    if (is_digit(c) || (c == '-' && is_digit(peek_second()))) {
      return parse_number(out);
    }
    if (is_name_start(c)) {
      out.head = ConceptLiteral{read_name()};
      return true;
    }
    return set_error("expected a concept name, number, or reference");
  }

  uint32_t peek_second() const {
    size_t len;
    uint32_t first = decode(byte_, len);
    (void)first;
    size_t next = byte_ + len;
    if (next >= text_.size()) return 0;
    size_t len2;
    return decode(next, len2);
  }

  bool parse_number(IntentExpr& out) {
    size_t start = byte_;
    if (peek() == '-') advance();
    while (!eof() && is_digit(peek())) advance();
    if (!eof() && peek() == '.' && is_digit(peek_second())) {
      advance();
      while (!eof() && is_digit(peek())) advance();
    }
    if (!eof() && is_name_continue(peek())) {
      return set_error("number followed by name characters");
    }
    out.head = NumberLiteral{std::string(text_.substr(start, byte_ - start))};
    return true;
  }

  bool parse_properties(std::vector<std::string>& out) {
    while (true) {
      size_t saved_byte = byte_;
      size_t saved_cp = cp_index_;
      skip_spaces();
      if (eof() || peek() != ':') {
        byte_ = saved_byte;
        cp_index_ = saved_cp;
        return true;
      }
      advance();  // ':'
      if (eof() || !is_name_start(peek())) {
        return set_error("':' must be followed by a property name");
      }
      out.push_back(read_name());
    }
  }

  bool parse_application(IntentExpr& out) {
    size_t saved_byte = byte_;
    size_t saved_cp = cp_index_;
    skip_spaces();
    if (eof() || peek() != '(') {
      byte_ = saved_byte;
      cp_index_ = saved_cp;
      return true;
    }
    advance();  // '('
    std::vector<IntentExpr> args;
    skip_spaces();
    if (!eof() && peek() == ')') {
      advance();
      out.arguments = std::move(args);
      return true;
    }
    while (true) {
      skip_spaces();
      if (!eof() && (peek() == ',' || peek() == ')')) {
        return set_error("missing argument");
      }
      IntentExpr arg;
      if (!parse_expr(arg)) return false;
      args.push_back(std::move(arg));
      skip_spaces();
      if (eof()) return set_error("unbalanced parenthesis");
      if (peek() == ',') {
        advance();
        continue;
      }
      if (peek() == ')') {
        advance();
        out.arguments = std::move(args);
        return true;
      }
      return set_error("expected ',' or ')'");
    }
  }

  std::string_view text_;
  size_t byte_ = 0;
  size_t cp_index_ = 0;
  int depth_ = 0;
  std::optional<SyntaxError> error_;
};

void serialize_expr(const IntentExpr& e, std::string& out) {
  if (const auto* c = std::get_if<ConceptLiteral>(&e.head)) {
    out += c->name;
  } else if (const auto* n = std::get_if<NumberLiteral>(&e.head)) {
    out += n->text;
  } else if (const auto* r = std::get_if<Reference>(&e.head)) {
    out.push_back('$');
    out += r->arg_name;
  }
  for (const std::string& p : e.properties) {
    out.push_back(':');
    out += p;
  }
  if (e.arguments.has_value()) {
    out.push_back('(');
    bool first = true;
    for (const IntentExpr& arg : *e.arguments) {
      if (!first) out.push_back(',');
      first = false;
      serialize_expr(arg, out);
    }
    out.push_back(')');
  }
}

}  // namespace

IntentParseResult parse_intent(std::string_view text) {
  IntentParser parser(text);
  return parser.parse();
}

std::string serialize_intent(const IntentExpr& e) {
  std::string out;
  serialize_expr(e, out);
  return out;
}

bool is_number_token(std::string_view text) {
  IntentParseResult r = parse_intent(text);
  const auto* expr = std::get_if<IntentExpr>(&r);
  return expr != nullptr && std::holds_alternative<NumberLiteral>(expr->head) &&
         expr->properties.empty() && !expr->arguments.has_value();
}

}  // namespace mathspeak
