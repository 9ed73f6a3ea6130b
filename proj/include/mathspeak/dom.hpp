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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace mathspeak {

struct SourcePosition {
  int line = 0;
  int column = 0;
};

struct Attribute {
  std::string name;
  std::string value;
};

struct Node;

/// One element of the parsed markup tree. Namespace prefixes are stripped
/// from the tag name at parse time; attribute names keep theirs.
struct Element {
  std::string name;
  std::vector<Attribute> attributes;
  std::vector<Node> children;
  SourcePosition position;

  // Returns nullptr when the attribute is absent.
  const std::string* attribute(std::string_view attr_name) const;

  // True for the MathML token elements mi, mo, mn, mtext, ms.
  bool is_token() const;

  // Concatenated text of the direct text children.
  std::string text() const;

  std::vector<const Element*> child_elements() const;
  const Element* first_child_element() const;
};

// Either a child element or a run of character data.
struct Node {
  std::variant<Element, std::string> data;

  bool is_element() const { return std::holds_alternative<Element>(data); }
  bool is_text() const { return std::holds_alternative<std::string>(data); }
  const Element& element() const { return std::get<Element>(data); }
  const std::string& text() const { return std::get<std::string>(data); }
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column);

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Name given to the synthetic root wrapped around multi-element or
// mixed-content fragments.
inline constexpr const char* kFragmentRootName = "#fragment";

struct Document {
  Element root;
};

/// Parses UTF-8 markup into an element tree. Accepts either a single-rooted
/// document or a fragment with text and several elements at the top level;
/// fragments get a synthetic "#fragment" root. Comments, processing
/// instructions, and DOCTYPE declarations are skipped. The five predefined
/// entities and numeric character references are expanded. Throws
/// ParseError with a line/column on malformed input.
Document parse_document(std::string_view input);

// Every element whose local name is "math", in document order.
std::vector<const Element*> math_roots(const Document& doc);

// Canonical text form: attributes sorted by name, entities re-escaped,
// childless elements self-closed. Re-parsing the result yields a tree
// structurally equal to the input.
std::string serialize_canonical(const Element& e);
std::string serialize_canonical(const Document& doc);

// Equality up to attribute order; source positions are ignored.
bool structurally_equal(const Element& a, const Element& b);
bool structurally_equal(const Document& a, const Document& b);

}  // namespace mathspeak
