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

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace mathspeak {

// The grammar accepted by parse_intent:
//
//   intent      := ws expr ws | ws props ws
//   expr        := head props? app?
//   head        := concept | number | reference
//   concept     := NameToken        first char: letter or '_';
//                                   rest: letters, digits, '-', '_', '.'
//   number      := '-'? digits ('.' digits)?
//   reference   := '$' NameToken
//   props       := (ws ':' NameToken)+
//   app         := ws '(' ws (expr (ws ',' ws expr)*)? ws ')'
//
// "letter" covers ASCII letters plus the common non-ASCII letter blocks.

struct ConceptLiteral {
  std::string name;
  bool operator==(const ConceptLiteral&) const = default;
};

struct NumberLiteral {
  std::string text;
  bool operator==(const NumberLiteral&) const = default;
};

struct Reference {
  std::string arg_name;
  bool operator==(const Reference&) const = default;
};

// A properties-only intent such as ":system-of-equations".
struct EmptyHead {
  bool operator==(const EmptyHead&) const = default;
};

using Head = std::variant<ConceptLiteral, NumberLiteral, Reference, EmptyHead>;

struct IntentExpr {
  Head head;
  // Property names without the leading ':'.
  std::vector<std::string> properties;
  // absent = no application; present but empty = zero-arity application.
  std::optional<std::vector<IntentExpr>> arguments;

  bool operator==(const IntentExpr&) const = default;
};

struct SyntaxError {
  // Code-point index into the attribute value.
  size_t offset = 0;
  std::string message;
};

using IntentParseResult = std::variant<IntentExpr, SyntaxError>;

// Total: every input produces either an AST or a SyntaxError.
IntentParseResult parse_intent(std::string_view text);

// Canonical text: no interior whitespace, single comma separators.
// parse_intent(serialize_intent(e)) is structurally equal to e.
std::string serialize_intent(const IntentExpr& e);

// True when text forms a single complete number token.
bool is_number_token(std::string_view text);

inline bool intent_parse_ok(const IntentParseResult& r) {
  return std::holds_alternative<IntentExpr>(r);
}

}  // namespace mathspeak
