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

#include "mathspeak/heuristics.hpp"

namespace mathspeak {

namespace {

bool is_vertical_bar(const Element& e) {
  if (e.name != "mo") return false;
  const std::string text = e.text();
  return text == "|" || text == "\xE2\x88\xA3" ||  // U+2223
         text == "\xE2\x94\x82";                   // U+2502
}

bool is_single_capital_latin(const Element& e) {
  if (e.name != "mi") return false;
  const std::string text = e.text();
  return text.size() == 1 && text[0] >= 'A' && text[0] <= 'Z';
}

// A table whose row count equals the cell count of every row.
bool is_square_table(const Element& e) {
  if (e.name != "mtable") return false;
  std::vector<const Element*> rows;
  for (const Element* child : e.child_elements()) {
    if (child->name == "mtr") rows.push_back(child);
  }
  if (rows.empty()) return false;
  const size_t n = rows.size();
  for (const Element* row : rows) {
    size_t cells = 0;
    for (const Element* cell : row->child_elements()) {
      if (cell->name == "mtd") ++cells;
    }
    if (cells != n) return false;
  }
  return true;
}

IntentExpr concept_call(std::string name, std::vector<std::string> refs) {
  IntentExpr expr;
  expr.head = ConceptLiteral{std::move(name)};
  std::vector<IntentExpr> args;
  for (std::string& r : refs) {
    IntentExpr arg;
    arg.head = Reference{std::move(r)};
    args.push_back(std::move(arg));
  }
  expr.arguments = std::move(args);
  return expr;
}

std::optional<InferredIntent> match_bars_around(const Element& e) {
  if (e.name != "mrow") return std::nullopt;
  std::vector<const Element*> children = e.child_elements();
  if (children.size() != 3) return std::nullopt;
  if (!is_vertical_bar(*children.front()) ||
      !is_vertical_bar(*children.back())) {
    return std::nullopt;
  }
  const Element* enclosed = children[1];
  const bool determinant =
      is_single_capital_latin(*enclosed) || is_square_table(*enclosed);
  InferredIntent out;
  out.expr =
      concept_call(determinant ? "determinant" : "absolute-value", {"_1"});
  out.bindings.emplace_back("_1", enclosed);
  out.rule_id = "bars-around";
  return out;
}

std::optional<InferredIntent> match_superscript_two(const Element& e) {
  if (e.name != "msup") return std::nullopt;
  std::vector<const Element*> children = e.child_elements();
  if (children.size() != 2) return std::nullopt;
  const Element* exponent = children[1];
  if (exponent->name != "mn" || exponent->text() != "2") return std::nullopt;
  InferredIntent out;
  out.expr = concept_call("power", {"_1", "_2"});
  out.bindings.emplace_back("_1", children[0]);
  out.bindings.emplace_back("_2", children[1]);
  out.rule_id = "superscript-two";
  return out;
}

// x to a capital T could be a power or a transpose; only the author can
// say. Listed as a rule so the refusal is explicit and ordered.
bool match_superscript_capital_t(const Element& e) {
  if (e.name != "msup") return false;
  std::vector<const Element*> children = e.child_elements();
  if (children.size() != 2) return false;
  return children[1]->name == "mi" && children[1]->text() == "T";
}

}  // namespace

std::optional<InferredIntent> infer_intent(const Element& e) {
  if (auto m = match_bars_around(e)) return m;
  if (auto m = match_superscript_two(e)) return m;
  if (match_superscript_capital_t(e)) return std::nullopt;
  return std::nullopt;
}

}  // namespace mathspeak
