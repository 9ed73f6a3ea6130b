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

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mathspeak/dom.hpp"
#include "mathspeak/registry.hpp"

namespace mathspeak {

struct IntentTree;

// A grounded concept application. References have already been replaced by
// the trees of the elements they resolved to.
struct ConceptNode {
  std::string name;
  std::vector<std::string> properties;
  std::vector<IntentTree> children;
  // Underscore-prefixed names force the author's exact wording.
  bool literal_speech = false;
  // Set when the concept came from a heuristic rule, not the author.
  bool from_heuristic = false;

  bool operator==(const ConceptNode&) const = default;
};

struct NumberNode {
  std::string text;
  bool operator==(const NumberNode&) const = default;
};

// Fallback for markup without (usable) intent: mirrors the element
// structure. token_text is set exactly for token elements.
struct StructuralNode {
  std::string kind;
  std::vector<std::string> properties;
  std::vector<IntentTree> children;
  std::optional<std::string> token_text;

  bool operator==(const StructuralNode&) const = default;
};

struct IntentTree {
  std::variant<ConceptNode, NumberNode, StructuralNode> node;

  bool operator==(const IntentTree&) const = default;

  const ConceptNode* concept_node() const { return std::get_if<ConceptNode>(&node); }
  const NumberNode* number() const { return std::get_if<NumberNode>(&node); }
  const StructuralNode* structural() const {
    return std::get_if<StructuralNode>(&node);
  }
};

// Pseudo element name used when a reference head carries an application:
// the first child is the resolved head, the rest are the arguments.
inline constexpr const char* kApplyKind = "apply";

enum class Mode { semantic, syntactic };

struct BuildOptions {
  Mode mode = Mode::semantic;
  bool heuristics = true;
};

enum class Severity { error, warning, info };

// Diagnostic codes, the full published set.
inline constexpr const char* kDiagIntentSyntax = "INTENT_SYNTAX";
inline constexpr const char* kDiagDanglingRef = "DANGLING_REF";
inline constexpr const char* kDiagShadowedArg = "SHADOWED_ARG";
inline constexpr const char* kDiagUnknownConcept = "UNKNOWN_CONCEPT";
inline constexpr const char* kDiagUnknownProperty = "UNKNOWN_PROPERTY";
inline constexpr const char* kDiagBadFixity = "BAD_FIXITY";
inline constexpr const char* kDiagExtraFixity = "EXTRA_FIXITY";

struct Diagnostic {
  Severity severity = Severity::warning;
  std::string code;
  std::string message;
  SourcePosition position;
};

std::string_view severity_name(Severity s);

/// Finds the element a `$name` reference resolves to: a pre-order search
/// of scope's descendants. An element carrying an `arg` attribute either
/// matches and ends the search or is skipped as a whole; elements without
/// `arg` are descended into. The scope's own `arg` is never examined.
/// Returns nullptr when there is no match.
const Element* resolve_reference(const Element& scope,
                                 std::string_view arg_name);

struct BuildResult {
  IntentTree tree;
  std::vector<Diagnostic> diagnostics;
};

/// Builds the fully grounded speech tree for an element. Author intent is
/// parsed and grounded first; an unusable attribute (bad syntax or a
/// dangling reference) is reported and then ignored, as if absent.
/// Heuristics run only when no usable author intent exists. Everything
/// else falls back to the structural tree.
BuildResult build_intent_tree(const Element& e, const BuildOptions& options,
                              const Registry& registry);

/// Checks every intent annotation under `e`: syntax errors and dangling
/// references (errors), `arg` values no referencing ancestor can reach
/// (SHADOWED_ARG warnings), and concept names absent from the registry
/// (UNKNOWN_CONCEPT info).
std::vector<Diagnostic> lint_element(const Element& e,
                                     const Registry& registry);

// One node per line, two-space indentation. Concept nodes print as
// name:prop1:prop2 (heuristic ones with a ~ prefix), numbers as #text,
// structural nodes as <kind> plus "token text" when present.
std::string dump_tree(const IntentTree& tree);

}  // namespace mathspeak
