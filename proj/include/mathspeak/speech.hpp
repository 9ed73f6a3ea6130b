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
#include <vector>

#include "mathspeak/dom.hpp"
#include "mathspeak/intent_tree.hpp"
#include "mathspeak/registry.hpp"

namespace mathspeak {

struct SpeechOptions {
  Style style = Style::medium;
  Mode mode = Mode::semantic;
  bool heuristics = true;
  std::string language = "en";  // BCP-47; selects among loaded data files
  // Emits start/end bracket words around fraction, root, and grouping
  // constructs.
  bool grouping_markers = false;

  BuildOptions build_options() const { return BuildOptions{mode, heuristics}; }
};

struct SpeechOutput {
  // Single line, single-space separated; no leading or trailing space.
  std::string text;
  std::vector<Diagnostic> diagnostics;
};

/// Renders a grounded tree to speech: concept templates and fixity rules
/// for concept nodes, the per-element wording table for structural nodes,
/// plus table, chemistry, unit, and roman-numeral property handling.
SpeechOutput speak(const IntentTree& tree, const SpeechOptions& options,
                   const Registry& registry);

// Builds the tree for an element and speaks it; build diagnostics come
// first in the output.
SpeechOutput speak_element(const Element& e, const SpeechOptions& options,
                           const Registry& registry);

// The per-element wording table over already-rendered child speech.
// Tables need row structure and are handled by speak itself.
std::string speak_structural(std::string_view kind,
                             const std::vector<std::string>& children,
                             const SpeechOptions& options,
                             const Registry& registry);

// "XIV" -> 14. Rejects empty input and foreign characters.
std::optional<int> roman_to_decimal(std::string_view text);

}  // namespace mathspeak
