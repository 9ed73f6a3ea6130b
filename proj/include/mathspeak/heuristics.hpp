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
#include <utility>
#include <vector>

#include "mathspeak/dom.hpp"
#include "mathspeak/intent.hpp"

namespace mathspeak {

// An inferred intent expression together with the elements its synthetic
// references bind to. The expression never references document `arg`
// attributes; every reference name (_1, _2, ...) appears in `bindings`.
struct InferredIntent {
  IntentExpr expr;
  std::vector<std::pair<std::string, const Element*>> bindings;
  std::string rule_id;

  const Element* binding(std::string_view name) const {
    for (const auto& [key, element] : bindings) {
      if (key == name) return element;
    }
    return nullptr;
  }
};

/// Infers an intent for selected ambiguous notations. The caller must have
/// established that `e` carries no usable author intent. Rules apply in a
/// fixed order, first match wins:
///   1. bars-around: an mrow of exactly |X| — determinant when X is a
///      single capital Latin letter or a square table, absolute value
///      otherwise
///   2. superscript-two: msup with an mn exponent of "2" becomes power
///   3. superscript-capital-t: msup with an mi "T" exponent is left alone;
///      it is genuinely ambiguous between a power and a transpose
/// Returns nullopt when nothing matches.
std::optional<InferredIntent> infer_intent(const Element& e);

}  // namespace mathspeak
