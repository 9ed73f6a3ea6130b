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

#include <array>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mathspeak {

enum class Style { terse = 0, medium = 1, verbose = 2 };

enum class Fixity { function, silent, prefix, infix, postfix };

enum class PropertyClass {
  fixity,
  table,
  chemistry,
  unit,
  roman_numeral,
  element,
  unknown,
};

inline constexpr int kUnboundedArity = std::numeric_limits<int>::max();

// Speech template mini-language: literal words interleaved with
//   #1..#9       argument by position
//   #all{sep}    arguments not claimed elsewhere, joined by sep
//   #last{word}  word followed by the final argument, when arity >= 2
struct TemplateSegment {
  enum class Kind { literal, positional, all, last };
  Kind kind = Kind::literal;
  std::string text;  // literal text, or the sep/word payload
  int index = 0;     // 1-based, for positional
};

// Returns an error message, or nullopt on success.
std::optional<std::string> parse_template(std::string_view text,
                                          std::vector<TemplateSegment>& out);

std::string instantiate_template(const std::vector<TemplateSegment>& segments,
                                 const std::vector<std::string>& args);

enum class EntrySource { core, open };

struct ConceptEntry {
  std::string name;
  int min_arity = 0;
  int max_arity = 0;  // kUnboundedArity when the row says unbounded
  Fixity default_fixity = Fixity::function;
  std::array<std::string, 3> templates;  // indexed by Style
  EntrySource source = EntrySource::core;

  const std::string& template_for(Style style) const {
    return templates[static_cast<size_t>(style)];
  }
};

struct UnitEntry {
  std::string singular;
  std::string plural;
};

class RegistryLoadError : public std::runtime_error {
 public:
  RegistryLoadError(const std::string& origin, int line,
                    const std::string& message);

  const std::string& origin() const { return origin_; }
  int line() const { return line_; }

 private:
  std::string origin_;
  int line_;
};

// Data tables driving the speech engine: concept templates, character
// names, unit names, chemical element names. Immutable in normal use;
// loading produces a new value.
class Registry {
 public:
  // The always-available shipped data set.
  static Registry builtin();

  // Parses registry rows from text. Later loads override earlier entries
  // with the same key. Throws RegistryLoadError with origin and line.
  void load_text(std::string_view text, const std::string& origin,
                 EntrySource source);
  void load_file(const std::string& path, EntrySource source);

  // Exact-name match with arity within [min_arity, max_arity]; the
  // narrowest range wins. Returns nullptr when nothing matches.
  const ConceptEntry* lookup_concept(std::string_view name, int arity) const;

  bool has_concept_name(std::string_view name) const;

  // Total: unknown names map to PropertyClass::unknown.
  PropertyClass classify_property(std::string_view name) const;

  const std::string* character_name(std::string_view text) const;
  const UnitEntry* unit(std::string_view symbol) const;
  const std::string* element_name(std::string_view symbol) const;

  size_t concept_count() const;
  size_t element_count() const { return elements_.size(); }
  size_t unit_count() const { return units_.size(); }

  // Visits every concept entry (test support).
  template <typename Fn>
  void for_each_concept(Fn&& fn) const {
    for (const auto& [name, entries] : concepts_) {
      for (const ConceptEntry& e : entries) fn(e);
    }
  }

 private:
  std::map<std::string, std::vector<ConceptEntry>, std::less<>> concepts_;
  std::map<std::string, std::string, std::less<>> characters_;
  std::map<std::string, UnitEntry, std::less<>> units_;
  std::map<std::string, std::string, std::less<>> elements_;
};

// Builds the builtin registry, then loads each file in order with
// override semantics.
Registry load_registry(const std::vector<std::string>& paths);

// The shipped data set in registry text form.
std::string_view builtin_registry_text();

std::optional<Fixity> fixity_from_name(std::string_view name);
std::string_view fixity_name(Fixity f);
std::optional<Style> style_from_name(std::string_view name);

}  // namespace mathspeak
