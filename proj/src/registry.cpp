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

#include "mathspeak/registry.hpp"

#include <fstream>
#include <sstream>

namespace mathspeak {

namespace {

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> out;
  size_t start = 0;
  while (true) {
    size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

bool parse_arity(std::string_view field, int& out) {
  if (field == "\xE2\x88\x9E") {  // U+221E
    out = kUnboundedArity;
    return true;
  }
  if (field.empty()) return false;
  int value = 0;
  for (char c : field) {
    if (c < '0' || c > '9') return false;
    value = value * 10 + (c - '0');
    if (value > 1'000'000) return false;
  }
  out = value;
  return true;
}

// Highest positional placeholder in a parsed template, 0 if none.
int max_placeholder(const std::vector<TemplateSegment>& segments) {
  int max = 0;
  for (const TemplateSegment& s : segments) {
    if (s.kind == TemplateSegment::Kind::positional && s.index > max) {
      max = s.index;
    }
  }
  return max;
}

}  // namespace

RegistryLoadError::RegistryLoadError(const std::string& origin, int line,
                                     const std::string& message)
    : std::runtime_error(origin + ":" + std::to_string(line) + ": " + message),
      origin_(origin),
      line_(line) {}

std::optional<Fixity> fixity_from_name(std::string_view name) {
  if (name == "function") return Fixity::function;
  if (name == "silent") return Fixity::silent;
  if (name == "prefix") return Fixity::prefix;
  if (name == "infix") return Fixity::infix;
  if (name == "postfix") return Fixity::postfix;
  return std::nullopt;
}

std::string_view fixity_name(Fixity f) {
  switch (f) {
    case Fixity::function: return "function";
    case Fixity::silent: return "silent";
    case Fixity::prefix: return "prefix";
    case Fixity::infix: return "infix";
    case Fixity::postfix: return "postfix";
  }
  return "function";
}

std::optional<Style> style_from_name(std::string_view name) {
  if (name == "terse") return Style::terse;
  if (name == "medium") return Style::medium;
  if (name == "verbose") return Style::verbose;
  return std::nullopt;
}

std::optional<std::string> parse_template(std::string_view text,
                                          std::vector<TemplateSegment>& out) {
  out.clear();
  std::string literal;
  auto flush = [&] {
    if (!literal.empty()) {
      out.push_back({TemplateSegment::Kind::literal, literal, 0});
      literal.clear();
    }
  };
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c != '#') {
      if (c == '{' || c == '}') return "stray brace outside a placeholder";
      literal.push_back(c);
      ++i;
      continue;
    }
    ++i;
    if (i >= text.size()) return "dangling '#'";
    if (text[i] >= '1' && text[i] <= '9') {
      flush();
      out.push_back(
          {TemplateSegment::Kind::positional, "", text[i] - '0'});
      ++i;
      continue;
    }
    TemplateSegment::Kind kind;
    if (text.substr(i, 3) == "all") {
      kind = TemplateSegment::Kind::all;
      i += 3;
    } else if (text.substr(i, 4) == "last") {
      kind = TemplateSegment::Kind::last;
      i += 4;
    } else {
      return "unknown placeholder after '#'";
    }
    if (i >= text.size() || text[i] != '{') return "expected '{'";
    ++i;
    size_t close = text.find('}', i);
    if (close == std::string_view::npos) return "unbalanced braces";
    std::string_view payload = text.substr(i, close - i);
    if (payload.find('{') != std::string_view::npos) {
      return "unbalanced braces";
    }
    flush();
    out.push_back({kind, std::string(payload), 0});
    i = close + 1;
  }
  flush();
  return std::nullopt;
}

std::string instantiate_template(const std::vector<TemplateSegment>& segments,
                                 const std::vector<std::string>& args) {
  const int n = static_cast<int>(args.size());
  std::vector<bool> claimed(args.size(), false);
  bool has_last = false;
  for (const TemplateSegment& s : segments) {
    if (s.kind == TemplateSegment::Kind::positional && s.index <= n) {
      claimed[s.index - 1] = true;
    }
    if (s.kind == TemplateSegment::Kind::last) has_last = true;
  }
  if (has_last && n >= 2) claimed[n - 1] = true;

  std::string out;
  for (const TemplateSegment& s : segments) {
    switch (s.kind) {
      case TemplateSegment::Kind::literal:
        out += s.text;
        break;
      case TemplateSegment::Kind::positional:
        if (s.index <= n) out += args[s.index - 1];
        break;
      case TemplateSegment::Kind::all: {
        bool first = true;
        for (int i = 0; i < n; ++i) {
          if (claimed[i]) continue;
          if (!first) out += s.text;
          first = false;
          out += args[i];
        }
        break;
      }
      case TemplateSegment::Kind::last:
        if (n >= 2) {
          out += s.text;
          out += args[n - 1];
        }
        break;
    }
  }
  return out;
}

void Registry::load_text(std::string_view text, const std::string& origin,
                         EntrySource source) {
  // Keys seen in this load, for the duplicate-row check.
  std::map<std::string, int> seen;

  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    std::string_view line = eol == std::string_view::npos
                                ? text.substr(pos)
                                : text.substr(pos, eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    size_t first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos || line[first] == '#') continue;

    auto fail = [&](const std::string& message) -> void {
      throw RegistryLoadError(origin, line_no, message);
    };
    auto check_duplicate = [&](const std::string& key) {
      if (++seen[key] > 1) fail("duplicate row for " + key);
    };

    std::vector<std::string_view> cols = split_tabs(line);
    if (cols[0] == "C") {
      if (cols.size() != 8) fail("concept row needs 8 columns");
      ConceptEntry entry;
      entry.name = std::string(cols[1]);
      entry.source = source;
      if (entry.name.empty()) fail("empty concept name");
      if (!parse_arity(cols[2], entry.min_arity)) fail("bad min arity");
      if (!parse_arity(cols[3], entry.max_arity)) fail("bad max arity");
      if (entry.min_arity > entry.max_arity) fail("min arity above max");
      auto fixity = fixity_from_name(cols[4]);
      if (!fixity.has_value()) fail("unknown fixity '" + std::string(cols[4]) + "'");
      entry.default_fixity = *fixity;
      for (int t = 0; t < 3; ++t) {
        entry.templates[t] = std::string(cols[5 + t]);
        std::vector<TemplateSegment> segments;
        auto err = parse_template(entry.templates[t], segments);
        if (err.has_value()) fail("bad template: " + *err);
        if (max_placeholder(segments) > entry.max_arity) {
          fail("placeholder exceeds max arity");
        }
      }
      check_duplicate("C " + entry.name + " " + std::string(cols[2]) + " " +
                      std::string(cols[3]));
      std::vector<ConceptEntry>& list = concepts_[entry.name];
      bool replaced = false;
      for (ConceptEntry& existing : list) {
        if (existing.min_arity == entry.min_arity &&
            existing.max_arity == entry.max_arity) {
          existing = entry;
          replaced = true;
          break;
        }
      }
      if (!replaced) list.push_back(std::move(entry));
    } else if (cols[0] == "X") {
      if (cols.size() != 3) fail("character row needs 3 columns");
      if (cols[1].empty()) fail("empty character");
      check_duplicate("X " + std::string(cols[1]));
      characters_[std::string(cols[1])] = std::string(cols[2]);
    } else if (cols[0] == "U") {
      if (cols.size() != 4) fail("unit row needs 4 columns");
      if (cols[1].empty()) fail("empty unit symbol");
      check_duplicate("U " + std::string(cols[1]));
      units_[std::string(cols[1])] =
          UnitEntry{std::string(cols[2]), std::string(cols[3])};
    } else if (cols[0] == "E") {
      if (cols.size() != 3) fail("element row needs 3 columns");
      if (cols[1].empty()) fail("empty element symbol");
      check_duplicate("E " + std::string(cols[1]));
      elements_[std::string(cols[1])] = std::string(cols[2]);
    } else {
      fail("unknown row kind '" + std::string(cols[0]) + "'");
    }
  }
}

void Registry::load_file(const std::string& path, EntrySource source) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw RegistryLoadError(path, 0, "cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  load_text(buffer.str(), path, source);
}

Registry Registry::builtin() {
  Registry r;
  r.load_text(builtin_registry_text(), "<builtin>", EntrySource::core);
  return r;
}

const ConceptEntry* Registry::lookup_concept(std::string_view name,
                                             int arity) const {
  auto it = concepts_.find(name);
  if (it == concepts_.end()) return nullptr;
  const ConceptEntry* best = nullptr;
  for (const ConceptEntry& e : it->second) {
    if (arity < e.min_arity || arity > e.max_arity) continue;
    if (best == nullptr) {
      best = &e;
      continue;
    }
    long long best_width =
        static_cast<long long>(best->max_arity) - best->min_arity;
    long long width = static_cast<long long>(e.max_arity) - e.min_arity;
    if (width <= best_width) best = &e;  // ties: later entry wins
  }
  return best;
}

bool Registry::has_concept_name(std::string_view name) const {
  return concepts_.find(name) != concepts_.end();
}

PropertyClass Registry::classify_property(std::string_view name) const {
  if (fixity_from_name(name).has_value()) return PropertyClass::fixity;
  if (name == "matrix" || name == "piecewise" ||
      name == "system-of-equations" || name == "lines" ||
      name == "continued-row") {
    return PropertyClass::table;
  }
  if (name == "chemical-equation") return PropertyClass::chemistry;
  if (name == "unit") return PropertyClass::unit;
  if (name == "roman-numeral") return PropertyClass::roman_numeral;
  if (name == "chemical-element") return PropertyClass::element;
  return PropertyClass::unknown;
}

const std::string* Registry::character_name(std::string_view text) const {
  auto it = characters_.find(text);
  return it == characters_.end() ? nullptr : &it->second;
}

const UnitEntry* Registry::unit(std::string_view symbol) const {
  auto it = units_.find(symbol);
  return it == units_.end() ? nullptr : &it->second;
}

const std::string* Registry::element_name(std::string_view symbol) const {
  auto it = elements_.find(symbol);
  return it == elements_.end() ? nullptr : &it->second;
}

size_t Registry::concept_count() const {
  size_t n = 0;
  for (const auto& [name, entries] : concepts_) n += entries.size();
  return n;
}

Registry load_registry(const std::vector<std::string>& paths) {
  Registry r = Registry::builtin();
  for (const std::string& path : paths) {
    r.load_file(path, EntrySource::open);
  }
  return r;
}

}  // namespace mathspeak
