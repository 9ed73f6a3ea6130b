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

#include "mathspeak/speech.hpp"

#include <algorithm>

namespace mathspeak {

namespace {

std::string join(const std::vector<std::string>& parts,
                 std::string_view separator) {
  std::string out;
  for (const std::string& p : parts) {
    if (p.empty()) continue;
    if (!out.empty()) out += separator;
    out += p;
  }
  return out;
}

// "a", "a and b", "a, b and c" ...
std::string join_with_and(const std::vector<std::string>& parts) {
  std::vector<std::string> nonempty;
  for (const std::string& p : parts) {
    if (!p.empty()) nonempty.push_back(p);
  }
  if (nonempty.empty()) return "";
  if (nonempty.size() == 1) return nonempty[0];
  std::string out;
  for (size_t i = 0; i + 1 < nonempty.size(); ++i) {
    if (i > 0) out += ", ";
    out += nonempty[i];
  }
  out += " and ";
  out += nonempty.back();
  return out;
}

// Unknown concept names are spoken as written, separators as spaces.
std::string name_words(std::string_view name) {
  std::string out;
  for (char c : name) {
    out.push_back(c == '-' || c == '_' ? ' ' : c);
  }
  return out;
}

// Forced wording: leading '_' dropped, remaining '_' become spaces.
std::string literal_words(std::string_view name) {
  std::string_view body = name;
  if (!body.empty() && body[0] == '_') body.remove_prefix(1);
  std::string out;
  for (char c : body) {
    out.push_back(c == '_' ? ' ' : c);
  }
  return out;
}

bool multi_word(std::string_view s) {
  return s.find(' ') != std::string_view::npos;
}

std::string normalize_speech(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  for (char c : raw) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      if (!out.empty() && out.back() != ' ') out.push_back(' ');
    } else if (c == ',') {
      // Commas attach to the preceding word.
      while (!out.empty() && out.back() == ' ') out.pop_back();
      if (!out.empty() && out.back() == ',') continue;
      if (out.empty()) continue;
      out.push_back(',');
    } else {
      out.push_back(c);
    }
  }
  while (!out.empty() && (out.back() == ' ' || out.back() == ',')) {
    out.pop_back();
  }
  return out;
}

struct RenderContext {
  bool chemistry = false;
  // Parent's child list, for sibling-sensitive wording (unit plurals).
  const std::vector<IntentTree>* siblings = nullptr;
  size_t index = 0;
};

class SpeechEngine {
 public:
  SpeechEngine(const SpeechOptions& options, const Registry& registry)
      : opts_(options), registry_(registry) {}

  std::string render(const IntentTree& tree, RenderContext ctx) {
    if (const auto* number = tree.number()) return number->text;
    if (const auto* concept_node = tree.concept_node()) {
      return render_concept(*concept_node, ctx);
    }
    return render_structural(*tree.structural(), ctx);
  }

  std::vector<Diagnostic> take_diagnostics() { return std::move(diags_); }

 private:
  std::vector<std::string> render_children(
      const std::vector<IntentTree>& children, RenderContext ctx) {
    std::vector<std::string> out;
    out.reserve(children.size());
    for (size_t i = 0; i < children.size(); ++i) {
      RenderContext child_ctx = ctx;
      child_ctx.siblings = &children;
      child_ctx.index = i;
      out.push_back(render(children[i], child_ctx));
    }
    return out;
  }

  // First fixity-class property wins; extra ones are reported. Unknown
  // property names get an info diagnostic and are otherwise ignored.
  std::optional<Fixity> scan_properties(const std::vector<std::string>& props,
                                        RenderContext& ctx) {
    std::optional<Fixity> fixity;
    for (const std::string& p : props) {
      switch (registry_.classify_property(p)) {
        case PropertyClass::fixity:
          if (!fixity.has_value()) {
            fixity = fixity_from_name(p);
          } else {
            info(kDiagExtraFixity,
                 "extra fixity property ':" + p + "' ignored");
          }
          break;
        case PropertyClass::chemistry:
          ctx.chemistry = true;
          break;
        case PropertyClass::unknown:
          info(kDiagUnknownProperty, "unknown property ':" + p + "' ignored");
          break;
        default:
          break;  // table/unit/element/roman handled at their use sites
      }
    }
    return fixity;
  }

  std::string render_concept(const ConceptNode& node, RenderContext ctx) {
    std::optional<Fixity> explicit_fixity =
        scan_properties(node.properties, ctx);
    std::vector<std::string> args = render_children(node.children, ctx);
    const int arity = static_cast<int>(node.children.size());

    if (node.literal_speech) {
      return generic_fixity(literal_words(node.name), args,
                            explicit_fixity.value_or(Fixity::prefix));
    }

    // Inside chemical notation a superscript is a charge or count, so an
    // inferred power reads bare, like the superscript it came from.
    if (ctx.chemistry && node.from_heuristic && node.name == "power") {
      return join(args, " ");
    }

    // Exponent wording mirrors the superscript table entry, so an inferred
    // power and a bare superscript sound the same.
    if (node.name == "power" && arity == 2) {
      if (const auto* n = node.children[1].number()) {
        if (n->text == "2") return args[0] + " squared";
        if (n->text == "3") return args[0] + " cubed";
      }
    }

    const ConceptEntry* entry = registry_.lookup_concept(node.name, arity);
    Fixity fixity = explicit_fixity.value_or(
        entry != nullptr ? entry->default_fixity : Fixity::function);

    // A template encodes the wording for the entry's own fixity; an
    // override steers the generic renderer instead.
    if (entry != nullptr && fixity == entry->default_fixity) {
      const std::string& template_text = entry->template_for(opts_.style);
      if (!template_text.empty()) {
        std::vector<TemplateSegment> segments;
        if (!parse_template(template_text, segments).has_value()) {
          return instantiate_template(segments, args);
        }
      }
    }

    // Leaf-style properties can name a childless concept directly.
    if (arity == 0) {
      if (std::optional<std::string> s =
              leaf_property_speech(node.properties, node.name, ctx)) {
        return *s;
      }
    }

    return generic_fixity(name_words(node.name), args, fixity);
  }

  std::string generic_fixity(const std::string& name,
                             const std::vector<std::string>& args,
                             Fixity fixity) {
    if (fixity == Fixity::infix && args.size() < 2) {
      warning(kDiagBadFixity,
              "infix '" + name + "' needs two arguments; spoken as a function");
      fixity = Fixity::function;
    }
    switch (fixity) {
      case Fixity::function:
        if (args.empty()) return name;
        switch (opts_.style) {
          case Style::terse:
            return name + " " + join(args, " ");
          case Style::medium:
            return name + " of " + join_with_and(args);
          case Style::verbose:
            return "the " + name + " of " + join_with_and(args);
        }
        return name;
      case Fixity::infix:
        return join(args, " " + name + " ");
      case Fixity::prefix:
        return args.empty() ? name : name + " " + join(args, " ");
      case Fixity::postfix:
        return args.empty() ? name : join(args, " ") + " " + name;
      case Fixity::silent:
        return join(args, " ");
    }
    return name;
  }

  // unit / chemical-element / roman-numeral wording for a leaf text.
  // Returns nullopt when no such property is present.
  std::optional<std::string> leaf_property_speech(
      const std::vector<std::string>& props, const std::string& text,
      RenderContext ctx) {
    for (const std::string& p : props) {
      switch (registry_.classify_property(p)) {
        case PropertyClass::unit: {
          const UnitEntry* unit = registry_.unit(text);
          if (unit == nullptr) {
            info(kDiagUnknownProperty,
                 "no unit entry for '" + text + "'; spoken as written");
            return text;
          }
          return preceding_number_is_one(ctx) ? unit->singular : unit->plural;
        }
        case PropertyClass::element: {
          const std::string* name = registry_.element_name(text);
          if (name == nullptr) {
            info(kDiagUnknownProperty,
                 "no element entry for '" + text + "'; spoken as written");
            return text;
          }
          return *name;
        }
        case PropertyClass::roman_numeral: {
          std::optional<int> value = roman_to_decimal(text);
          if (!value.has_value()) {
            info(kDiagUnknownProperty,
                 "'" + text + "' is not a roman numeral; spoken as written");
            return text;
          }
          return std::to_string(*value);
        }
        default:
          break;
      }
    }
    return std::nullopt;
  }

  bool preceding_number_is_one(RenderContext ctx) const {
    if (ctx.siblings == nullptr) return false;
    for (size_t i = ctx.index; i-- > 0;) {
      if (const auto* n = (*ctx.siblings)[i].number()) {
        return n->text == "1";
      }
    }
    return false;
  }

  std::string render_token(const StructuralNode& node, RenderContext ctx) {
    const std::string& text = *node.token_text;
    if (std::optional<std::string> s =
            leaf_property_speech(node.properties, text, ctx)) {
      return *s;
    }
    if (ctx.chemistry) {
      if (node.kind == "mo") {
        if (text == "=") return "double bond";
        if (text == "\xE2\x89\xA1") return "triple bond";  // U+2261
      }
      if (node.kind == "mi") {
        if (const std::string* name = registry_.element_name(text)) {
          return *name;
        }
      }
    }
    if (node.kind == "mtext" || node.kind == "ms") return text;
    if (const std::string* name = registry_.character_name(text)) {
      return *name;
    }
    return text;
  }

  std::string render_structural(const StructuralNode& node,
                                RenderContext ctx) {
    std::optional<Fixity> fixity = scan_properties(node.properties, ctx);
    if (node.token_text.has_value()) return render_token(node, ctx);
    if (node.kind == "mtable") return render_table(node, ctx);
    std::vector<std::string> parts = render_children(node.children, ctx);
    if (node.kind == kApplyKind && !parts.empty()) {
      std::vector<std::string> args(parts.begin() + 1, parts.end());
      return generic_fixity(parts[0], args,
                            fixity.value_or(Fixity::function));
    }
    return structural_wording(node.kind, parts, ctx.chemistry);
  }

  // The element wording table over rendered child speech.
  std::string structural_wording(std::string_view kind,
                                 const std::vector<std::string>& parts,
                                 bool chemistry) {
    const bool markers = opts_.grouping_markers;
    auto part = [&](size_t i) -> const std::string& {
      static const std::string empty;
      return i < parts.size() ? parts[i] : empty;
    };
    if (kind == "msup" && parts.size() == 2) {
      if (chemistry) return join(parts, " ");
      if (part(1) == "2") return part(0) + " squared";
      if (part(1) == "3") return part(0) + " cubed";
      return part(0) + " to the " + part(1);
    }
    if (kind == "msub" && parts.size() == 2) {
      if (chemistry) return join(parts, " ");
      return part(0) + " sub " + part(1);
    }
    if (kind == "msubsup" && parts.size() == 3) {
      if (chemistry) return join(parts, " ");
      return part(0) + " sub " + part(1) + " to the " + part(2);
    }
    if (kind == "mfrac" && parts.size() == 2) {
      if (markers) {
        return "fraction " + part(0) + " over " + part(1) + " end fraction";
      }
      return part(0) + " over " + part(1);
    }
    if (kind == "msqrt") {
      std::string body = join(parts, " ");
      return "square root of " + body + (markers ? " end root" : "");
    }
    if (kind == "mroot" && parts.size() == 2) {
      std::string out;
      if (part(1) == "2") {
        out = "square root of " + part(0);
      } else if (part(1) == "3") {
        out = "cube root of " + part(0);
      } else {
        out = part(1) + " root of " + part(0);
      }
      return out + (markers ? " end root" : "");
    }
    if ((kind == "mover" || kind == "munder") && parts.size() == 2) {
      std::string_view where = kind == "mover" ? "above" : "below";
      if (markers && multi_word(part(0))) {
        return "start " + part(0) + " end grouping with " + part(1) + " " +
               std::string(where);
      }
      return part(0) + " with " + part(1) + " " + std::string(where);
    }
    if (kind == "munderover" && parts.size() == 3) {
      return part(0) + " with " + part(1) + " below and " + part(2) +
             " above";
    }
    if (kind == "mspace" || kind == "mphantom" || kind == "none" ||
        kind == "mprescripts") {
      return "";
    }
    // mrow, math, mtd, mtr, mstyle, mpadded, and anything unmodeled:
    // children in order.
    return join(parts, " ");
  }

  // Rows of an mtable, with continued-row rows folded into their
  // predecessor and cells joined per table style.
  struct TableRows {
    std::vector<std::string> speech;  // one entry per announced row
    size_t max_cells = 0;
  };

  TableRows collect_rows(const StructuralNode& table, RenderContext ctx,
                         std::string_view cell_separator) {
    TableRows out;
    for (const IntentTree& child : table.children) {
      const StructuralNode* row = child.structural();
      if (row == nullptr ||
          (row->kind != "mtr" && row->kind != "mlabeledtr")) {
        // Stray non-row child: treat as a one-cell row.
        std::string speech = render(child, ctx);
        out.speech.push_back(std::move(speech));
        continue;
      }
      RenderContext row_ctx = ctx;
      scan_properties(row->properties, row_ctx);
      std::vector<std::string> cells = render_children(row->children, row_ctx);
      out.max_cells = std::max(out.max_cells, cells.size());
      std::string speech = join(cells, cell_separator);
      bool continues = std::find(row->properties.begin(),
                                 row->properties.end(),
                                 "continued-row") != row->properties.end();
      if (continues && !out.speech.empty()) {
        out.speech.back() += " " + speech;
      } else {
        out.speech.push_back(std::move(speech));
      }
    }
    return out;
  }

  static std::string count_phrase(size_t n, std::string_view singular,
                                  std::string_view plural) {
    return std::to_string(n) + " " +
           std::string(n == 1 ? singular : plural);
  }

  std::string render_table(const StructuralNode& node, RenderContext ctx) {
    std::string_view table_kind;
    for (const std::string& p : node.properties) {
      if (p == "matrix" || p == "piecewise" || p == "system-of-equations" ||
          p == "lines") {
        table_kind = p;
        break;
      }
    }

    if (table_kind == "system-of-equations") {
      TableRows rows = collect_rows(node, ctx, " ");
      std::string out = count_phrase(rows.speech.size(), "equation",
                                     "equations");
      for (size_t i = 0; i < rows.speech.size(); ++i) {
        out += ", equation " + std::to_string(i + 1) + " " + rows.speech[i];
      }
      out += ", end equations";
      return out;
    }
    if (table_kind == "matrix") {
      TableRows rows = collect_rows(node, ctx, ", ");
      std::string out = std::to_string(rows.speech.size()) + " by " +
                        std::to_string(rows.max_cells) + " matrix";
      for (size_t i = 0; i < rows.speech.size(); ++i) {
        out += ", row " + std::to_string(i + 1) + ": " + rows.speech[i];
      }
      out += ", end matrix";
      return out;
    }
    if (table_kind == "piecewise") {
      std::string out;
      std::vector<std::string> cases;
      for (const IntentTree& child : node.children) {
        const StructuralNode* row = child.structural();
        if (row == nullptr) continue;
        RenderContext row_ctx = ctx;
        std::vector<std::string> cells = render_children(row->children,
                                                         row_ctx);
        std::string speech;
        if (cells.size() == 2) {
          speech = cells[0] + " if " + cells[1];
        } else {
          speech = join(cells, " ");
        }
        cases.push_back(std::move(speech));
      }
      out = count_phrase(cases.size(), "case", "cases");
      for (size_t i = 0; i < cases.size(); ++i) {
        out += ", case " + std::to_string(i + 1) + ": " + cases[i];
      }
      out += ", end cases";
      return out;
    }
    if (table_kind == "lines") {
      TableRows rows = collect_rows(node, ctx, " ");
      std::string out = count_phrase(rows.speech.size(), "line", "lines");
      for (size_t i = 0; i < rows.speech.size(); ++i) {
        out += ", line " + std::to_string(i + 1) + ": " + rows.speech[i];
      }
      out += ", end lines";
      return out;
    }

    TableRows rows = collect_rows(node, ctx, ", ");
    std::string out = "table with " +
                      count_phrase(rows.speech.size(), "row", "rows") +
                      " and " +
                      count_phrase(rows.max_cells, "column", "columns");
    for (size_t i = 0; i < rows.speech.size(); ++i) {
      out += ", row " + std::to_string(i + 1) + ": " + rows.speech[i];
    }
    return out;
  }

  void info(const char* code, std::string message) {
    diags_.push_back(
        Diagnostic{Severity::info, code, std::move(message), {}});
  }

  void warning(const char* code, std::string message) {
    diags_.push_back(
        Diagnostic{Severity::warning, code, std::move(message), {}});
  }

  const SpeechOptions& opts_;
  const Registry& registry_;
  std::vector<Diagnostic> diags_;
};

}  // namespace

std::optional<int> roman_to_decimal(std::string_view text) {
  if (text.empty()) return std::nullopt;
  auto value_of = [](char c) -> int {
    switch (c) {
      case 'I': case 'i': return 1;
      case 'V': case 'v': return 5;
      case 'X': case 'x': return 10;
      case 'L': case 'l': return 50;
      case 'C': case 'c': return 100;
      case 'D': case 'd': return 500;
      case 'M': case 'm': return 1000;
      default: return 0;
    }
  };
  int total = 0;
  for (size_t i = 0; i < text.size(); ++i) {
    int v = value_of(text[i]);
    if (v == 0) return std::nullopt;
    int next = i + 1 < text.size() ? value_of(text[i + 1]) : 0;
    total += v < next ? -v : v;
  }
  if (total <= 0) return std::nullopt;
  return total;
}

SpeechOutput speak(const IntentTree& tree, const SpeechOptions& options,
                   const Registry& registry) {
  SpeechEngine engine(options, registry);
  std::string raw = engine.render(tree, RenderContext{});
  SpeechOutput out;
  out.text = normalize_speech(raw);
  out.diagnostics = engine.take_diagnostics();
  return out;
}

SpeechOutput speak_element(const Element& e, const SpeechOptions& options,
                           const Registry& registry) {
  BuildResult built = build_intent_tree(e, options.build_options(), registry);
  SpeechOutput out = speak(built.tree, options, registry);
  out.diagnostics.insert(out.diagnostics.begin(),
                         built.diagnostics.begin(), built.diagnostics.end());
  return out;
}

std::string speak_structural(std::string_view kind,
                             const std::vector<std::string>& children,
                             const SpeechOptions& options,
                             const Registry& registry) {
  SpeechEngine engine(options, registry);
  StructuralNode node;
  node.kind = std::string(kind);
  for (const std::string& child : children) {
    // Wrap pre-rendered child speech as forced-literal text.
    node.children.push_back(
        IntentTree{StructuralNode{"mtext", {}, {}, child}});
  }
  RenderContext ctx;
  std::string raw = engine.render(IntentTree{std::move(node)}, ctx);
  return normalize_speech(raw);
}

}  // namespace mathspeak
