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

#include "mathspeak/intent_tree.hpp"

#include <set>

#include "mathspeak/heuristics.hpp"
#include "mathspeak/intent.hpp"

namespace mathspeak {

namespace {

const Element* search_arg(const Element& e, std::string_view arg_name) {
  if (const std::string* arg = e.attribute("arg")) {
    // Carriers of a mismatching arg shield their whole subtree.
    return *arg == arg_name ? &e : nullptr;
  }
  for (const Element* child : e.child_elements()) {
    if (const Element* found = search_arg(*child, arg_name)) return found;
  }
  return nullptr;
}

void attach_properties(IntentTree& tree,
                       const std::vector<std::string>& properties) {
  if (properties.empty()) return;
  if (auto* c = std::get_if<ConceptNode>(&tree.node)) {
    c->properties.insert(c->properties.end(), properties.begin(),
                         properties.end());
  } else if (auto* s = std::get_if<StructuralNode>(&tree.node)) {
    s->properties.insert(s->properties.end(), properties.begin(),
                         properties.end());
  } else if (auto* n = std::get_if<NumberNode>(&tree.node)) {
    // Numbers carry no property list; re-express as a concept spoken as
    // written.
    ConceptNode wrapped;
    wrapped.name = n->text;
    wrapped.properties = properties;
    tree.node = std::move(wrapped);
  }
}

class TreeBuilder {
 public:
  TreeBuilder(const BuildOptions& options,
              std::vector<Diagnostic>& diagnostics)
      : options_(options), sink_(&diagnostics) {}

  IntentTree build(const Element& e) {
    if (options_.mode == Mode::semantic) {
      if (const std::string* intent_text = e.attribute("intent")) {
        IntentParseResult parsed = parse_intent(*intent_text);
        if (const auto* err = std::get_if<SyntaxError>(&parsed)) {
          report(Severity::warning, kDiagIntentSyntax,
                 "intent \"" + *intent_text + "\": " + err->message +
                     " at offset " + std::to_string(err->offset),
                 e.position);
        } else {
          if (auto tree = ground_attribute(std::get<IntentExpr>(parsed), e)) {
            return std::move(*tree);
          }
        }
      }
      if (options_.heuristics) {
        if (std::optional<InferredIntent> inferred = infer_intent(e)) {
          if (auto tree = ground_inferred(*inferred, e)) {
            return std::move(*tree);
          }
        }
      }
    }
    return structural(e);
  }

 private:
  // Grounds an author intent. On a dangling reference the attribute is
  // reported and dropped entirely; partial results and their diagnostics
  // are discarded so the outcome matches a document without the attribute.
  std::optional<IntentTree> ground_attribute(const IntentExpr& expr,
                                             const Element& e) {
    std::vector<Diagnostic> local;
    std::vector<Diagnostic>* saved_sink = sink_;
    std::optional<std::string> saved_missing = std::move(missing_reference_);
    sink_ = &local;
    missing_reference_.reset();
    std::optional<IntentTree> tree = ground(expr, e, nullptr);
    std::string missing = missing_reference_.value_or("?");
    sink_ = saved_sink;
    missing_reference_ = std::move(saved_missing);
    if (!tree.has_value()) {
      report(Severity::warning, kDiagDanglingRef,
             "intent reference $" + missing +
                 " does not match any reachable arg; intent ignored",
             e.position);
      return std::nullopt;
    }
    for (Diagnostic& d : local) sink_->push_back(std::move(d));
    return tree;
  }

  std::optional<IntentTree> ground_inferred(const InferredIntent& inferred,
                                            const Element& e) {
    std::vector<Diagnostic> local;
    std::vector<Diagnostic>* saved = sink_;
    sink_ = &local;
    std::optional<IntentTree> tree = ground(inferred.expr, e, &inferred);
    sink_ = saved;
    if (!tree.has_value()) return std::nullopt;  // unreachable by construction
    for (Diagnostic& d : local) sink_->push_back(std::move(d));
    if (auto* c = std::get_if<ConceptNode>(&tree->node)) {
      c->from_heuristic = true;
    }
    return tree;
  }

  std::optional<IntentTree> ground(const IntentExpr& expr,
                                   const Element& scope,
                                   const InferredIntent* bindings) {
    if (const auto* ref = std::get_if<Reference>(&expr.head)) {
      const Element* target = bindings != nullptr
                                  ? bindings->binding(ref->arg_name)
                                  : resolve_reference(scope, ref->arg_name);
      if (target == nullptr) {
        if (!missing_reference_.has_value()) {
          missing_reference_ = ref->arg_name;
        }
        return std::nullopt;
      }
      IntentTree resolved = build(*target);
      if (!expr.arguments.has_value()) {
        attach_properties(resolved, expr.properties);
        return resolved;
      }
      // A reference head applied to arguments: keep the resolved tree as
      // the head child; the properties steer how the application is
      // spoken.
      StructuralNode apply;
      apply.kind = kApplyKind;
      apply.properties = expr.properties;
      apply.children.push_back(std::move(resolved));
      if (!ground_arguments(expr, scope, bindings, apply.children)) {
        return std::nullopt;
      }
      return IntentTree{std::move(apply)};
    }

    if (const auto* number = std::get_if<NumberLiteral>(&expr.head)) {
      if (!expr.arguments.has_value() && expr.properties.empty()) {
        return IntentTree{NumberNode{number->text}};
      }
      // Number used as a function head or with properties: spoken as
      // written via the concept path.
      ConceptNode node;
      node.name = number->text;
      node.properties = expr.properties;
      if (!ground_arguments(expr, scope, bindings, node.children)) {
        return std::nullopt;
      }
      return IntentTree{std::move(node)};
    }

    if (const auto* concept_head = std::get_if<ConceptLiteral>(&expr.head)) {
      ConceptNode node;
      node.name = concept_head->name;
      node.properties = expr.properties;
      node.literal_speech = !node.name.empty() && node.name[0] == '_';
      if (!ground_arguments(expr, scope, bindings, node.children)) {
        return std::nullopt;
      }
      return IntentTree{std::move(node)};
    }

    // Properties-only intent: the structural tree plus the properties.
    IntentTree tree = structural(scope);
    attach_properties(tree, expr.properties);
    return tree;
  }

  bool ground_arguments(const IntentExpr& expr, const Element& scope,
                        const InferredIntent* bindings,
                        std::vector<IntentTree>& out) {
    if (!expr.arguments.has_value()) return true;
    for (const IntentExpr& arg : *expr.arguments) {
      std::optional<IntentTree> tree = ground(arg, scope, bindings);
      if (!tree.has_value()) return false;
      out.push_back(std::move(*tree));
    }
    return true;
  }

  IntentTree structural(const Element& e) {
    if (e.name == "semantics") {
      // Transparent wrapper: only the first element child is spoken.
      if (const Element* first = e.first_child_element()) {
        return build(*first);
      }
      return IntentTree{StructuralNode{"semantics", {}, {}, std::nullopt}};
    }
    if (e.is_token()) {
      std::string text = e.text();
      if (e.name == "mn" && is_number_token(text)) {
        return IntentTree{NumberNode{std::move(text)}};
      }
      return IntentTree{StructuralNode{e.name, {}, {}, std::move(text)}};
    }
    StructuralNode node;
    node.kind = e.name;
    for (const Element* child : e.child_elements()) {
      node.children.push_back(build(*child));
    }
    return IntentTree{std::move(node)};
  }

  void report(Severity severity, const char* code, std::string message,
              SourcePosition position) {
    sink_->push_back(Diagnostic{severity, code, std::move(message), position});
  }

  BuildOptions options_;
  std::vector<Diagnostic>* sink_;
  std::optional<std::string> missing_reference_;
};

void collect_reference_names(const IntentExpr& expr,
                             std::vector<std::string>& out) {
  if (const auto* ref = std::get_if<Reference>(&expr.head)) {
    out.push_back(ref->arg_name);
  }
  if (expr.arguments.has_value()) {
    for (const IntentExpr& arg : *expr.arguments) {
      collect_reference_names(arg, out);
    }
  }
}

void collect_concept_names(const IntentExpr& expr,
                           std::vector<std::string>& out) {
  if (const auto* c = std::get_if<ConceptLiteral>(&expr.head)) {
    out.push_back(c->name);
  }
  if (expr.arguments.has_value()) {
    for (const IntentExpr& arg : *expr.arguments) {
      collect_concept_names(arg, out);
    }
  }
}

bool references_name(const IntentExpr& expr, std::string_view name) {
  std::vector<std::string> refs;
  collect_reference_names(expr, refs);
  for (const std::string& r : refs) {
    if (r == name) return true;
  }
  return false;
}

class Linter {
 public:
  Linter(const Registry& registry, std::vector<Diagnostic>& out)
      : registry_(registry), out_(out) {}

  void run(const Element& root) {
    lint_intents(root);
    std::vector<const Element*> stack;
    lint_args(root, stack);
  }

 private:
  void lint_intents(const Element& e) {
    if (const std::string* intent_text = e.attribute("intent")) {
      IntentParseResult parsed = parse_intent(*intent_text);
      if (const auto* err = std::get_if<SyntaxError>(&parsed)) {
        out_.push_back({Severity::error, kDiagIntentSyntax,
                        "intent \"" + *intent_text + "\": " + err->message +
                            " at offset " + std::to_string(err->offset),
                        e.position});
      } else {
        const IntentExpr& expr = std::get<IntentExpr>(parsed);
        std::vector<std::string> refs;
        collect_reference_names(expr, refs);
        std::set<std::string> seen_refs;
        for (const std::string& name : refs) {
          if (!seen_refs.insert(name).second) continue;
          if (resolve_reference(e, name) == nullptr) {
            out_.push_back({Severity::error, kDiagDanglingRef,
                            "intent reference $" + name +
                                " does not match any reachable arg",
                            e.position});
          }
        }
        std::vector<std::string> names;
        collect_concept_names(expr, names);
        std::set<std::string> seen_names;
        for (const std::string& name : names) {
          if (!seen_names.insert(name).second) continue;
          if (!name.empty() && name[0] == '_') continue;
          if (!registry_.has_concept_name(name)) {
            out_.push_back({Severity::info, kDiagUnknownConcept,
                            "concept '" + name +
                                "' is not in the registry; it will be "
                                "spoken as written",
                            e.position});
          }
        }
      }
    }
    for (const Element* child : e.child_elements()) lint_intents(*child);
  }

  // Flags arg values that no referencing ancestor can actually reach.
  void lint_args(const Element& e, std::vector<const Element*>& stack) {
    if (const std::string* arg = e.attribute("arg"); arg && !stack.empty()) {
      bool any_referencing = false;
      bool reachable = false;
      for (const Element* ancestor : stack) {
        const std::string* intent_text = ancestor->attribute("intent");
        if (intent_text == nullptr) continue;
        IntentParseResult parsed = parse_intent(*intent_text);
        const auto* expr = std::get_if<IntentExpr>(&parsed);
        if (expr == nullptr || !references_name(*expr, *arg)) continue;
        any_referencing = true;
        if (resolve_reference(*ancestor, *arg) == &e) {
          reachable = true;
          break;
        }
      }
      if (any_referencing && !reachable) {
        out_.push_back({Severity::warning, kDiagShadowedArg,
                        "arg \"" + *arg +
                            "\" is shadowed: no referencing ancestor "
                            "resolves to this element",
                        e.position});
      }
    }
    stack.push_back(&e);
    for (const Element* child : e.child_elements()) lint_args(*child, stack);
    stack.pop_back();
  }

  const Registry& registry_;
  std::vector<Diagnostic>& out_;
};

void dump_node(const IntentTree& tree, int depth, std::string& out) {
  out.append(static_cast<size_t>(depth) * 2, ' ');
  const std::vector<IntentTree>* children = nullptr;
  if (const auto* c = std::get_if<ConceptNode>(&tree.node)) {
    if (c->from_heuristic) out.push_back('~');
    out += c->name;
    for (const std::string& p : c->properties) {
      out.push_back(':');
      out += p;
    }
    children = &c->children;
  } else if (const auto* n = std::get_if<NumberNode>(&tree.node)) {
    out.push_back('#');
    out += n->text;
  } else if (const auto* s = std::get_if<StructuralNode>(&tree.node)) {
    out.push_back('<');
    out += s->kind;
    out.push_back('>');
    for (const std::string& p : s->properties) {
      out.push_back(':');
      out += p;
    }
    if (s->token_text.has_value()) {
      out += " \"";
      out += *s->token_text;
      out.push_back('"');
    }
    children = &s->children;
  }
  out.push_back('\n');
  if (children != nullptr) {
    for (const IntentTree& child : *children) {
      dump_node(child, depth + 1, out);
    }
  }
}

}  // namespace

std::string_view severity_name(Severity s) {
  switch (s) {
    case Severity::error: return "error";
    case Severity::warning: return "warning";
    case Severity::info: return "info";
  }
  return "info";
}

const Element* resolve_reference(const Element& scope,
                                 std::string_view arg_name) {
  for (const Element* child : scope.child_elements()) {
    if (const Element* found = search_arg(*child, arg_name)) return found;
  }
  return nullptr;
}

BuildResult build_intent_tree(const Element& e, const BuildOptions& options,
                              const Registry& registry) {
  (void)registry;  // grounding needs no data tables; lint and speech do
  BuildResult result;
  TreeBuilder builder(options, result.diagnostics);
  result.tree = builder.build(e);
  return result;
}

std::vector<Diagnostic> lint_element(const Element& e,
                                     const Registry& registry) {
  std::vector<Diagnostic> out;
  Linter linter(registry, out);
  linter.run(e);
  return out;
}

std::string dump_tree(const IntentTree& tree) {
  std::string out;
  dump_node(tree, 0, out);
  return out;
}

}  // namespace mathspeak
