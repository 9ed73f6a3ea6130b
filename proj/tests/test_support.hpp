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

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mathspeak/dom.hpp"
#include "mathspeak/intent.hpp"

namespace mathspeak::testing {

inline std::string corpus_path(const std::string& name) {
  return std::string(MATHSPEAK_CORPUS_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline std::vector<std::string> corpus_files() {
  std::vector<std::string> out;
  for (const auto& entry :
       std::filesystem::directory_iterator(MATHSPEAK_CORPUS_DIR)) {
    if (entry.path().extension() == ".xml") {
      out.push_back(entry.path().string());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline Document parse_corpus(const std::string& name) {
  return parse_document(read_file(corpus_path(name)));
}

// ---------------------------------------------------------------------------
// Random element trees (round-trip and resolution properties)

class TreeGen {
 public:
  explicit TreeGen(uint32_t seed) : rng_(seed) {}

  std::mt19937& rng() { return rng_; }

  int pick(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }

  bool chance(double p) {
    return std::uniform_real_distribution<double>(0, 1)(rng_) < p;
  }

  std::string identifier() {
    static const char* const kNames[] = {"x", "y", "z", "a", "b", "M", "v"};
    return kNames[pick(0, 6)];
  }

  std::string operator_text() {
    static const char* const kOps[] = {"+", "-", "=", "|", "(", ")", "<"};
    return kOps[pick(0, 6)];
  }

  Element token() {
    Element e;
    switch (pick(0, 2)) {
      case 0:
        e.name = "mi";
        e.children.push_back(Node{identifier()});
        break;
      case 1:
        e.name = "mn";
        e.children.push_back(Node{std::to_string(pick(0, 99))});
        break;
      default:
        e.name = "mo";
        e.children.push_back(Node{operator_text()});
        break;
    }
    return e;
  }

  // A structural element tree of bounded depth. Some elements receive a
  // valid intent whose references bind to args placed on direct children.
  Element element(int depth) {
    if (depth <= 0 || chance(0.4)) return token();
    Element e;
    static const char* const kKinds[] = {"mrow", "mrow", "msup", "msub",
                                         "mfrac", "msqrt"};
    e.name = kKinds[pick(0, 5)];
    int child_count = e.name == "mrow" ? pick(1, 4) : 2;
    if (e.name == "msqrt") child_count = pick(1, 2);
    for (int i = 0; i < child_count; ++i) {
      e.children.push_back(Node{element(depth - 1)});
    }
    maybe_annotate(e);
    return e;
  }

  Element document() {
    Element math;
    math.name = "math";
    int n = pick(1, 3);
    for (int i = 0; i < n; ++i) {
      math.children.push_back(Node{element(3)});
    }
    return math;
  }

 private:
  // Valid annotation: concept name applied to references that resolve to
  // direct children (direct children are always reachable).
  void maybe_annotate(Element& e) {
    if (!chance(0.45)) return;
    std::vector<Element*> kids;
    for (Node& n : e.children) {
      if (n.is_element()) kids.push_back(&std::get<Element>(n.data));
    }
    if (kids.empty()) return;
    static const char* const kConcepts[] = {"absolute-value", "power",
                                            "fraction", "f", "g",
                                            "_forced_words"};
    std::string name = kConcepts[pick(0, 5)];
    int arg_count = std::min<int>(static_cast<int>(kids.size()), pick(1, 2));
    std::string intent = name + "(";
    for (int i = 0; i < arg_count; ++i) {
      std::string arg_name = "p" + std::to_string(next_arg_++);
      set_attribute(*kids[i], "arg", arg_name);
      if (i > 0) intent += ",";
      intent += "$" + arg_name;
    }
    intent += ")";
    if (chance(0.2)) intent = name + ":prefix" + intent.substr(name.size());
    set_attribute(e, "intent", intent);
  }

  static void set_attribute(Element& e, const std::string& name,
                            const std::string& value) {
    for (Attribute& a : e.attributes) {
      if (a.name == name) {
        a.value = value;
        return;
      }
    }
    e.attributes.push_back({name, value});
  }

  std::mt19937 rng_;
  int next_arg_ = 0;
};

inline std::vector<Element*> elements_with_intent(Element& e) {
  std::vector<Element*> out;
  if (e.attribute("intent") != nullptr) out.push_back(&e);
  for (Node& n : e.children) {
    if (n.is_element()) {
      auto nested = elements_with_intent(std::get<Element>(n.data));
      out.insert(out.end(), nested.begin(), nested.end());
    }
  }
  return out;
}

inline void remove_attribute(Element& e, const std::string& name) {
  for (auto it = e.attributes.begin(); it != e.attributes.end(); ++it) {
    if (it->name == name) {
      e.attributes.erase(it);
      return;
    }
  }
}

inline void strip_all_intents(Element& e) {
  remove_attribute(e, "intent");
  for (Node& n : e.children) {
    if (n.is_element()) strip_all_intents(std::get<Element>(n.data));
  }
}

// ---------------------------------------------------------------------------
// Random intent expressions (grammar round-trip property)

class ExprGen {
 public:
  explicit ExprGen(uint32_t seed) : rng_(seed) {}

  IntentExpr expr() { return gen(0, /*allow_empty_head=*/true); }

  std::string name_token() {
    static const char kStart[] = "abcdefgz_";
    static const char kRest[] = "abcdefgz0123456789-_.";
    std::string out;
    out.push_back(kStart[pick(0, sizeof(kStart) - 2)]);
    int len = pick(0, 6);
    for (int i = 0; i < len; ++i) {
      out.push_back(kRest[pick(0, sizeof(kRest) - 2)]);
    }
    return out;
  }

  std::string number_token() {
    std::string out;
    if (chance(0.3)) out.push_back('-');
    out += std::to_string(pick(0, 999));
    if (chance(0.4)) {
      out.push_back('.');
      out += std::to_string(pick(0, 99));
    }
    return out;
  }

  // Serializes with random whitespace at boundaries where the grammar
  // allows it.
  std::string serialize_sloppy(const IntentExpr& e) {
    std::string out = ws();
    serialize(e, out);
    out += ws();
    return out;
  }

 private:
  int pick(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }
  bool chance(double p) {
    return std::uniform_real_distribution<double>(0, 1)(rng_) < p;
  }

  std::string ws() {
    static const char* const kWs[] = {"", "", " ", "  ", "\t", "\n"};
    return kWs[pick(0, 5)];
  }

  IntentExpr gen(int depth, bool allow_empty_head) {
    IntentExpr e;
    if (allow_empty_head && chance(0.08)) {
      e.head = EmptyHead{};
      int props = pick(1, 3);
      for (int i = 0; i < props; ++i) e.properties.push_back(name_token());
      return e;
    }
    switch (pick(0, 5)) {
      case 0:
        e.head = NumberLiteral{number_token()};
        break;
      case 1:
      case 2:
        e.head = Reference{name_token()};
        break;
      default:
        e.head = ConceptLiteral{name_token()};
        break;
    }
    int props = chance(0.3) ? pick(1, 2) : 0;
    for (int i = 0; i < props; ++i) e.properties.push_back(name_token());
    if (depth < 3 && chance(depth == 0 ? 0.75 : 0.45)) {
      std::vector<IntentExpr> args;
      int n = pick(0, 3);
      for (int i = 0; i < n; ++i) {
        args.push_back(gen(depth + 1, false));
      }
      e.arguments = std::move(args);
    }
    return e;
  }

  void serialize(const IntentExpr& e, std::string& out) {
    if (const auto* c = std::get_if<ConceptLiteral>(&e.head)) {
      out += c->name;
    } else if (const auto* n = std::get_if<NumberLiteral>(&e.head)) {
      out += n->text;
    } else if (const auto* r = std::get_if<Reference>(&e.head)) {
      out += "$" + r->arg_name;
    }
    for (const std::string& p : e.properties) {
      out += ws();
      out += ":" + p;
    }
    if (e.arguments.has_value()) {
      out += ws() + "(" + ws();
      bool first = true;
      for (const IntentExpr& arg : *e.arguments) {
        if (!first) out += ws() + "," + ws();
        first = false;
        serialize(arg, out);
      }
      out += ws() + ")";
    }
  }

  std::mt19937 rng_;
};

inline std::string random_garbage(std::mt19937& rng, int max_len) {
  static const char kChars[] =
      "abcXYZ019$:(),.-_ \t\n#|{}[]<>\"'\\✓αβ∞";
  std::uniform_int_distribution<int> len_dist(0, max_len);
  std::uniform_int_distribution<int> char_dist(0, sizeof(kChars) - 2);
  std::uniform_int_distribution<int> byte_dist(0, 255);
  std::string out;
  int len = len_dist(rng);
  for (int i = 0; i < len; ++i) {
    if (byte_dist(rng) < 16) {
      out.push_back(static_cast<char>(byte_dist(rng)));
    } else {
      out.push_back(kChars[char_dist(rng)]);
    }
  }
  return out;
}

}  // namespace mathspeak::testing
