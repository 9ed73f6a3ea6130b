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

#include <doctest.h>

#include <filesystem>

#include "mathspeak/speech.hpp"
#include "test_support.hpp"

using namespace mathspeak;
namespace ts = mathspeak::testing;
namespace fs = std::filesystem;

namespace {

std::string golden_path(const std::string& stem, const char* kind) {
  return std::string(MATHSPEAK_GOLDEN_DIR) + "/" + stem + "." + kind + ".txt";
}

std::string speak_all_roots(const Document& doc, const SpeechOptions& opts,
                            const Registry& registry) {
  std::string out;
  for (const Element* root : math_roots(doc)) {
    out += speak_element(*root, opts, registry).text;
    out += "\n";
  }
  return out;
}

// Matches the tree subcommand: the math container is unwrapped.
std::string dump_all_roots(const Document& doc, const Registry& registry) {
  std::string out;
  for (const Element* root : math_roots(doc)) {
    BuildResult built = build_intent_tree(*root, BuildOptions{}, registry);
    const StructuralNode* s = built.tree.structural();
    if (s != nullptr && s->kind == "math") {
      for (const IntentTree& child : s->children) {
        out += dump_tree(child);
      }
    } else {
      out += dump_tree(built.tree);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("corpus speech matches the golden transcripts") {
  Registry registry = Registry::builtin();
  SpeechOptions opts;  // medium, semantic, heuristics on
  size_t compared = 0;
  for (const std::string& path : ts::corpus_files()) {
    std::string stem = fs::path(path).stem().string();
    std::string golden_file = golden_path(stem, "speech");
    CAPTURE(path);
    REQUIRE_MESSAGE(fs::exists(golden_file),
                    "missing golden transcript for " << stem);
    Document doc = parse_document(ts::read_file(path));
    CHECK(speak_all_roots(doc, opts, registry) == ts::read_file(golden_file));
    ++compared;
  }
  CHECK(compared >= 20);
}

TEST_CASE("selected corpus trees match the golden dumps") {
  Registry registry = Registry::builtin();
  size_t compared = 0;
  for (const std::string& path : ts::corpus_files()) {
    std::string stem = fs::path(path).stem().string();
    std::string golden_file = golden_path(stem, "tree");
    if (!fs::exists(golden_file)) continue;
    CAPTURE(path);
    Document doc = parse_document(ts::read_file(path));
    CHECK(dump_all_roots(doc, registry) == ts::read_file(golden_file));
    ++compared;
  }
  CHECK(compared >= 5);
}
