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

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mathspeak/dom.hpp"
#include "mathspeak/intent_tree.hpp"
#include "mathspeak/registry.hpp"
#include "mathspeak/speech.hpp"

namespace {

namespace fs = std::filesystem;
using namespace mathspeak;

constexpr int kExitOk = 0;
constexpr int kExitLintErrors = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnreadable = 3;

struct CommonFlags {
  std::string style = "medium";
  std::string mode = "semantic";
  bool no_heuristics = false;
  std::string language = "en";
  std::vector<std::string> registry_paths;
  std::string out_path;
  std::string subject;
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--style", flags.style, "Speech style")
      ->check(CLI::IsMember({"terse", "medium", "verbose"}));
  cmd->add_option("--mode", flags.mode, "semantic or syntactic reading")
      ->check(CLI::IsMember({"semantic", "syntactic"}));
  cmd->add_flag("--no-heuristics", flags.no_heuristics,
                "Disable inference for unannotated markup");
  cmd->add_option("--lang", flags.language, "Language tag (default en)");
  cmd->add_option("--registry", flags.registry_paths,
                  "Extra registry file, loaded after the builtin data "
                  "(repeatable)")
      ->type_size(1)
      ->allow_extra_args(false);
  cmd->add_option("--out", flags.out_path, "Write output here instead of stdout");
  cmd->add_option("--subject", flags.subject, "Reserved");
}

SpeechOptions speech_options(const CommonFlags& flags) {
  SpeechOptions opts;
  opts.style = style_from_name(flags.style).value_or(Style::medium);
  opts.mode = flags.mode == "syntactic" ? Mode::syntactic : Mode::semantic;
  opts.heuristics = !flags.no_heuristics;
  opts.language = flags.language;
  return opts;
}

// nullopt on IO failure.
std::optional<std::string> read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void print_diagnostic(std::ostream& os, const std::string& file,
                      const Diagnostic& d) {
  os << file << ":" << d.position.line << ":" << d.position.column << ": "
     << severity_name(d.severity) << " " << d.code << " " << d.message
     << "\n";
}

// Loads builtin data plus any --registry files; nullopt (after reporting)
// on a bad file.
std::optional<Registry> make_registry(const CommonFlags& flags) {
  try {
    return load_registry(flags.registry_paths);
  } catch (const RegistryLoadError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return std::nullopt;
  }
}

class OutputStream {
 public:
  explicit OutputStream(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      ok_ = static_cast<bool>(file_);
    }
  }

  bool ok() const { return ok_; }
  std::ostream& get() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
  bool ok_ = true;
};

int check_subject(const CommonFlags& flags) {
  if (!flags.subject.empty()) {
    std::cerr << "error: --subject is not implemented\n";
    return kExitUsage;
  }
  return kExitOk;
}

std::optional<Document> parse_or_report(const std::string& path,
                                        const std::string& text) {
  try {
    return parse_document(text);
  } catch (const ParseError& e) {
    std::cerr << path << ":" << e.line() << ":" << e.column()
              << ": error PARSE " << e.what() << "\n";
    return std::nullopt;
  }
}

int run_speak(const CommonFlags& flags, const std::string& input) {
  if (int rc = check_subject(flags)) return rc;
  std::optional<Registry> registry = make_registry(flags);
  if (!registry.has_value()) return kExitUsage;
  std::optional<std::string> text = read_input(input);
  if (!text.has_value()) {
    std::cerr << "error: cannot read " << input << "\n";
    return kExitUnreadable;
  }
  std::optional<Document> doc = parse_or_report(input, *text);
  if (!doc.has_value()) return kExitUnreadable;
  OutputStream out(flags.out_path);
  if (!out.ok()) {
    std::cerr << "error: cannot write " << flags.out_path << "\n";
    return kExitUnreadable;
  }
  SpeechOptions opts = speech_options(flags);
  for (const Element* root : math_roots(*doc)) {
    SpeechOutput speech = speak_element(*root, opts, *registry);
    out.get() << speech.text << "\n";
    for (const Diagnostic& d : speech.diagnostics) {
      print_diagnostic(std::cerr, input, d);
    }
  }
  return kExitOk;
}

int run_tree(const CommonFlags& flags, const std::string& input) {
  if (int rc = check_subject(flags)) return rc;
  std::optional<Registry> registry = make_registry(flags);
  if (!registry.has_value()) return kExitUsage;
  std::optional<std::string> text = read_input(input);
  if (!text.has_value()) {
    std::cerr << "error: cannot read " << input << "\n";
    return kExitUnreadable;
  }
  std::optional<Document> doc = parse_or_report(input, *text);
  if (!doc.has_value()) return kExitUnreadable;
  OutputStream out(flags.out_path);
  if (!out.ok()) {
    std::cerr << "error: cannot write " << flags.out_path << "\n";
    return kExitUnreadable;
  }
  SpeechOptions opts = speech_options(flags);
  for (const Element* root : math_roots(*doc)) {
    BuildResult built =
        build_intent_tree(*root, opts.build_options(), *registry);
    // The math container is presentation plumbing; dump its content.
    const StructuralNode* s = built.tree.structural();
    if (s != nullptr && s->kind == "math") {
      for (const IntentTree& child : s->children) {
        out.get() << dump_tree(child);
      }
    } else {
      out.get() << dump_tree(built.tree);
    }
    for (const Diagnostic& d : built.diagnostics) {
      print_diagnostic(std::cerr, input, d);
    }
  }
  return kExitOk;
}

int run_lint(const CommonFlags& flags, const std::string& input) {
  if (int rc = check_subject(flags)) return rc;
  std::optional<Registry> registry = make_registry(flags);
  if (!registry.has_value()) return kExitUsage;
  std::optional<std::string> text = read_input(input);
  if (!text.has_value()) {
    std::cerr << "error: cannot read " << input << "\n";
    return kExitUnreadable;
  }
  std::optional<Document> doc = parse_or_report(input, *text);
  if (!doc.has_value()) return kExitUnreadable;
  OutputStream out(flags.out_path);
  if (!out.ok()) {
    std::cerr << "error: cannot write " << flags.out_path << "\n";
    return kExitUnreadable;
  }
  std::vector<Diagnostic> diagnostics = lint_element(doc->root, *registry);
  bool any_error = false;
  for (const Diagnostic& d : diagnostics) {
    print_diagnostic(out.get(), input, d);
    any_error = any_error || d.severity == Severity::error;
  }
  return any_error ? kExitLintErrors : kExitOk;
}

bool glob_match(std::string_view pattern, std::string_view name) {
  size_t pi = 0, ni = 0;
  size_t star = std::string_view::npos, mark = 0;
  while (ni < name.size()) {
    if (pi < pattern.size() &&
        (pattern[pi] == '?' || pattern[pi] == name[ni])) {
      ++pi;
      ++ni;
    } else if (pi < pattern.size() && pattern[pi] == '*') {
      star = pi++;
      mark = ni;
    } else if (star != std::string_view::npos) {
      pi = star + 1;
      ni = ++mark;
    } else {
      return false;
    }
  }
  while (pi < pattern.size() && pattern[pi] == '*') ++pi;
  return pi == pattern.size();
}

int run_batch(const CommonFlags& flags, const std::string& input,
              const std::string& glob) {
  if (int rc = check_subject(flags)) return rc;
  std::optional<Registry> registry = make_registry(flags);
  if (!registry.has_value()) return kExitUsage;
  std::error_code ec;
  std::vector<fs::path> files;
  if (fs::is_directory(input, ec)) {
    for (auto it = fs::recursive_directory_iterator(input, ec);
         !ec && it != fs::recursive_directory_iterator(); ++it) {
      if (!it->is_regular_file()) continue;
      if (glob_match(glob, it->path().filename().string())) {
        files.push_back(it->path());
      }
    }
  } else if (fs::is_regular_file(input, ec)) {
    files.push_back(input);
  } else {
    std::cerr << "error: cannot read " << input << "\n";
    return kExitUnreadable;
  }
  std::sort(files.begin(), files.end());

  OutputStream out(flags.out_path);
  if (!out.ok()) {
    std::cerr << "error: cannot write " << flags.out_path << "\n";
    return kExitUnreadable;
  }
  SpeechOptions opts = speech_options(flags);
  for (const fs::path& file : files) {
    std::optional<std::string> text = read_input(file.string());
    if (!text.has_value()) {
      std::cerr << file.string() << ": error cannot read file\n";
      continue;
    }
    std::optional<Document> doc = parse_or_report(file.string(), *text);
    if (!doc.has_value()) continue;
    int index = 0;
    for (const Element* root : math_roots(*doc)) {
      SpeechOutput speech = speak_element(*root, opts, *registry);
      out.get() << file.string() << "\t" << index << "\t" << speech.text
                << "\n";
      for (const Diagnostic& d : speech.diagnostics) {
        print_diagnostic(std::cerr, file.string(), d);
      }
      ++index;
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Speaks MathML with intent annotations as natural text"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string input = "-";
  std::string glob = "*.xml";
  int rc = kExitOk;

  CLI::App* speak_cmd =
      app.add_subcommand("speak", "One line of speech per math element");
  add_common_flags(speak_cmd, flags);
  speak_cmd->add_option("input", input, "File to read, or - for stdin");
  speak_cmd->callback([&] { rc = run_speak(flags, input); });

  CLI::App* tree_cmd =
      app.add_subcommand("tree", "Dump the resolved tree per math element");
  add_common_flags(tree_cmd, flags);
  tree_cmd->add_option("input", input, "File to read, or - for stdin");
  tree_cmd->callback([&] { rc = run_tree(flags, input); });

  CLI::App* lint_cmd =
      app.add_subcommand("lint", "Check intent annotations");
  add_common_flags(lint_cmd, flags);
  lint_cmd->add_option("input", input, "File to read, or - for stdin");
  lint_cmd->callback([&] { rc = run_lint(flags, input); });

  CLI::App* batch_cmd = app.add_subcommand(
      "batch", "Speak every math element under a directory as TSV");
  add_common_flags(batch_cmd, flags);
  batch_cmd->add_option("input", input, "Directory (or single file)");
  batch_cmd->add_option("--glob", glob, "Filename pattern (default *.xml)");
  batch_cmd->callback([&] { rc = run_batch(flags, input, glob); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  return rc;
}
