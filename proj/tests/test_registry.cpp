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

#include <doctest.h>

#include <set>

#include "mathspeak/dom.hpp"
#include "test_support.hpp"

using namespace mathspeak;
namespace ts = mathspeak::testing;

TEST_CASE("builtin data answers the shipped lookups") {
  Registry r = Registry::builtin();
  SUBCASE("absolute-value is known at arity 1") {
    const ConceptEntry* e = r.lookup_concept("absolute-value", 1);
    REQUIRE(e != nullptr);
    CHECK(e->template_for(Style::terse) == "absolute value #1");
    CHECK(e->template_for(Style::medium) == "absolute value of #1");
    CHECK(e->template_for(Style::verbose) == "the absolute value of #1");
  }
  SUBCASE("power at arity 2") {
    const ConceptEntry* e = r.lookup_concept("power", 2);
    REQUIRE(e != nullptr);
    CHECK(e->template_for(Style::medium) == "#1 to the #2 power");
  }
  SUBCASE("unknown names and arities miss") {
    CHECK(r.lookup_concept("frobnicate", 1) == nullptr);
    CHECK(r.lookup_concept("divide", 2) != nullptr);
    CHECK(r.lookup_concept("divide", 3) == nullptr);
  }
  SUBCASE("has_concept_name ignores arity") {
    CHECK(r.has_concept_name("divide"));
    CHECK(!r.has_concept_name("frobnicate"));
  }
}

TEST_CASE("property classification") {
  Registry r = Registry::builtin();
  CHECK(r.classify_property("function") == PropertyClass::fixity);
  CHECK(r.classify_property("silent") == PropertyClass::fixity);
  CHECK(r.classify_property("prefix") == PropertyClass::fixity);
  CHECK(r.classify_property("infix") == PropertyClass::fixity);
  CHECK(r.classify_property("postfix") == PropertyClass::fixity);
  CHECK(r.classify_property("matrix") == PropertyClass::table);
  CHECK(r.classify_property("piecewise") == PropertyClass::table);
  CHECK(r.classify_property("system-of-equations") == PropertyClass::table);
  CHECK(r.classify_property("lines") == PropertyClass::table);
  CHECK(r.classify_property("continued-row") == PropertyClass::table);
  CHECK(r.classify_property("chemical-equation") == PropertyClass::chemistry);
  CHECK(r.classify_property("unit") == PropertyClass::unit);
  CHECK(r.classify_property("roman-numeral") == PropertyClass::roman_numeral);
  CHECK(r.classify_property("chemical-element") == PropertyClass::element);
  CHECK(r.classify_property("matchfix") == PropertyClass::unknown);
  CHECK(r.classify_property("") == PropertyClass::unknown);
}

TEST_CASE("every builtin concept carries all three templates") {
  Registry r = Registry::builtin();
  size_t checked = 0;
  r.for_each_concept([&](const ConceptEntry& e) {
    CAPTURE(e.name);
    CHECK(!e.template_for(Style::terse).empty());
    CHECK(!e.template_for(Style::medium).empty());
    CHECK(!e.template_for(Style::verbose).empty());
    ++checked;
  });
  CHECK(checked >= 40);
}

TEST_CASE("builtin tables have the promised coverage") {
  Registry r = Registry::builtin();
  CHECK(r.element_count() == 118);
  CHECK(r.unit_count() >= 25);
  REQUIRE(r.element_name("H") != nullptr);
  CHECK(*r.element_name("H") == "hydrogen");
  REQUIRE(r.element_name("Og") != nullptr);
  CHECK(*r.element_name("Og") == "oganesson");
  REQUIRE(r.unit("m") != nullptr);
  CHECK(r.unit("m")->singular == "meter");
  CHECK(r.unit("m")->plural == "meters");
}

TEST_CASE("character table covers every operator in the corpus") {
  Registry r = Registry::builtin();
  std::set<std::string> missing;
  for (const std::string& path : ts::corpus_files()) {
    Document doc = parse_document(ts::read_file(path));
    std::vector<const Element*> stack{&doc.root};
    while (!stack.empty()) {
      const Element* e = stack.back();
      stack.pop_back();
      if (e->name == "mo" && !e->text().empty() &&
          r.character_name(e->text()) == nullptr) {
        missing.insert(e->text());
      }
      for (const Element* c : e->child_elements()) stack.push_back(c);
    }
  }
  CHECK_MESSAGE(missing.empty(), "unnamed operators in corpus");
}

TEST_CASE("later files override earlier entries") {
  Registry r = Registry::builtin();
  r.load_text("C\tfraction\t2\t2\tfunction\t#1 thirds\t#1 #2ths\t#1 #2ths\n",
              "<test>", EntrySource::open);
  const ConceptEntry* e = r.lookup_concept("fraction", 2);
  REQUIRE(e != nullptr);
  CHECK(e->template_for(Style::terse) == "#1 thirds");
  CHECK(e->source == EntrySource::open);
  // Same load applied twice gives the same table.
  CHECK(r.lookup_concept("fraction", 2)->template_for(Style::medium) ==
        "#1 #2ths");
}

TEST_CASE("narrowest arity range wins") {
  Registry r;
  r.load_text(
      "C\tf\t1\t9\tfunction\twide #all{ }\twide #all{ }\twide #all{ }\n"
      "C\tf\t2\t3\tfunction\tnarrow #all{ }\tnarrow #all{ }\tnarrow #all{ }\n",
      "<test>", EntrySource::open);
  CHECK(r.lookup_concept("f", 2)->template_for(Style::terse) ==
        "narrow #all{ }");
  CHECK(r.lookup_concept("f", 5)->template_for(Style::terse) ==
        "wide #all{ }");
  CHECK(r.lookup_concept("f", 1)->template_for(Style::terse) ==
        "wide #all{ }");
  CHECK(r.lookup_concept("f", 10) == nullptr);
}

TEST_CASE("unbounded arity") {
  Registry r;
  r.load_text("C\tg\t2\t\xE2\x88\x9E\tinfix\t#all{ g }\t#all{ g }\t#all{ g }\n",
              "<test>", EntrySource::open);
  CHECK(r.lookup_concept("g", 2) != nullptr);
  CHECK(r.lookup_concept("g", 500) != nullptr);
  CHECK(r.lookup_concept("g", 1) == nullptr);
}

TEST_CASE("load errors") {
  Registry r;
  SUBCASE("placeholder beyond max arity") {
    CHECK_THROWS_AS(
        r.load_text("C\tf\t1\t2\tfunction\t#3 x\t#1\t#1\n", "<t>",
                    EntrySource::open),
        RegistryLoadError);
  }
  SUBCASE("duplicate row in one file") {
    CHECK_THROWS_AS(
        r.load_text("C\tf\t1\t1\tfunction\t#1\t#1\t#1\n"
                    "C\tf\t1\t1\tfunction\t#1\t#1\t#1\n",
                    "<t>", EntrySource::open),
        RegistryLoadError);
  }
  SUBCASE("wrong column count") {
    CHECK_THROWS_AS(r.load_text("C\tf\t1\t1\tfunction\t#1\t#1\n", "<t>",
                                EntrySource::open),
                    RegistryLoadError);
    CHECK_THROWS_AS(r.load_text("X\t+\n", "<t>", EntrySource::open),
                    RegistryLoadError);
  }
  SUBCASE("bad fixity") {
    CHECK_THROWS_AS(r.load_text("C\tf\t1\t1\tmatchfix\t#1\t#1\t#1\n", "<t>",
                                EntrySource::open),
                    RegistryLoadError);
  }
  SUBCASE("inverted arity range") {
    CHECK_THROWS_AS(r.load_text("C\tf\t3\t1\tfunction\t#1\t#1\t#1\n", "<t>",
                                EntrySource::open),
                    RegistryLoadError);
  }
  SUBCASE("unknown row kind") {
    CHECK_THROWS_AS(r.load_text("Q\tzap\n", "<t>", EntrySource::open),
                    RegistryLoadError);
  }
  SUBCASE("error reports origin and line") {
    try {
      r.load_text("# fine\nC\tbad\n", "<origin>", EntrySource::open);
      FAIL("expected RegistryLoadError");
    } catch (const RegistryLoadError& e) {
      CHECK(e.origin() == "<origin>");
      CHECK(e.line() == 2);
    }
  }
  SUBCASE("comments and blank lines are fine") {
    r.load_text("# comment\n\n  # indented comment\n", "<t>",
                EntrySource::open);
    CHECK(r.concept_count() == 0);
  }
}

TEST_CASE("template instantiation") {
  auto render = [](const std::string& tmpl,
                   const std::vector<std::string>& args) {
    std::vector<TemplateSegment> segments;
    auto err = parse_template(tmpl, segments);
    REQUIRE(!err.has_value());
    return instantiate_template(segments, args);
  };
  CHECK(render("absolute value of #1", {"x"}) == "absolute value of x");
  CHECK(render("#1 to the #2 power", {"x", "4"}) == "x to the 4 power");
  CHECK(render("gcd of #all{, }#last{ and }", {"a"}) == "gcd of a");
  CHECK(render("gcd of #all{, }#last{ and }", {"a", "b"}) == "gcd of a and b");
  CHECK(render("gcd of #all{, }#last{ and }", {"a", "b", "c"}) ==
        "gcd of a, b and c");
  CHECK(render("#all{ times }", {"p", "q", "r"}) == "p times q times r");
  CHECK(render("#2 root of #1", {"x", "n"}) == "n root of x");

  std::vector<TemplateSegment> segments;
  CHECK(parse_template("#x", segments).has_value());
  CHECK(parse_template("#all{a", segments).has_value());
  CHECK(parse_template("lone } brace", segments).has_value());
  CHECK(parse_template("#0", segments).has_value());
  CHECK(parse_template("trailing #", segments).has_value());
}

TEST_CASE("files load with override semantics") {
  namespace fs = std::filesystem;
  fs::path path = fs::temp_directory_path() / "mathspeak_registry_test.tsv";
  {
    std::ofstream out(path, std::ios::binary);
    out << "# local overrides\n";
    out << "U\tm\tmetre\tmetres\n";
    out << "X\t+\tadded to\n";
  }
  Registry r = load_registry({path.string()});
  REQUIRE(r.unit("m") != nullptr);
  CHECK(r.unit("m")->plural == "metres");
  REQUIRE(r.character_name("+") != nullptr);
  CHECK(*r.character_name("+") == "added to");
  // Untouched rows keep the builtin values.
  CHECK(*r.element_name("Fe") == "iron");
  CHECK_THROWS_AS(load_registry({"/no/such/registry.tsv"}),
                  RegistryLoadError);
  fs::remove(path);
}

TEST_CASE("loading is deterministic") {
  Registry a = Registry::builtin();
  Registry b = Registry::builtin();
  std::vector<std::string> names_a, names_b;
  a.for_each_concept([&](const ConceptEntry& e) { names_a.push_back(e.name); });
  b.for_each_concept([&](const ConceptEntry& e) { names_b.push_back(e.name); });
  CHECK(names_a == names_b);
  CHECK(a.concept_count() == b.concept_count());
}
