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

#include "mathspeak/dom.hpp"

#include <doctest.h>

#include "test_support.hpp"

using namespace mathspeak;
namespace ts = mathspeak::testing;

namespace {

const char* kBarsMarkup = R"xml(<mrow intent="absolute-value($contents)">
  <mo>|</mo>
  <mi arg="contents">x</mi>
  <mo>|</mo>
</mrow>)xml";

}  // namespace

TEST_CASE("minimal document") {
  Document doc = parse_document("<math><mi>x</mi></math>");
  REQUIRE(doc.root.name == "math");
  auto roots = math_roots(doc);
  REQUIRE(roots.size() == 1);
  auto children = doc.root.child_elements();
  REQUIRE(children.size() == 1);
  CHECK(children[0]->name == "mi");
  CHECK(children[0]->text() == "x");
}

TEST_CASE("annotated bars markup") {
  Document doc = parse_document(kBarsMarkup);
  REQUIRE(doc.root.name == "mrow");
  REQUIRE(doc.root.attribute("intent") != nullptr);
  CHECK(*doc.root.attribute("intent") == "absolute-value($contents)");
  auto children = doc.root.child_elements();
  REQUIRE(children.size() == 3);
  CHECK(children[0]->name == "mo");
  CHECK(children[1]->name == "mi");
  CHECK(children[2]->name == "mo");
  REQUIRE(children[1]->attribute("arg") != nullptr);
  CHECK(*children[1]->attribute("arg") == "contents");
  CHECK(children[1]->text() == "x");
}

TEST_CASE("namespace prefix is stripped from element names") {
  Document doc = parse_document(
      "<m:math xmlns:m=\"http://www.w3.org/1998/Math/MathML\">"
      "<m:mn>3</m:mn></m:math>");
  CHECK(doc.root.name == "math");
  auto roots = math_roots(doc);
  REQUIRE(roots.size() == 1);
  auto children = doc.root.child_elements();
  REQUIRE(children.size() == 1);
  CHECK(children[0]->name == "mn");
  CHECK(children[0]->text() == "3");
}

TEST_CASE("child element helpers") {
  SUBCASE("bars row") {
    Document doc = parse_document(kBarsMarkup);
    auto children = doc.root.child_elements();
    REQUIRE(children.size() == 3);
    CHECK(doc.root.first_child_element() == children[0]);
  }
  SUBCASE("text only element has no child elements") {
    Document doc = parse_document("<mi>velocity</mi>");
    CHECK(doc.root.child_elements().empty());
    CHECK(doc.root.first_child_element() == nullptr);
  }
  SUBCASE("outer superscript of the nested power corpus entry") {
    Document doc = ts::parse_corpus("nested_power.xml");
    auto roots = math_roots(doc);
    REQUIRE(roots.size() == 1);
    const Element* msup = roots[0]->first_child_element();
    REQUIRE(msup != nullptr);
    CHECK(msup->name == "msup");
    auto children = msup->child_elements();
    REQUIRE(children.size() == 2);
    CHECK(children[0]->name == "mrow");
    CHECK(children[1]->name == "mn");
  }
}

TEST_CASE("token whitespace is trimmed and collapsed") {
  Document doc = parse_document("<mi>  a   b  </mi>");
  CHECK(doc.root.text() == "a b");
  Document doc2 = parse_document("<mtext>\n  spoken \t text \n</mtext>");
  CHECK(doc2.root.text() == "spoken text");
}

TEST_CASE("entity references") {
  SUBCASE("predefined") {
    Document doc = parse_document("<mo>&lt;&amp;&gt;&quot;&apos;</mo>");
    CHECK(doc.root.text() == "<&>\"'");
  }
  SUBCASE("numeric decimal and hex") {
    Document doc = parse_document("<mo>&#215;&#xD7;</mo>");
    CHECK(doc.root.text() == "\xC3\x97\xC3\x97");
  }
  SUBCASE("in attribute values") {
    Document doc = parse_document("<mi intent=\"&quot;x&quot;\">v</mi>");
    CHECK(*doc.root.attribute("intent") == "\"x\"");
  }
  SUBCASE("undefined entity is an error") {
    CHECK_THROWS_AS(parse_document("<mi>&nosuch;</mi>"), ParseError);
  }
  SUBCASE("bad numeric reference is an error") {
    CHECK_THROWS_AS(parse_document("<mi>&#xZZ;</mi>"), ParseError);
    CHECK_THROWS_AS(parse_document("<mi>&#;</mi>"), ParseError);
  }
}

TEST_CASE("parse errors carry positions") {
  SUBCASE("mismatched tags") {
    try {
      parse_document("<math>\n<mrow></mi></mrow></math>");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
      CHECK(e.column() == 7);
    }
  }
  SUBCASE("unterminated tag") {
    CHECK_THROWS_AS(parse_document("<math><mi>x</mi>"), ParseError);
    CHECK_THROWS_AS(parse_document("<math attr"), ParseError);
  }
  SUBCASE("duplicate attribute") {
    try {
      parse_document("<mi arg=\"a\" arg=\"b\">x</mi>");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 1);
      CHECK(std::string(e.what()).find("duplicate") != std::string::npos);
    }
  }
  SUBCASE("stray closing tag") {
    CHECK_THROWS_AS(parse_document("<mi>x</mi></mrow>"), ParseError);
  }
}

TEST_CASE("attribute values normalize literal whitespace") {
  Document doc = parse_document(
      "<mrow intent=\"f($a,\n\t$b)\"><mi arg=\"a\">x</mi>"
      "<mi arg=\"b\">y</mi></mrow>");
  CHECK(*doc.root.attribute("intent") == "f($a,  $b)");
}

TEST_CASE("cdata sections are not part of the supported profile") {
  CHECK_THROWS_AS(parse_document("<mi><![CDATA[x]]></mi>"), ParseError);
}

TEST_CASE("comments, processing instructions, and doctype are skipped") {
  Document doc = parse_document(
      "<?xml version=\"1.0\"?>\n"
      "<!DOCTYPE html>\n"
      "<math><!-- note --><mi>x</mi></math>");
  auto children = doc.root.child_elements();
  REQUIRE(children.size() == 1);
  CHECK(children[0]->text() == "x");
}

TEST_CASE("math roots follow document order") {
  Document doc = parse_document(
      "<p>Consider <math><mi>a</mi></math> and "
      "<math><mi>b</mi></math> now.</p>");
  auto roots = math_roots(doc);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0]->first_child_element()->text() == "a");
  CHECK(roots[1]->first_child_element()->text() == "b");
}

TEST_CASE("top level fragments get a synthetic root") {
  Document doc = parse_document(
      "intro <math><mi>a</mi></math> middle <math><mi>b</mi></math>");
  CHECK(doc.root.name == kFragmentRootName);
  CHECK(math_roots(doc).size() == 2);
}

TEST_CASE("round trip: corpus files") {
  for (const std::string& path : ts::corpus_files()) {
    CAPTURE(path);
    Document doc = parse_document(ts::read_file(path));
    std::string canonical = serialize_canonical(doc);
    Document again = parse_document(canonical);
    CHECK(structurally_equal(doc, again));
    // Canonical form is a fixed point.
    CHECK(serialize_canonical(again) == canonical);
  }
}

TEST_CASE("round trip: random trees") {
  ts::TreeGen gen(20260808);
  for (int i = 0; i < 250; ++i) {
    Element math = gen.document();
    Document doc{math};
    std::string canonical = serialize_canonical(doc);
    CAPTURE(canonical);
    Document again = parse_document(canonical);
    CHECK(structurally_equal(doc, again));
  }
}

TEST_CASE("pathological nesting is rejected, not crashed on") {
  std::string deep;
  for (int i = 0; i < 100000; ++i) deep += "<mrow>";
  CHECK_THROWS_AS(parse_document(deep), ParseError);
}

TEST_CASE("escaping survives the round trip") {
  Element e;
  e.name = "mtext";
  e.attributes.push_back({"data-note", "a<b & \"c\""});
  e.children.push_back(Node{std::string("1 < 2 & 3 > 2")});
  Document doc{e};
  Document again = parse_document(serialize_canonical(doc));
  CHECK(structurally_equal(doc, again));
}
