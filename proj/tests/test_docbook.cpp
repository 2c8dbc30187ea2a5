#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "exemplar/docbook.hpp"
#include "exemplar/errors.hpp"
#include "exemplar/render.hpp"
#include "support/test_suites.hpp"

using namespace exemplar;
using testsupport::SuiteBuilder;

namespace {

struct DocFixture {
  SuiteBuilder suite;
  ViewRegistry views;

  DocFixture() {
    suite.add("math.base", {}, 1);
    suite.add("math.add", {"math.base"}, 2);  // value 3
    suite.add("bad.assert", {}, 0, SuiteBuilder::Outcome::FailAssertion);
    suite.add("bad.child", {"bad.assert"});
    views.register_view("Int", ViewId("boxed"), [](const ExampleValue& v) {
      return text("sum is " + std::to_string(value_as<int>(v)));
    });
  }

  BuiltDocument build(const std::string& input) {
    auto graph = build_graph(suite.registry);
    return build_document(parse_document(input), graph, views);
  }
};

}  // namespace

TEST_CASE("plain markdown parses to prose and round-trips") {
  std::string input = "# Title\n\nSome *prose*.\n\n- a list\n";
  auto doc = parse_document(input);
  REQUIRE(doc.blocks.size() == 1);
  CHECK(std::get<ProseBlock>(doc.blocks[0]).text == input);
  CHECK(doc.source_text() == input);

  CHECK(parse_document("").blocks.empty());
  CHECK(parse_document("").source_text() == "");

  std::string no_final_newline = "last line has no terminator";
  CHECK(parse_document(no_final_newline).source_text() == no_final_newline);
}

TEST_CASE("example fences become embed blocks with verbatim source") {
  std::string input =
      "intro\n"
      "\n"
      "```example\n"
      "id: prices.hundredEuros\n"
      "view: overview\n"
      "```\n"
      "outro\n";
  auto doc = parse_document(input);
  REQUIRE(doc.blocks.size() == 3);

  const auto& embed = std::get<EmbedBlock>(doc.blocks[1]);
  CHECK(embed.directive.example_id == ExampleId("prices.hundredEuros"));
  CHECK(embed.directive.view_id == ViewId("overview"));
  CHECK(embed.source_line == 3);
  CHECK(embed.source == "```example\nid: prices.hundredEuros\nview: overview\n```\n");

  CHECK(std::get<ProseBlock>(doc.blocks[0]).text == "intro\n\n");
  CHECK(std::get<ProseBlock>(doc.blocks[2]).text == "outro\n");
  CHECK(doc.source_text() == input);
}

TEST_CASE("the view defaults to raw and directive bodies are forgiving") {
  auto doc = parse_document("```example\n\n  id:   a.b  \n\n```\n");
  const auto& embed = std::get<EmbedBlock>(doc.blocks[0]);
  CHECK(embed.directive.example_id == ExampleId("a.b"));
  CHECK(embed.directive.view_id == ViewId::raw());

  // Trailing blanks on the fence line and longer closers are fine.
  auto relaxed = parse_document("```example  \nid: a\n``````\n");
  CHECK(std::get<EmbedBlock>(relaxed.blocks[0]).directive.example_id == ExampleId("a"));

  // CRLF input parses and stays verbatim.
  std::string crlf = "```example\r\nid: a\r\n```\r\n";
  auto win = parse_document(crlf);
  CHECK(std::get<EmbedBlock>(win.blocks[0]).source == crlf);
}

TEST_CASE("only column-zero ```example fences open a directive") {
  // Indented fence: prose.
  auto indented = parse_document("  ```example\n  id: a\n  ```\n");
  REQUIRE(indented.blocks.size() == 1);
  CHECK(std::holds_alternative<ProseBlock>(indented.blocks[0]));

  // Different info string: an ordinary code fence.
  auto python = parse_document("```python\nprint(1)\n```\n");
  REQUIRE(python.blocks.size() == 1);
  CHECK(std::holds_alternative<ProseBlock>(python.blocks[0]));

  // Four-backtick fence is not an example fence even with the word in it.
  auto four = parse_document("````example\nstuff\n````\n");
  REQUIRE(four.blocks.size() == 1);
  CHECK(std::holds_alternative<ProseBlock>(four.blocks[0]));

  // "```examples" is a different info string.
  auto plural = parse_document("```examples\nid: a\n```\n");
  CHECK(std::holds_alternative<ProseBlock>(plural.blocks[0]));
}

TEST_CASE("an example fence inside an ordinary code fence stays prose") {
  std::string input =
      "```markdown\n"
      "```example\n"
      "id: not.a.directive\n"
      "```\n"
      "after\n";
  // The inner "```example" line is not all-backticks, so it neither closes
  // the markdown fence nor opens a directive.
  auto doc = parse_document(input);
  REQUIRE(doc.blocks.size() == 1);
  CHECK(doc.source_text() == input);
}

TEST_CASE("malformed directives name the offending line") {
  auto reason_at = [](const std::string& input, int line, const std::string& reason) {
    try {
      parse_document(input);
      return std::string("no error");
    } catch (const MalformedDirectiveError& e) {
      if (e.line() != line) return "line " + std::to_string(e.line());
      return e.reason();
    }
  };

  CHECK(reason_at("a\n\n```example\nbroken line\n```\n", 4,
                  "expected 'key: value' in directive body") ==
        "expected 'key: value' in directive body");
  CHECK(reason_at("```example\nid: a\nid: b\n```\n", 3, "") == "duplicate key \"id\"");
  CHECK(reason_at("```example\nid: 9bad\n```\n", 2, "") == "bad example id \"9bad\"");
  CHECK(reason_at("```example\nid: a\nview: x\nview: y\n```\n", 4, "") ==
        "duplicate key \"view\"");
  CHECK(reason_at("```example\nid: a\nview: BAD\n```\n", 3, "") == "bad view id \"BAD\"");
  CHECK(reason_at("```example\nid: a\nname: zz\n```\n", 3, "") == "unknown key \"name\"");
  CHECK(reason_at("x\n```example\nid: a\n", 2, "") == "unterminated example directive");
  CHECK(reason_at("```example\nview: raw\n```\n", 1, "") == "missing id");
}

TEST_CASE("building a page splices rendered views under status markers") {
  DocFixture fx;
  auto built = fx.build(
      "# Title\n"
      "\n"
      "```example\n"
      "id: math.add\n"
      "view: boxed\n"
      "```\n"
      "tail\n");
  CHECK(built.text ==
        "# Title\n"
        "\n"
        "<!-- example: math.add view: boxed status: passed -->\n"
        "sum is 3\n"
        "tail\n");
  CHECK(built.issues.empty());
}

TEST_CASE("embeds without a view render the raw structure") {
  DocFixture fx;
  auto built = fx.build("```example\nid: math.base\n```\n");
  CHECK(built.text ==
        "<!-- example: math.base view: raw status: passed -->\n"
        "**Int**\n"
        "\n"
        "- **value:** 1\n");
  CHECK(built.issues.empty());
}

TEST_CASE("a source block without a final newline builds without one") {
  DocFixture fx;
  auto built = fx.build("```example\nid: math.base\n```");
  CHECK(built.text ==
        "<!-- example: math.base view: raw status: passed -->\n"
        "**Int**\n"
        "\n"
        "- **value:** 1");
}

TEST_CASE("unknown examples are reported in place") {
  DocFixture fx;
  auto built = fx.build("intro\n\n```example\nid: ghost.example\n```\n");
  CHECK(built.text ==
        "intro\n"
        "\n"
        "<!-- example: ghost.example status: missing -->\n"
        "> no such example: ghost.example\n");
  REQUIRE(built.issues.size() == 1);
  CHECK(built.issues[0] ==
        DocIssue{1, "missing", "no such example: ghost.example"});
}

TEST_CASE("failed and skipped examples leave a diagnostic blockquote") {
  DocFixture fx;
  auto built = fx.build(
      "```example\nid: bad.assert\n```\n"
      "\n"
      "```example\nid: bad.child\n```\n");
  CHECK(built.text ==
        "<!-- example: bad.assert status: failed -->\n"
        "> failed (assertion): bad.assert does not hold\n"
        "\n"
        "<!-- example: bad.child status: skipped -->\n"
        "> skipped: blocked by bad.assert\n");
  REQUIRE(built.issues.size() == 2);
  CHECK(built.issues[0] ==
        DocIssue{0, "failed", "failed (assertion): bad.assert does not hold"});
  CHECK(built.issues[1] == DocIssue{2, "skipped", "skipped: blocked by bad.assert"});
}

TEST_CASE("setup failures read differently from assertion failures") {
  SuiteBuilder suite;
  suite.add("boom", {}, 0, SuiteBuilder::Outcome::FailSetup);
  ViewRegistry views;
  auto graph = build_graph(suite.registry);
  auto built = build_document(parse_document("```example\nid: boom\n```\n"), graph, views);
  CHECK(built.text ==
        "<!-- example: boom status: failed -->\n"
        "> failed (setup): could not set up boom\n");
}

TEST_CASE("a passing example with an unregistered view is an issue") {
  DocFixture fx;
  auto built = fx.build("```example\nid: math.base\nview: fancy\n```\n");
  CHECK(built.text ==
        "<!-- example: math.base status: unknown-view -->\n"
        "> no such view: fancy for type Int\n");
  REQUIRE(built.issues.size() == 1);
  CHECK(built.issues[0] == DocIssue{0, "unknown-view", "no such view: fancy for type Int"});
  // The example itself ran and passed; only the rendering request is bad.
  CHECK(fx.suite.count("math.base") == 1);
}

TEST_CASE("one build shares a single run across all embeds") {
  DocFixture fx;
  auto built = fx.build(
      "```example\nid: math.add\nview: boxed\n```\n"
      "\n"
      "```example\nid: math.add\n```\n"
      "\n"
      "```example\nid: math.base\n```\n");
  CHECK(built.issues.empty());
  CHECK(fx.suite.count("math.add") == 1);
  CHECK(fx.suite.count("math.base") == 1);  // shared with math.add's run
}

TEST_CASE("check_document returns the same issues building would") {
  DocFixture fx;
  std::string input =
      "```example\nid: ghost.example\n```\n"
      "\n"
      "```example\nid: bad.assert\n```\n";
  auto graph = build_graph(fx.suite.registry);
  auto doc = parse_document(input);
  CHECK(check_document(doc, graph, fx.views) == build_document(doc, graph, fx.views).issues);
  CHECK(check_document(doc, graph, fx.views).size() == 2);
}

TEST_CASE("random directive-free markdown always round-trips") {
  const std::vector<std::string> menu = {
      "alpha beta",  "",          "# heading",   "```",      "```py",
      "x = 1",       "    code",  "``````",      "text `x`", "> quote",
      "~~~",         "``` ",      "- bullet",    "***",      "night``` fence",
  };
  std::mt19937 rng(31);
  for (int round = 0; round < 60; ++round) {
    int lines = std::uniform_int_distribution<int>(0, 25)(rng);
    std::string input;
    for (int i = 0; i < lines; ++i) {
      input += menu[std::uniform_int_distribution<std::size_t>(0, menu.size() - 1)(rng)];
      input += "\n";
    }
    if (std::uniform_int_distribution<int>(0, 3)(rng) == 0 && !input.empty())
      input.pop_back();  // sometimes end without a newline

    auto doc = parse_document(input);
    CHECK(doc.source_text() == input);
    for (const auto& block : doc.blocks) CHECK(std::holds_alternative<ProseBlock>(block));
  }
}

TEST_CASE("documents with directives also round-trip verbatim") {
  std::string input =
      "prose\n"
      "```example\nid: one\n```\n"
      "middle\n"
      "```example\nid: two.three\nview: overview\n```";
  CHECK(parse_document(input).source_text() == input);
}
