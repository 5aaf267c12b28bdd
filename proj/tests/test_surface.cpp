#include <doctest.h>

#include <sstream>

#include "monolog/errors.hpp"
#include "monolog/random.hpp"
#include "monolog/surface.hpp"
#include "support.hpp"

using namespace monolog;
using namespace monolog::test;

TEST_SUITE("surface") {

TEST_CASE("parse_sentence examples") {
  CHECK(S("all apples are fruit") == Sentence{Subsumption{C("apples"), C("fruit")}});
  CHECK(S("all couch are couch") == Sentence{Subsumption{C("couch"), C("couch")}});
  CHECK(S("p1 is downward monotone") == Sentence{DownwardMonotone{P("p1")}});
}

TEST_CASE("both stylizations parse to the same sentence") {
  CHECK(S("apples [= fruit") == S("all apples are fruit"));
  CHECK(S("apples [=_p fruit") == S("if p(apples) then p(fruit)"));
  CHECK(S("forall x,y (x [= y <-> x [=_p y)") == S("p is upward monotone"));
  CHECK(S("forall x, y (x [= y <-> y [=_p x)") == S("p is downward monotone"));
  CHECK(S("ALL South  African soccer players ARE soccer players") ==
        Sentence{Subsumption{C("south african soccer players"), C("soccer players")}});
}

TEST_CASE("format_sentence examples") {
  const Sentence s = Subsumption{C("apples"), C("fruit")};
  CHECK(format_sentence(s, Style::Natural) == "all apples are fruit");
  CHECK(format_sentence(s, Style::Symbolic) == "apples [= fruit");
  CHECK(format_sentence(UpwardMonotone{P("p1")}, Style::Natural) == "p1 is upward monotone");
  CHECK(format_sentence(ContextEntailment{P("p"), C("a"), C("b")}, Style::Natural) == "if p(a) then p(b)");
  CHECK(format_sentence(DownwardMonotone{P("p")}, Style::Symbolic) == "forall x,y (x [= y <-> y [=_p x)");
}

TEST_CASE("template contexts inside sentences") {
  const Sentence s = S("\"There were no x today.\" is downward monotone");
  CHECK(s == Sentence{DownwardMonotone{P("there were no x today .")}});
  CHECK(format_sentence(s) == "\"there were no x today .\" is downward monotone");
  CHECK(S(format_sentence(s, Style::Symbolic)) == s);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(S("some apples are fruit"), SyntaxError);
  CHECK_THROWS_AS(S("all are fruit"), EmptyConcept);
  CHECK_THROWS_AS(S("if p() then p(b)"), EmptyConcept);
  CHECK_THROWS_AS(S("all x are fruit"), SyntaxError);
  CHECK_THROWS_AS(S("if p(a) then q(b)"), SyntaxError);
  CHECK_THROWS_AS(S("forall x,y (x [= y <-> x [=_p x)"), SyntaxError);
  CHECK_THROWS_AS(S("if \"a x and x\"(a) then \"a x and x\"(b)"), SyntaxError);
}

TEST_CASE("registry restricts contexts") {
  ContextRegistry reg;
  reg.add(parse_context("There were no x today."));
  reg.add_abstract(P("p"));
  CHECK_NOTHROW(parse_sentence("\"there were no x today .\" is downward monotone", &reg));
  CHECK_NOTHROW(parse_sentence("if p(a) then p(b)", &reg));
  CHECK_THROWS_AS(parse_sentence("q is upward monotone", &reg), UnknownContext);

  std::istringstream file("# contexts\nThere were no x today.\n\nEvery x laughed.\n");
  const auto loaded = ContextRegistry::read(file);
  CHECK(loaded.size() == 2);
  CHECK(loaded.contains(P("every x laughed .")));
  REQUIRE(loaded.find_template(P("every x laughed .")) != nullptr);
  CHECK(loaded.find_template(P("every x laughed ."))->text() == "Every x laughed.");

  std::istringstream bad("Every x laughed.\nno slot here\n");
  CHECK_THROWS_AS(ContextRegistry::read(bad), FileFormatError);
}

TEST_CASE("parse_context examples") {
  const auto t = parse_context("There were no x today.");
  std::vector<std::string> texts;
  for (const auto& tok : t.tokens()) texts.push_back(tok.text);
  CHECK(texts == std::vector<std::string>{"There", "were", "no", "x", "today", "."});
  CHECK(t.context().id() == "there were no x today .");
  CHECK(t.text() == "There were no x today.");

  const auto identity = parse_context("x");
  CHECK(identity.tokens().size() == 1);
  CHECK(identity.context().id() == "x");

  try {
    parse_context("x and x ran.");
    FAIL("expected MultipleVariables");
  } catch (const TemplateError& e) {
    CHECK(e.kind() == TemplateError::Kind::MultipleVariables);
  }
  try {
    parse_context("no slot at all");
    FAIL("expected NoVariable");
  } catch (const TemplateError& e) {
    CHECK(e.kind() == TemplateError::Kind::NoVariable);
  }
}

TEST_CASE("template id determinism") {
  CHECK(parse_context("There were no x today.").context() == parse_context("there   were no x today .").context());
  CHECK(parse_context("Every x laughed.").context() != parse_context("Every x cried.").context());
}

TEST_CASE("substitute examples") {
  CHECK(substitute(parse_context("I ate some x for breakfast ."), C("fruit")) == "I ate some fruit for breakfast .");
  CHECK(substitute(parse_context("x"), C("dogs")) == "dogs");
  CHECK(substitute(parse_context("There were no x today ."), C("dogs")) == "There were no dogs today .");
  CHECK(substitute(parse_context("There were no x today."), C("dogs")) == "There were no dogs today.");
}

TEST_CASE("tokenize detaches trailing punctuation") {
  const auto toks = tokenize("If x, then yes!");
  REQUIRE(toks.size() == 6);
  CHECK(toks[1].text == "x");
  CHECK(toks[2].text == ",");
  CHECK(toks[2].glued);
  CHECK(render(toks) == "If x, then yes!");
  CHECK(tokenize("wait ...").back().text == "...");
}

TEST_CASE("read_sentences skips comments and reports line numbers") {
  std::istringstream in("# theory\nall apples are fruit\n\np is upward monotone\n");
  CHECK(read_sentences(in).size() == 2);
  std::istringstream bad("all apples are fruit\nsome nonsense\n");
  try {
    read_sentences(bad);
    FAIL("expected FileFormatError");
  } catch (const FileFormatError& e) {
    CHECK(e.line() == 2);
  }
}

namespace {

// Concept names that stress quoting: keywords, parens, the relation symbol.
ConceptSymbol random_concept(Rng& rng) {
  static const std::vector<std::string> words = {"apples", "fruit", "dogs", "with", "hats", "are", "all",
                                                 "if",     "then",  "is",   "(big)", "a[=b", "south", "monotone",
                                                 "x-ray",  "quote\"d", "upward", "forall", "<->", "x"};
  std::string name;
  const std::size_t n = 1 + uniform_below(rng, 3);
  for (std::size_t i = 0; i < n; ++i) name += (i ? " " : "") + words[uniform_below(rng, words.size())];
  if (name == "x") name = "xs";
  return ConceptSymbol(name);
}

ContextSymbol random_context(Rng& rng) {
  static const std::vector<std::string> ids = {"p", "p1", "Q_2", "all", "x", "is"};
  static const std::vector<std::string> templates = {"There were no x today.", "Every x laughed.",
                                                     "I ate \"some\" x (really).", "x"};
  if (coin(rng)) return ContextSymbol(ids[uniform_below(rng, ids.size())]);
  if (coin(rng)) return ContextSymbol("my context");
  return parse_context(templates[uniform_below(rng, templates.size())]).context();
}

}  // namespace

TEST_CASE("property: parse(format(s, style)) == s") {
  Rng rng(7);
  for (int i = 0; i < 3000; ++i) {
    Sentence s = [&]() -> Sentence {
      switch (uniform_below(rng, 4)) {
        case 0: return Subsumption{random_concept(rng), random_concept(rng)};
        case 1: return ContextEntailment{random_context(rng), random_concept(rng), random_concept(rng)};
        case 2: return UpwardMonotone{random_context(rng)};
        default: return DownwardMonotone{random_context(rng)};
      }
    }();
    for (Style style : {Style::Natural, Style::Symbolic}) {
      const std::string text = format_sentence(s, style);
      INFO(text);
      CHECK(parse_sentence(text) == s);
    }
  }
}

TEST_CASE("property: normalization is idempotent") {
  Rng rng(11);
  const std::string alphabet = "aB \t\nZ-.";
  for (int i = 0; i < 2000; ++i) {
    std::string s;
    const std::size_t n = uniform_below(rng, 12);
    for (std::size_t k = 0; k < n; ++k) s.push_back(alphabet[uniform_below(rng, alphabet.size())]);
    const std::string once = normalize_name(s);
    CHECK(normalize_name(once) == once);
    if (!once.empty()) {
      CHECK(once.front() != ' ');
      CHECK(once.back() != ' ');
      CHECK(once.find("  ") == std::string::npos);
    }
  }
}

}  // TEST_SUITE
