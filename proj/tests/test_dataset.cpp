#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "monolog/dataset.hpp"
#include "monolog/errors.hpp"
#include "monolog/random.hpp"
#include "support.hpp"

using namespace monolog;
using namespace monolog::test;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<HelpRecord> sample_records() {
  std::ifstream in(MONOLOG_TEST_DATA "/sample_help.jsonl");
  REQUIRE(in);
  return read_help_records(in);
}

HelpRecord record(std::string id, std::string premise, std::string hypothesis,
                  HelpMonotonicity mon = HelpMonotonicity::Downward) {
  return {std::move(id), std::move(premise), std::move(hypothesis), EntailmentLabel::Neutral, mon};
}

ExtractionError::Kind extraction_kind(std::string_view p, std::string_view h) {
  try {
    extract_context(p, h);
  } catch (const ExtractionError& e) {
    return e.kind();
  }
  FAIL("expected ExtractionError");
  return ExtractionError::Kind::NoContext;
}

// Character-level diff: the region of the premise outside the longest common
// character prefix and suffix, with surrounding spaces trimmed.
std::pair<std::size_t, std::size_t> char_diff_region(const std::string& p, const std::string& h) {
  std::size_t pre = 0;
  while (pre < p.size() && pre < h.size() && p[pre] == h[pre]) ++pre;
  std::size_t suf = 0;
  const std::size_t room = std::min(p.size(), h.size()) - pre;
  while (suf < room && p[p.size() - 1 - suf] == h[h.size() - 1 - suf]) ++suf;
  std::size_t begin = pre, end = p.size() - suf;
  while (begin < end && p[begin] == ' ') ++begin;
  while (end > begin && p[end - 1] == ' ') --end;
  return {begin, end};
}

void check_against_char_diff(const std::string& p, const std::string& h) {
  INFO(p << " / " << h);
  const Extraction ex = extract_context(p, h);
  CHECK(ex.context.substitute(ex.a) == p);
  CHECK(ex.context.substitute(ex.b) == h);
  // Each side's changed characters must lie inside that side's phrase.
  auto contained = [&](const std::string& s, const std::string& other, const ConceptSymbol& phrase) {
    const auto [begin, end] = char_diff_region(s, other);
    if (begin == end) return true;
    const std::size_t start = s.find(phrase.name(), ex.context.substitute(ConceptSymbol("qqqq")).find("qqqq"));
    return start != std::string::npos && begin >= start && end <= start + phrase.name().size();
  };
  CHECK(contained(p, h, ex.a));
  CHECK(contained(h, p, ex.b));
}

std::vector<ContextRecord> numbered_contexts(std::size_t n) {
  std::vector<ContextRecord> out;
  for (std::size_t i = 0; i < n; ++i)
    out.push_back({"context number " + std::to_string(i) + " has x .", i % 2 ? Monotonicity::Upward : Monotonicity::Downward});
  return out;
}

}  // namespace

TEST_SUITE("dataset") {

TEST_CASE("extract_context examples") {
  const auto ex = extract_context("There were no dogs today .", "There were no animals today .");
  CHECK(ex.context.text() == "There were no x today .");
  CHECK(ex.a == C("dogs"));
  CHECK(ex.b == C("animals"));

  CHECK(extraction_kind("Tom slept .", "Tom slept .") == ExtractionError::Kind::IdenticalSentences);

  const auto ins = extract_context("Some dogs with hats ran .", "Some dogs ran .");
  CHECK(ins.context.text() == "Some x ran .");
  CHECK(ins.a == C("dogs with hats"));
  CHECK(ins.b == C("dogs"));
}

TEST_CASE("extract_context edge cases") {
  CHECK(extraction_kind("alpha beta", "gamma delta") == ExtractionError::Kind::NoContext);
  CHECK(extraction_kind("I saw x .", "I saw dogs .") == ExtractionError::Kind::ReservedToken);
  CHECK(extraction_kind("x saw dogs .", "x saw cats .") == ExtractionError::Kind::ReservedToken);
  const auto glued = extract_context("There were no dogs today.", "There were no animals today.");
  CHECK(glued.context.text() == "There were no x today.");
  const auto front = extract_context("Dogs bark .", "Cats bark .");
  CHECK(front.context.text() == "x bark .");
  CHECK(front.a == C("dogs"));
}

TEST_CASE("extraction agrees with a character-level diff") {
  check_against_char_diff("There were no dogs today .", "There were no animals today .");
  check_against_char_diff("some dogs with hats ran .", "some dogs ran .");
  check_against_char_diff("some dogs ran .", "some dogs with hats ran .");
  check_against_char_diff("i ate some fruit for breakfast .", "i ate some red apples for breakfast .");
  check_against_char_diff("every dog laughed.", "every poodle laughed.");
  check_against_char_diff("no cat slept", "no big cat slept");
}

TEST_CASE("property: extraction inverts substitution") {
  static const std::vector<std::string> words = {"the", "a", "no", "some", "dogs", "ran", "today", "in",
                                                 "park", "every", "red", "cat", "slept", "with", "hats"};
  Rng rng(37);
  auto phrase = [&](std::size_t max_len) {
    std::vector<std::string> out;
    const std::size_t n = 1 + uniform_below(rng, max_len);
    for (std::size_t i = 0; i < n; ++i) out.push_back(words[uniform_below(rng, words.size())]);
    return out;
  };
  auto join = [](const std::vector<std::string>& ws) {
    std::string s;
    for (const auto& w : ws) s += (s.empty() ? "" : " ") + w;
    return s;
  };
  int checked = 0;
  while (checked < 2000) {
    auto t = phrase(6);
    t.insert(t.begin() + static_cast<long>(uniform_below(rng, t.size() + 1)), "x");
    if (coin(rng)) t.push_back(".");
    const auto a = phrase(3), b = phrase(3);
    if (a.front() == b.front() || a.back() == b.back()) continue;
    const ContextTemplate tmpl = parse_context(join(t));
    const ConceptSymbol ca(join(a)), cb(join(b));
    const Extraction ex = extract_context(tmpl.substitute(ca), tmpl.substitute(cb));
    CHECK(ex.context == tmpl);
    CHECK(ex.a == ca);
    CHECK(ex.b == cb);
    ++checked;
  }
}

TEST_CASE("convert_help examples") {
  const auto one = convert_help(std::vector{record("1", "There is no time for hesitation .", "There is no time for doubt .")});
  REQUIRE(one.contexts.size() == 1);
  CHECK(one.contexts[0].context == "There is no time for x .");
  CHECK(one.contexts[0].monotonicity == Monotonicity::Downward);

  const auto filtered = convert_help(std::vector{record("2", "Exactly three dogs ran .", "Exactly three cats ran .",
                                                        HelpMonotonicity::NonMonotone)});
  CHECK(filtered.contexts.empty());
  REQUIRE(filtered.rejects.size() == 1);
  CHECK(filtered.rejects[0].reason == "non-monotone");

  const auto dedup = convert_help(std::vector{record("3", "No dogs ran .", "No cats ran ."),
                                              record("4", "No birds ran .", "No animals ran .")});
  CHECK(dedup.contexts.size() == 1);
  CHECK(dedup.rejects.empty());
}

TEST_CASE("convert_help reports conflicts and failures") {
  const auto out = convert_help(std::vector{record("1", "No dogs ran .", "No cats ran ."),
                                            record("2", "No birds ran .", "No owls ran .", HelpMonotonicity::Upward),
                                            record("3", "Same .", "Same ."),
                                            record("4", "alpha beta", "gamma delta")});
  CHECK(out.contexts.size() == 1);
  REQUIRE(out.rejects.size() == 3);
  CHECK(out.rejects[0].reason == "conflicting-monotonicity");
  CHECK(out.rejects[1].reason == "identical-sentences");
  CHECK(out.rejects[2].reason == "no-context");
}

TEST_CASE("convert_help reproduces the fixture byte for byte") {
  const auto out = convert_help(sample_records());
  std::ostringstream contexts, rejects;
  write_context_records(contexts, out.contexts);
  write_rejects(rejects, out.rejects);
  CHECK(contexts.str() == slurp(MONOLOG_GOLDEN "/sample_contexts.jsonl"));
  CHECK(rejects.str() == slurp(MONOLOG_GOLDEN "/sample_rejects.jsonl"));
}

TEST_CASE("JSONL readers") {
  std::istringstream good(R"({"id":"a","premise":"p x","hypothesis":"p y","gold_label":"neutral","monotonicity":"upward_monotone"})");
  CHECK(read_help_records(good).size() == 1);
  std::istringstream missing("{\"id\":\"a\"}\n");
  CHECK_THROWS_AS(read_help_records(missing), FileFormatError);
  std::istringstream bad_label(
      "\n{\"id\":\"a\",\"premise\":\"p\",\"hypothesis\":\"q\",\"gold_label\":\"maybe\",\"monotonicity\":\"upward_monotone\"}\n");
  try {
    read_help_records(bad_label);
    FAIL("expected FileFormatError");
  } catch (const FileFormatError& e) {
    CHECK(e.line() == 2);
  }
  std::ostringstream out;
  write_help_records(out, sample_records());
  std::istringstream back(out.str());
  CHECK(read_help_records(back) == sample_records());
}

TEST_CASE("split sizes") {
  CHECK(partition_sizes(10, {}) == std::array<std::size_t, 3>{5, 2, 3});
  CHECK(partition_sizes(1, {}) == std::array<std::size_t, 3>{1, 0, 0});
  CHECK(partition_sizes(0, {}) == std::array<std::size_t, 3>{0, 0, 0});
  CHECK(partition_sizes(3, {1, 1, 1}) == std::array<std::size_t, 3>{1, 1, 1});

  const auto one = split_contexts(numbered_contexts(1), 5);
  CHECK(one.count(Partition::Train) == 1);
  const auto ten = split_contexts(numbered_contexts(10), 5);
  CHECK(ten.count(Partition::Train) == 5);
  CHECK(ten.count(Partition::Dev) == 2);
  CHECK(ten.count(Partition::Test) == 3);

  CHECK(SplitRatio::parse("60:20:20").train == 60);
  CHECK_THROWS_AS(SplitRatio::parse("60:20"), Error);
  CHECK_THROWS_AS(SplitRatio::parse("0:0:0"), Error);
}

TEST_CASE("property: sizes stay within one of the exact ratio") {
  for (std::size_t n = 1; n <= 1000; ++n) {
    const auto s = partition_sizes(n, {});
    CHECK(s[0] + s[1] + s[2] == n);
    const double exact[3] = {n * 0.5, n * 0.2, n * 0.3};
    for (int i = 0; i < 3; ++i) CHECK(std::abs(static_cast<double>(s[i]) - exact[i]) <= 1.0);
  }
}

TEST_CASE("property: assignment ignores input order") {
  Rng rng(41);
  auto contexts = numbered_contexts(100);
  const auto base = split_contexts(contexts, 99);
  for (int i = 0; i < 20; ++i) {
    for (std::size_t k = contexts.size(); k > 1; --k) std::swap(contexts[k - 1], contexts[uniform_below(rng, k)]);
    const auto again = split_contexts(contexts, 99);
    for (const auto& e : base.entries()) CHECK(again.partition_of(e.id) == e.partition);
  }
  const auto other_seed = split_contexts(contexts, 100);
  bool differs = false;
  for (const auto& e : base.entries()) differs |= other_seed.partition_of(e.id) != e.partition;
  CHECK(differs);
}

TEST_CASE("split_nli examples") {
  const std::vector<ContextRecord> ctx = {{"There were no x today .", Monotonicity::Downward}};
  SplitAssignment dev({{P("there were no x today ."), "There were no x today .", Partition::Dev}});
  const auto routed = split_nli(std::vector{record("1", "There were no dogs today .", "There were no animals today ."),
                                            record("2", "There were no cats today .", "There were no pets today .")},
                                dev);
  CHECK(routed.dev.size() == 2);
  CHECK(routed.train.empty());
  CHECK(routed.test.empty());

  const auto empty = split_nli(std::vector<HelpRecord>{}, dev);
  CHECK((empty.train.empty() && empty.dev.empty() && empty.test.empty() && empty.rejects.empty()));

  const auto non = split_nli(std::vector{record("3", "There were no dogs today .", "There were no cats today .",
                                                HelpMonotonicity::NonMonotone)},
                             dev);
  REQUIRE(non.rejects.size() == 1);
  CHECK(non.rejects[0].reason == "non-monotone");

  const auto unassigned = split_nli(std::vector{record("4", "Every dog ran .", "Every cat ran .")}, dev);
  REQUIRE(unassigned.rejects.size() == 1);
  CHECK(unassigned.rejects[0].reason == "unassigned-context");
}

TEST_CASE("property: split_nli is context-disjoint and conserves records") {
  static const std::vector<std::string> frames = {"No x ran .", "Every x slept .", "Some x sang .", "Few x ate .",
                                                  "I saw x .", "Tom likes x .", "There were no x today ."};
  static const std::vector<std::string> nouns = {"dogs", "cats", "birds", "owls", "fish", "x"};
  Rng rng(43);
  for (int round = 0; round < 50; ++round) {
    std::vector<HelpRecord> records;
    const std::size_t n = uniform_below(rng, 40);
    for (std::size_t i = 0; i < n; ++i) {
      const auto t = parse_context(frames[uniform_below(rng, frames.size())]);
      const auto a = nouns[uniform_below(rng, nouns.size())], b = nouns[uniform_below(rng, nouns.size())];
      const auto mon = static_cast<HelpMonotonicity>(uniform_below(rng, 3));
      auto sub = [&](const std::string& w) { return w == "x" ? t.text() : t.substitute(ConceptSymbol(w)); };
      records.push_back(record(std::to_string(i), sub(a), sub(b), mon));
    }
    const auto conv = convert_help(records);
    const auto split = split_nli(records, split_contexts(conv.contexts, round));
    CHECK(split.train.size() + split.dev.size() + split.test.size() + split.rejects.size() == records.size());
    auto ids = [](const std::vector<HelpRecord>& rs) {
      std::set<ContextSymbol> out;
      for (const auto& r : rs) out.insert(extract_context(r.premise, r.hypothesis).context.context());
      return out;
    };
    const auto tr = ids(split.train), dv = ids(split.dev), te = ids(split.test);
    for (const auto& id : tr) CHECK((dv.count(id) == 0 && te.count(id) == 0));
    for (const auto& id : dv) CHECK(te.count(id) == 0);
  }
}

TEST_CASE("relabel examples") {
  TaxonomyGraph g;
  g.add_edge(C("dogs"), C("animals"));
  auto with_gold = [](HelpRecord r, EntailmentLabel l) {
    r.gold_label = l;
    return r;
  };
  const std::vector<HelpRecord> rs = {
      with_gold(record("1", "I saw dogs .", "I saw animals .", HelpMonotonicity::Upward), EntailmentLabel::Entailment),
      with_gold(record("2", "I saw zebras .", "I saw animals .", HelpMonotonicity::Upward), EntailmentLabel::Neutral),
      with_gold(record("3", "No dogs ran .", "No animals ran .", HelpMonotonicity::Downward), EntailmentLabel::Neutral),
      with_gold(record("4", "Same .", "Same ."), EntailmentLabel::Entailment),
      record("5", "Exactly one dog ran .", "Exactly one animal ran .", HelpMonotonicity::NonMonotone),
  };
  const auto out = relabel_with_oracle(rs, g);
  REQUIRE(out.size() == 5);
  CHECK(out[0].label == EntailmentLabel::Entailment);
  CHECK(out[0].agreement);
  CHECK(out[0].status == RelabelStatus::Ok);
  CHECK(out[1].label == EntailmentLabel::Neutral);
  CHECK(out[1].status == RelabelStatus::UnknownRelation);
  CHECK(out[2].label == EntailmentLabel::Neutral);
  CHECK(out[2].agreement);
  CHECK(out[3].label == EntailmentLabel::Entailment);
  CHECK(out[4].status == RelabelStatus::NonMonotone);
}

}  // TEST_SUITE
