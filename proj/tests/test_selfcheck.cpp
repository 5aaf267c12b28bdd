#include <doctest.h>

#include "monolog/selfcheck.hpp"
#include "support.hpp"

using namespace monolog;
using namespace monolog::test;

TEST_SUITE("selfcheck") {

TEST_CASE("correct rules pass on reflexive models") {
  SelfCheckOptions opts;
  opts.trials = 500;
  opts.seed = 1;
  opts.models.reflexive_arbitrary = true;
  const auto report = run_selfcheck(opts);
  CHECK(report.soundness_trials == 500);
  CHECK(report.agreement_trials == 500);
  CHECK(report.ok());
}

TEST_CASE("a corrupted downward rule is caught") {
  SelfCheckOptions opts;
  opts.trials = 500;
  opts.seed = 2;
  opts.models.reflexive_arbitrary = true;
  opts.rules.downward_unreversed = true;
  const auto report = run_selfcheck(opts);
  CHECK_FALSE(report.ok());
  CHECK(report.soundness_violations > 0);
  CHECK(report.agreement_violations > 0);
  REQUIRE(report.soundness_counterexample);
  const ModelSpec& cx = *report.soundness_counterexample;
  CHECK(cx.universe <= 2);
  CHECK(cx.concepts.size() <= 2);
  CHECK(cx.kinds.size() == 1);
  CHECK_FALSE(soundness_violations(cx, opts.rules).empty());
  REQUIRE(report.agreement_counterexample);
  CHECK(report.agreement_counterexample->size() <= 3);
  CHECK(describe(report, opts.rules).find("counterexample") != std::string::npos);
}

TEST_CASE("arbitrary relations violate the context axiom") {
  SelfCheckOptions opts;
  opts.trials = 300;
  opts.seed = 1;
  const auto report = run_selfcheck(opts);
  CHECK(report.soundness_violations > 0);
  CHECK(report.agreement_violations == 0);
  REQUIRE(report.soundness_counterexample);
  for (const auto& s : soundness_violations(*report.soundness_counterexample))
    CHECK(std::holds_alternative<ContextEntailment>(s));
}

TEST_CASE("same seed, same report") {
  SelfCheckOptions opts;
  opts.trials = 200;
  opts.seed = 42;
  const auto a = run_selfcheck(opts), b = run_selfcheck(opts);
  CHECK(a.soundness_violations == b.soundness_violations);
  CHECK(describe(a) == describe(b));
}

}  // TEST_SUITE
