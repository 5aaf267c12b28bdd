#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "monolog/logic.hpp"
#include "monolog/model.hpp"
#include "monolog/random.hpp"

namespace monolog {

enum class RelationKind { Subset, Superset, Equality, Arbitrary };

// Generator recipe for a random finite model. Kept separate from FiniteModel
// so counterexamples can be shrunk structurally.
struct ModelSpec {
  std::size_t universe = 0;
  std::vector<Subset> concepts;            // named c0, c1, ...
  std::vector<RelationKind> kinds;         // contexts named p0, p1, ...
  std::vector<SubsetRelation> arbitrary;   // used where kinds[i] == Arbitrary

  FiniteModel build() const;
  std::set<ConceptSymbol> concept_symbols() const;
  std::set<ContextSymbol> context_symbols() const;
};

struct ModelBounds {
  std::size_t max_universe = 4;
  std::size_t max_concepts = 3;
  std::size_t max_contexts = 2;
  // Restrict Arbitrary relations to reflexive ones (pairs (s, s) always
  // present), the class on which if p(a) then p(a) is valid.
  bool reflexive_arbitrary = false;
};

ModelSpec random_model(Rng& rng, const ModelBounds& bounds);

struct TheoryBounds {
  std::size_t max_concepts = 4;
  std::size_t max_contexts = 2;
  std::size_t max_subsumptions = 6;
};

// Only subsumptions and at most one monotonicity declaration per context;
// no context-entailment premises.
Theory random_coherent_theory(Rng& rng, const TheoryBounds& bounds);

// closure(Th(m)) == Th(m); on failure, the sentences the closure adds.
std::vector<Sentence> soundness_violations(const ModelSpec& spec, const RuleTable& rules = {});

// Queries over gamma's inventory where entails and decide_canonical differ,
// plus a flag for when the canonical model does not satisfy gamma itself.
struct AgreementFailure {
  std::vector<Sentence> disagreements;
  bool canonical_fails_gamma = false;
  bool any() const { return canonical_fails_gamma || !disagreements.empty(); }
};
AgreementFailure agreement_failures(const Theory& gamma, const RuleTable& rules = {});

ModelSpec shrink_soundness(ModelSpec spec, const RuleTable& rules = {});
Theory shrink_agreement(Theory gamma, const RuleTable& rules = {});

struct SelfCheckOptions {
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  ModelBounds models;
  TheoryBounds theories;
  RuleTable rules;
};

struct SelfCheckReport {
  std::size_t soundness_trials = 0;
  std::size_t soundness_violations = 0;
  std::size_t agreement_trials = 0;
  std::size_t agreement_violations = 0;
  std::optional<ModelSpec> soundness_counterexample;   // shrunk
  std::optional<Theory> agreement_counterexample;      // shrunk

  bool ok() const { return soundness_violations == 0 && agreement_violations == 0; }
};

SelfCheckReport run_selfcheck(const SelfCheckOptions& options);

// Human-readable summary including counterexamples.
std::string describe(const SelfCheckReport& report, const RuleTable& rules = {});

}  // namespace monolog
