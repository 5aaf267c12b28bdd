#include "monolog/selfcheck.hpp"

#include <algorithm>
#include <sstream>

#include "monolog/surface.hpp"

namespace monolog {

namespace {

ConceptSymbol concept_name(std::size_t i) { return ConceptSymbol("c" + std::to_string(i)); }
ContextSymbol context_name(std::size_t i) { return ContextSymbol("p" + std::to_string(i)); }

// Removes bit i from a subset mask, shifting higher bits down.
Subset drop_bit(Subset s, std::size_t i) {
  const Subset low = s & ((Subset{1} << i) - 1);
  const Subset high = (s >> (i + 1)) << i;
  return low | high;
}

}  // namespace

FiniteModel ModelSpec::build() const {
  std::vector<std::string> elements;
  for (std::size_t i = 0; i < universe; ++i) elements.push_back(std::to_string(i + 1));
  FiniteModel m(elements);
  for (std::size_t i = 0; i < concepts.size(); ++i) m.interpret(concept_name(i), concepts[i]);
  for (std::size_t i = 0; i < kinds.size(); ++i) {
    switch (kinds[i]) {
      case RelationKind::Subset: m.interpret(context_name(i), SubsetRelation::subset(universe)); break;
      case RelationKind::Superset: m.interpret(context_name(i), SubsetRelation::superset(universe)); break;
      case RelationKind::Equality: m.interpret(context_name(i), SubsetRelation::equality(universe)); break;
      case RelationKind::Arbitrary: m.interpret(context_name(i), arbitrary[i]); break;
    }
  }
  return m;
}

std::set<ConceptSymbol> ModelSpec::concept_symbols() const {
  std::set<ConceptSymbol> out;
  for (std::size_t i = 0; i < concepts.size(); ++i) out.insert(concept_name(i));
  return out;
}

std::set<ContextSymbol> ModelSpec::context_symbols() const {
  std::set<ContextSymbol> out;
  for (std::size_t i = 0; i < kinds.size(); ++i) out.insert(context_name(i));
  return out;
}

ModelSpec random_model(Rng& rng, const ModelBounds& bounds) {
  ModelSpec spec;
  spec.universe = uniform_below(rng, bounds.max_universe + 1);
  const Subset full = full_subset(spec.universe);
  const std::size_t n_concepts = 1 + uniform_below(rng, bounds.max_concepts);
  const std::size_t n_contexts = uniform_below(rng, bounds.max_contexts + 1);
  for (std::size_t i = 0; i < n_concepts; ++i) spec.concepts.push_back(rng() & full);
  for (std::size_t i = 0; i < n_contexts; ++i) {
    const auto kind = static_cast<RelationKind>(uniform_below(rng, 4));
    spec.kinds.push_back(kind);
    SubsetRelation rel(spec.universe);
    if (kind == RelationKind::Arbitrary) {
      for (Subset a = 0; a <= full; ++a)
        for (Subset b = 0; b <= full; ++b)
          if (coin(rng) || (bounds.reflexive_arbitrary && a == b)) rel.insert(a, b);
    }
    spec.arbitrary.push_back(rel);
  }
  return spec;
}

Theory random_coherent_theory(Rng& rng, const TheoryBounds& bounds) {
  Theory gamma;
  const std::size_t n = 1 + uniform_below(rng, bounds.max_concepts);
  const std::size_t subs = uniform_below(rng, bounds.max_subsumptions + 1);
  for (std::size_t i = 0; i < subs; ++i)
    gamma.insert(Subsumption{concept_name(uniform_below(rng, n)), concept_name(uniform_below(rng, n))});
  const std::size_t k = uniform_below(rng, bounds.max_contexts + 1);
  for (std::size_t p = 0; p < k; ++p) {
    switch (uniform_below(rng, 3)) {
      case 0: gamma.insert(UpwardMonotone{context_name(p)}); break;
      case 1: gamma.insert(DownwardMonotone{context_name(p)}); break;
      default: break;
    }
  }
  return gamma;
}

std::vector<Sentence> soundness_violations(const ModelSpec& spec, const RuleTable& rules) {
  const FiniteModel m = spec.build();
  const Theory th = theory_of_model(m, spec.concept_symbols(), spec.context_symbols());
  const Theory closed = Closure(th, {}, rules).theory();
  std::vector<Sentence> extra;
  std::set_difference(closed.begin(), closed.end(), th.begin(), th.end(), std::back_inserter(extra));
  // Anything in th but not in the closure would mean the closure lost a premise.
  std::set_difference(th.begin(), th.end(), closed.begin(), closed.end(), std::back_inserter(extra));
  return extra;
}

AgreementFailure agreement_failures(const Theory& gamma, const RuleTable& rules) {
  AgreementFailure out;
  const Inventory inv = gamma.inventory();
  const Closure cl(gamma, inv, rules);
  const FiniteModel canonical = build_canonical_model(gamma);
  for (const auto& phi : all_sentences(inv))
    if (cl.contains(phi) != model_check(canonical, phi)) out.disagreements.push_back(phi);
  out.canonical_fails_gamma = !satisfies(canonical, gamma);
  return out;
}

ModelSpec shrink_soundness(ModelSpec spec, const RuleTable& rules) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < spec.concepts.size() && !changed; ++i) {
      ModelSpec t = spec;
      t.concepts.erase(t.concepts.begin() + static_cast<std::ptrdiff_t>(i));
      if (!soundness_violations(t, rules).empty()) spec = std::move(t), changed = true;
    }
    for (std::size_t i = 0; i < spec.kinds.size() && !changed; ++i) {
      ModelSpec t = spec;
      t.kinds.erase(t.kinds.begin() + static_cast<std::ptrdiff_t>(i));
      t.arbitrary.erase(t.arbitrary.begin() + static_cast<std::ptrdiff_t>(i));
      if (!soundness_violations(t, rules).empty()) spec = std::move(t), changed = true;
    }
    for (std::size_t i = 0; i < spec.kinds.size() && !changed; ++i) {
      if (spec.kinds[i] != RelationKind::Arbitrary) continue;
      for (const auto& [a, b] : spec.arbitrary[i].pairs()) {
        ModelSpec t = spec;
        SubsetRelation fewer(t.universe);
        for (const auto& pair : spec.arbitrary[i].pairs())
          if (pair != std::pair{a, b}) fewer.insert(pair.first, pair.second);
        t.arbitrary[i] = fewer;
        if (!soundness_violations(t, rules).empty()) {
          spec = std::move(t);
          changed = true;
          break;
        }
      }
    }
    for (std::size_t e = 0; e < spec.universe && !changed; ++e) {
      ModelSpec t = spec;
      t.universe = spec.universe - 1;
      for (auto& c : t.concepts) c = drop_bit(c, e);
      for (auto& rel : t.arbitrary) {
        SubsetRelation projected(t.universe);
        for (const auto& [a, b] : rel.pairs()) projected.insert(drop_bit(a, e), drop_bit(b, e));
        rel = projected;
      }
      if (!soundness_violations(t, rules).empty()) spec = std::move(t), changed = true;
    }
  }
  return spec;
}

Theory shrink_agreement(Theory gamma, const RuleTable& rules) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& s : gamma.sentences()) {
      Theory t;
      for (const auto& other : gamma)
        if (!(other == s)) t.insert(other);
      if (agreement_failures(t, rules).any()) {
        gamma = std::move(t);
        changed = true;
        break;
      }
    }
  }
  return gamma;
}

SelfCheckReport run_selfcheck(const SelfCheckOptions& options) {
  SelfCheckReport report;
  Rng rng(options.seed);
  for (std::size_t i = 0; i < options.trials; ++i) {
    const ModelSpec spec = random_model(rng, options.models);
    ++report.soundness_trials;
    if (!soundness_violations(spec, options.rules).empty()) {
      ++report.soundness_violations;
      if (!report.soundness_counterexample) report.soundness_counterexample = shrink_soundness(spec, options.rules);
    }
  }
  for (std::size_t i = 0; i < options.trials; ++i) {
    const Theory gamma = random_coherent_theory(rng, options.theories);
    ++report.agreement_trials;
    if (agreement_failures(gamma, options.rules).any()) {
      ++report.agreement_violations;
      if (!report.agreement_counterexample) report.agreement_counterexample = shrink_agreement(gamma, options.rules);
    }
  }
  return report;
}

std::string describe(const SelfCheckReport& report, const RuleTable& rules) {
  std::ostringstream out;
  out << "soundness: " << report.soundness_trials << " models, " << report.soundness_violations << " violations\n";
  out << "agreement: " << report.agreement_trials << " theories, " << report.agreement_violations
      << " violations\n";
  if (report.soundness_counterexample) {
    const ModelSpec& spec = *report.soundness_counterexample;
    out << "soundness counterexample (model): ";
    std::ostringstream model;
    write_model(model, spec.build(), -1);
    out << model.str();
    out << "derived but false in the model:\n";
    for (const auto& s : soundness_violations(spec, rules)) out << "  " << format_sentence(s, Style::Natural) << '\n';
  }
  if (report.agreement_counterexample) {
    const Theory& gamma = *report.agreement_counterexample;
    const AgreementFailure f = agreement_failures(gamma, rules);
    out << "agreement counterexample (theory):\n";
    for (const auto& s : gamma) out << "  " << format_sentence(s, Style::Natural) << '\n';
    if (f.canonical_fails_gamma) out << "canonical model does not satisfy the theory\n";
    for (const auto& s : f.disagreements) out << "  proof and canonical model disagree on: " << format_sentence(s) << '\n';
  }
  return out.str();
}

}  // namespace monolog
