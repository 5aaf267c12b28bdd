#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "monolog/logic.hpp"
#include "monolog/surface.hpp"
#include "monolog/taxonomy.hpp"

namespace monolog {

enum class EntailmentLabel { Entailment, Neutral };
enum class Monotonicity { Upward, Downward };

std::string_view to_string(EntailmentLabel l);
std::string_view to_string(Monotonicity m);
EntailmentLabel parse_label(std::string_view text);     // "entailment" | "neutral"
Monotonicity parse_monotonicity(std::string_view text);  // "up" | "down" | "upward" | "downward" | "upward_monotone" | ...

// Label for the ordered pair (p(a), p(b)) given mon(p) and rel(a, b).
//
//                 Equivalent   Forward   Reverse   Unknown
//   Upward        E            E         N         N
//   Downward      E            N         E         N
constexpr EntailmentLabel label(Monotonicity mon, ConceptRelation rel) {
  switch (rel) {
    case ConceptRelation::Equivalent:
      return EntailmentLabel::Entailment;
    case ConceptRelation::ForwardContainment:
      return mon == Monotonicity::Upward ? EntailmentLabel::Entailment : EntailmentLabel::Neutral;
    case ConceptRelation::ReverseContainment:
      return mon == Monotonicity::Downward ? EntailmentLabel::Entailment : EntailmentLabel::Neutral;
    case ConceptRelation::Unknown:
      break;
  }
  return EntailmentLabel::Neutral;
}

using Annotations = std::map<ContextSymbol, Monotonicity>;

// "template<TAB>up|down" per line; keys are template ids.
Annotations read_annotations(std::istream& in);
Annotations load_annotations(const std::string& path);

struct LabeledPair {
  EntailmentLabel label;
  ConceptRelation relation;
  // Absent when premise and hypothesis are identical: there is no gap to
  // extract and the pair is labeled by reflexivity alone.
  std::optional<ContextTemplate> context;
  std::optional<ConceptSymbol> a;
  std::optional<ConceptSymbol> b;
};

// Extracts the context and phrases, looks up mon(p) and rel(a, b), and
// applies the label matrix. Throws ExtractionError or UnannotatedContext.
LabeledPair label_pair(std::string_view premise, std::string_view hypothesis, const TaxonomyGraph& g,
                       const Annotations& annotations);

// out_label == Entailment iff gamma derives "if p(a) then p(b)".
bool consistency_check(const Theory& gamma, const ContextSymbol& p, const ConceptSymbol& a, const ConceptSymbol& b,
                       EntailmentLabel out_label);

}  // namespace monolog
