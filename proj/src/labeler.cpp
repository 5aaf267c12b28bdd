#include "monolog/labeler.hpp"

#include <fstream>
#include <istream>

#include "monolog/dataset.hpp"
#include "monolog/errors.hpp"

namespace monolog {

std::string_view to_string(EntailmentLabel l) { return l == EntailmentLabel::Entailment ? "entailment" : "neutral"; }

std::string_view to_string(Monotonicity m) { return m == Monotonicity::Upward ? "upward" : "downward"; }

EntailmentLabel parse_label(std::string_view text) {
  if (text == "entailment") return EntailmentLabel::Entailment;
  if (text == "neutral") return EntailmentLabel::Neutral;
  throw SyntaxError("unknown entailment label '" + std::string(text) + "'");
}

Monotonicity parse_monotonicity(std::string_view text) {
  if (text == "up" || text == "upward" || text == "upward_monotone") return Monotonicity::Upward;
  if (text == "down" || text == "downward" || text == "downward_monotone") return Monotonicity::Downward;
  throw SyntaxError("unknown monotonicity '" + std::string(text) + "'");
}

Annotations read_annotations(std::istream& in) {
  Annotations out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (normalize_name(line).empty() || line.front() == '#') continue;
    const auto tab = line.rfind('\t');
    if (tab == std::string::npos) throw FileFormatError("expected 'template<TAB>up|down'", lineno);
    try {
      const auto t = ContextTemplate::parse(std::string_view(line).substr(0, tab));
      out.insert_or_assign(t.context(), parse_monotonicity(normalize_name(line.substr(tab + 1))));
    } catch (const TemplateError& e) {
      throw FileFormatError(e.what(), lineno);
    } catch (const SyntaxError& e) {
      throw FileFormatError(e.what(), lineno);
    }
  }
  return out;
}

Annotations load_annotations(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  return read_annotations(in);
}

LabeledPair label_pair(std::string_view premise, std::string_view hypothesis, const TaxonomyGraph& g,
                       const Annotations& annotations) {
  if (same_tokens(premise, hypothesis))
    return {EntailmentLabel::Entailment, ConceptRelation::Equivalent, std::nullopt, std::nullopt, std::nullopt};
  Extraction ex = extract_context(premise, hypothesis);
  auto it = annotations.find(ex.context.context());
  if (it == annotations.end()) throw UnannotatedContext("no monotonicity annotation for context: " + ex.context.text());
  const ConceptRelation rel = relate(g, ex.a, ex.b);
  return {label(it->second, rel), rel, std::move(ex.context), std::move(ex.a), std::move(ex.b)};
}

bool consistency_check(const Theory& gamma, const ContextSymbol& p, const ConceptSymbol& a, const ConceptSymbol& b,
                       EntailmentLabel out_label) {
  return (out_label == EntailmentLabel::Entailment) == entails(gamma, ContextEntailment{p, a, b});
}

}  // namespace monolog
