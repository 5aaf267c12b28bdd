#pragma once

#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "monolog/logic.hpp"
#include "monolog/sentence.hpp"

namespace monolog {

enum class ConceptRelation { Equivalent, ForwardContainment, ReverseContainment, Unknown };

std::string_view to_string(ConceptRelation r);
ConceptRelation parse_relation(std::string_view text);

// Hyponym -> hypernym edges plus synonym pairs.
class TaxonomyGraph {
 public:
  void add_node(const ConceptSymbol& a) { nodes_.insert(a); }
  void add_edge(const ConceptSymbol& child, const ConceptSymbol& parent);
  void add_synonyms(const ConceptSymbol& a, const ConceptSymbol& b);

  const std::set<ConceptSymbol>& nodes() const { return nodes_; }
  const std::set<std::pair<ConceptSymbol, ConceptSymbol>>& edges() const { return edges_; }
  // Stored with the smaller symbol first.
  const std::set<std::pair<ConceptSymbol, ConceptSymbol>>& synonyms() const { return synonyms_; }

  // Reflexive-transitive reachability over edges, with synonyms traversable
  // in both directions.
  bool reaches(const ConceptSymbol& from, const ConceptSymbol& to) const;

  // Lines "child<TAB>parent" or "syn<TAB>a<TAB>b"; '#' lines and blank lines
  // are skipped.
  static TaxonomyGraph read(std::istream& in);
  static TaxonomyGraph load(const std::string& path);

 private:
  std::set<ConceptSymbol> nodes_;
  std::set<std::pair<ConceptSymbol, ConceptSymbol>> edges_;
  std::set<std::pair<ConceptSymbol, ConceptSymbol>> synonyms_;
  std::map<ConceptSymbol, std::set<ConceptSymbol>> successors_;
};

inline TaxonomyGraph load_taxonomy(const std::string& path) { return TaxonomyGraph::load(path); }

ConceptRelation relate(const TaxonomyGraph& g, const ConceptSymbol& a, const ConceptSymbol& b);

// Each edge becomes "all child are parent"; each synonym pair becomes two
// subsumptions.
Theory to_theory(const TaxonomyGraph& g);

}  // namespace monolog
