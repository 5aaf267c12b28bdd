#include "monolog/taxonomy.hpp"

#include <deque>
#include <fstream>
#include <istream>
#include <sstream>
#include <vector>

#include "monolog/errors.hpp"

namespace monolog {

std::string_view to_string(ConceptRelation r) {
  switch (r) {
    case ConceptRelation::Equivalent: return "equivalent";
    case ConceptRelation::ForwardContainment: return "forward";
    case ConceptRelation::ReverseContainment: return "reverse";
    case ConceptRelation::Unknown: break;
  }
  return "unknown";
}

ConceptRelation parse_relation(std::string_view text) {
  if (text == "equivalent" || text == "=") return ConceptRelation::Equivalent;
  if (text == "forward" || text == "[=") return ConceptRelation::ForwardContainment;
  if (text == "reverse" || text == "=]") return ConceptRelation::ReverseContainment;
  if (text == "unknown") return ConceptRelation::Unknown;
  throw SyntaxError("unknown concept relation '" + std::string(text) + "'");
}

void TaxonomyGraph::add_edge(const ConceptSymbol& child, const ConceptSymbol& parent) {
  nodes_.insert(child);
  nodes_.insert(parent);
  if (edges_.emplace(child, parent).second) successors_[child].insert(parent);
}

void TaxonomyGraph::add_synonyms(const ConceptSymbol& a, const ConceptSymbol& b) {
  nodes_.insert(a);
  nodes_.insert(b);
  if (synonyms_.insert(a < b ? std::pair{a, b} : std::pair{b, a}).second) {
    successors_[a].insert(b);
    successors_[b].insert(a);
  }
}

bool TaxonomyGraph::reaches(const ConceptSymbol& from, const ConceptSymbol& to) const {
  if (from == to) return true;
  std::set<ConceptSymbol> seen{from};
  std::deque<ConceptSymbol> queue{from};
  while (!queue.empty()) {
    const ConceptSymbol cur = queue.front();
    queue.pop_front();
    auto it = successors_.find(cur);
    if (it == successors_.end()) continue;
    for (const auto& next : it->second) {
      if (next == to) return true;
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return false;
}

TaxonomyGraph TaxonomyGraph::read(std::istream& in) {
  TaxonomyGraph g;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (normalize_name(line).empty() || line.front() == '#') continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, '\t')) fields.push_back(field);
    try {
      if (fields[0] == "syn") {
        if (fields.size() != 3) throw FileFormatError("expected 'syn<TAB>a<TAB>b'", lineno);
        g.add_synonyms(ConceptSymbol(fields[1]), ConceptSymbol(fields[2]));
      } else if (fields.size() == 2) {
        g.add_edge(ConceptSymbol(fields[0]), ConceptSymbol(fields[1]));
      } else {
        throw FileFormatError("expected 'child<TAB>parent' or 'syn<TAB>a<TAB>b'", lineno);
      }
    } catch (const EmptyConcept&) {
      throw FileFormatError("empty concept", lineno);
    }
  }
  return g;
}

TaxonomyGraph TaxonomyGraph::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  return read(in);
}

ConceptRelation relate(const TaxonomyGraph& g, const ConceptSymbol& a, const ConceptSymbol& b) {
  const bool forward = g.reaches(a, b);
  const bool backward = g.reaches(b, a);
  if (forward && backward) return ConceptRelation::Equivalent;
  if (forward) return ConceptRelation::ForwardContainment;
  if (backward) return ConceptRelation::ReverseContainment;
  return ConceptRelation::Unknown;
}

Theory to_theory(const TaxonomyGraph& g) {
  Theory t;
  for (const auto& [child, parent] : g.edges()) t.insert(Subsumption{child, parent});
  for (const auto& [a, b] : g.synonyms()) {
    t.insert(Subsumption{a, b});
    t.insert(Subsumption{b, a});
  }
  return t;
}

}  // namespace monolog
