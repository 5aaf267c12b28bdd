#pragma once

#include <bitset>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "monolog/logic.hpp"
#include "monolog/sentence.hpp"

namespace monolog {

// Context relations are stored extensionally over the powerset, so the
// universe is capped: 6 elements give 64 subsets and 4096 pairs.
inline constexpr std::size_t kUniverseCap = 6;

// A subset of the universe as a bitmask over element indices.
using Subset = std::uint64_t;

inline Subset full_subset(std::size_t universe_size) { return (Subset{1} << universe_size) - 1; }

// A binary relation on the powerset of an n-element universe.
class SubsetRelation {
 public:
  explicit SubsetRelation(std::size_t universe_size = 0);

  static SubsetRelation subset(std::size_t universe_size);
  static SubsetRelation superset(std::size_t universe_size);
  static SubsetRelation equality(std::size_t universe_size);

  std::size_t universe_size() const { return n_; }
  bool contains(Subset a, Subset b) const { return bits_[index(a, b)]; }
  void insert(Subset a, Subset b);
  std::size_t pair_count() const { return bits_.count(); }
  std::vector<std::pair<Subset, Subset>> pairs() const;

  friend bool operator==(const SubsetRelation&, const SubsetRelation&) = default;

 private:
  static std::size_t index(Subset a, Subset b) { return static_cast<std::size_t>(a * 64 + b); }

  std::size_t n_;
  std::bitset<4096> bits_;
};

// M = (universe, interpretation). Elements are named; concepts map to
// subsets and contexts to relations on subsets.
class FiniteModel {
 public:
  explicit FiniteModel(std::vector<std::string> universe = {});

  std::size_t size() const { return universe_.size(); }
  const std::vector<std::string>& universe() const { return universe_; }

  // Bitmask of the named elements; throws ModelError::Invalid for unknown ids.
  Subset subset_of(const std::vector<std::string>& ids) const;
  std::vector<std::string> elements_of(Subset s) const;

  void interpret(const ConceptSymbol& a, Subset extension);
  void interpret(const ContextSymbol& p, SubsetRelation relation);

  // Throw ModelError::UninterpretedSymbol when absent.
  Subset extension(const ConceptSymbol& a) const;
  const SubsetRelation& relation(const ContextSymbol& p) const;

  const std::map<ConceptSymbol, Subset>& concepts() const { return concepts_; }
  const std::map<ContextSymbol, SubsetRelation>& contexts() const { return contexts_; }

 private:
  std::vector<std::string> universe_;
  std::map<ConceptSymbol, Subset> concepts_;
  std::map<ContextSymbol, SubsetRelation> contexts_;
};

bool model_check(const FiniteModel& m, const Sentence& phi);
bool satisfies(const FiniteModel& m, const Theory& gamma);

// All sentences over the inventory that are true in m.
Theory theory_of_model(const FiniteModel& m, const std::set<ConceptSymbol>& concepts,
                       const std::set<ContextSymbol>& contexts);

// Canonical model over the concept inventory of gamma (plus `extra`):
// [[a]] is the down-set of a under derivable subsumption, and each context is
// interpreted as subset, superset or equality according to its declared
// monotonicity. An empty concept inventory gets a single fresh element so that
// the subset and superset relations stay distinguishable.
FiniteModel build_canonical_model(const Theory& gamma, const Inventory& extra = {});

// Semantic decision through the canonical model; phi's symbols are added to
// the inventory first.
bool decide_canonical(const Theory& gamma, const Sentence& phi);

// Model file (JSON):
//   {"universe": ["1", "2"],
//    "concepts": {"apples": ["1"], "fruit": ["1", "2"]},
//    "contexts": {"p": "superset", "q": [[["1"], ["1", "2"]], [[], []]]}}
// Contexts take "subset", "superset", "equality" or an explicit pair list.
FiniteModel read_model(std::istream& in);
FiniteModel load_model(const std::string& path);
// indent < 0 writes a single line.
void write_model(std::ostream& out, const FiniteModel& m, int indent = 2);

}  // namespace monolog
