#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <set>
#include <vector>

#include "monolog/sentence.hpp"

namespace monolog {

struct Inventory {
  std::set<ConceptSymbol> concepts;
  std::set<ContextSymbol> contexts;

  void merge(const Inventory& other);
  friend bool operator==(const Inventory&, const Inventory&) = default;
};

Inventory symbols_of(const Sentence& s);

// A finite set of sentences. The symbol inventory is derived from the
// sentences, never stored separately.
class Theory {
 public:
  using const_iterator = std::set<Sentence>::const_iterator;

  Theory() = default;
  Theory(std::initializer_list<Sentence> sentences) : sentences_(sentences) {}
  template <typename Range>
  explicit Theory(const Range& sentences) : sentences_(std::begin(sentences), std::end(sentences)) {}

  bool insert(const Sentence& s) { return sentences_.insert(s).second; }
  bool contains(const Sentence& s) const { return sentences_.count(s) != 0; }
  std::size_t size() const { return sentences_.size(); }
  bool empty() const { return sentences_.empty(); }
  const_iterator begin() const { return sentences_.begin(); }
  const_iterator end() const { return sentences_.end(); }
  const std::set<Sentence>& sentences() const { return sentences_; }

  Inventory inventory() const;

  friend bool operator==(const Theory&, const Theory&) = default;

 private:
  std::set<Sentence> sentences_;
};

// Switches for each inference rule. Everything is on for real use; the
// self-check mutation tests flip individual entries.
struct RuleTable {
  bool barbara = true;
  bool upward = true;
  bool downward = true;
  bool axiom_reflexive = true;   // all a are a
  bool axiom_context = true;     // if p(a) then p(a)
  bool downward_unreversed = false;  // corrupt: the downward rule concludes p(a) -> p(b)
};

// Deductive closure of a theory over its inventory (plus `extra`), computed
// by forward chaining to a fixpoint. Facts are indexed densely so membership
// queries are constant time.
class Closure {
 public:
  explicit Closure(const Theory& gamma, const Inventory& extra = {}, const RuleTable& rules = {});

  // Sentences mentioning a symbol outside the inventory are never members.
  bool contains(const Sentence& s) const;

  // a <= b iff all a are b is derivable.
  bool leq(std::size_t a, std::size_t b) const { return sub_[a * concepts_.size() + b]; }
  bool upward(std::size_t p) const { return up_[p]; }
  bool downward(std::size_t p) const { return down_[p]; }

  const std::vector<ConceptSymbol>& concepts() const { return concepts_; }
  const std::vector<ContextSymbol>& contexts() const { return contexts_; }
  std::optional<std::size_t> concept_index(const ConceptSymbol& c) const;
  std::optional<std::size_t> context_index(const ContextSymbol& p) const;

  Theory theory() const;

 private:
  std::vector<ConceptSymbol> concepts_;
  std::vector<ContextSymbol> contexts_;
  std::vector<bool> sub_;
  std::vector<std::vector<bool>> ctx_;
  std::vector<bool> up_;
  std::vector<bool> down_;
};

Theory closure(const Theory& gamma, const Inventory& extra = {});

// Proof-theoretic entailment: phi is in the closure of gamma, where phi's
// symbols are added to the inventory first.
bool entails(const Theory& gamma, const Sentence& phi);

enum class MonotonicityStatus { UpwardOnly, DownwardOnly, Both, None };

MonotonicityStatus classify_context(const Theory& gamma, const ContextSymbol& p);

// Every sentence over the given inventory (|A|^2 + |A|^2 |P| + 2|P| of them).
std::vector<Sentence> all_sentences(const Inventory& inv);

}  // namespace monolog
