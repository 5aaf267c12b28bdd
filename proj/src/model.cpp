#include "monolog/model.hpp"

#include <algorithm>

#include "monolog/errors.hpp"

namespace monolog {

SubsetRelation::SubsetRelation(std::size_t universe_size) : n_(universe_size) {
  if (n_ > kUniverseCap)
    throw ModelError(ModelError::Kind::UniverseCapExceeded,
                     "universe of " + std::to_string(n_) + " elements exceeds cap of " + std::to_string(kUniverseCap));
}

void SubsetRelation::insert(Subset a, Subset b) {
  const Subset full = full_subset(n_);
  if ((a & ~full) || (b & ~full)) throw ModelError(ModelError::Kind::Invalid, "relation pair outside the universe");
  bits_.set(index(a, b));
}

SubsetRelation SubsetRelation::subset(std::size_t n) {
  SubsetRelation r(n);
  for (Subset a = 0; a <= full_subset(n); ++a)
    for (Subset b = 0; b <= full_subset(n); ++b)
      if ((a & ~b) == 0) r.insert(a, b);
  return r;
}

SubsetRelation SubsetRelation::superset(std::size_t n) {
  SubsetRelation r(n);
  for (Subset a = 0; a <= full_subset(n); ++a)
    for (Subset b = 0; b <= full_subset(n); ++b)
      if ((b & ~a) == 0) r.insert(a, b);
  return r;
}

SubsetRelation SubsetRelation::equality(std::size_t n) {
  SubsetRelation r(n);
  for (Subset a = 0; a <= full_subset(n); ++a) r.insert(a, a);
  return r;
}

std::vector<std::pair<Subset, Subset>> SubsetRelation::pairs() const {
  std::vector<std::pair<Subset, Subset>> out;
  for (Subset a = 0; a <= full_subset(n_); ++a)
    for (Subset b = 0; b <= full_subset(n_); ++b)
      if (contains(a, b)) out.emplace_back(a, b);
  return out;
}

// ---------------------------------------------------------------------------

FiniteModel::FiniteModel(std::vector<std::string> universe) : universe_(std::move(universe)) {
  if (universe_.size() > kUniverseCap)
    throw ModelError(ModelError::Kind::UniverseCapExceeded, "universe of " + std::to_string(universe_.size()) +
                                                                " elements exceeds cap of " +
                                                                std::to_string(kUniverseCap));
  auto sorted = universe_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw ModelError(ModelError::Kind::Invalid, "duplicate universe element");
}

Subset FiniteModel::subset_of(const std::vector<std::string>& ids) const {
  Subset s = 0;
  for (const auto& id : ids) {
    auto it = std::find(universe_.begin(), universe_.end(), id);
    if (it == universe_.end()) throw ModelError(ModelError::Kind::Invalid, "unknown universe element '" + id + "'");
    s |= Subset{1} << (it - universe_.begin());
  }
  return s;
}

std::vector<std::string> FiniteModel::elements_of(Subset s) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < universe_.size(); ++i)
    if (s & (Subset{1} << i)) out.push_back(universe_[i]);
  return out;
}

void FiniteModel::interpret(const ConceptSymbol& a, Subset extension) {
  if (extension & ~full_subset(size()))
    throw ModelError(ModelError::Kind::Invalid, "extension of '" + a.name() + "' is not a subset of the universe");
  concepts_.insert_or_assign(a, extension);
}

void FiniteModel::interpret(const ContextSymbol& p, SubsetRelation relation) {
  if (relation.universe_size() != size())
    throw ModelError(ModelError::Kind::Invalid, "relation for '" + p.id() + "' is over a different universe");
  contexts_.insert_or_assign(p, std::move(relation));
}

Subset FiniteModel::extension(const ConceptSymbol& a) const {
  auto it = concepts_.find(a);
  if (it == concepts_.end())
    throw ModelError(ModelError::Kind::UninterpretedSymbol, "uninterpreted concept '" + a.name() + "'");
  return it->second;
}

const SubsetRelation& FiniteModel::relation(const ContextSymbol& p) const {
  auto it = contexts_.find(p);
  if (it == contexts_.end())
    throw ModelError(ModelError::Kind::UninterpretedSymbol, "uninterpreted context '" + p.id() + "'");
  return it->second;
}

// ---------------------------------------------------------------------------

bool model_check(const FiniteModel& m, const Sentence& phi) {
  return std::visit(
      [&](const auto& v) -> bool {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Subsumption>) {
          return (m.extension(v.lhs) & ~m.extension(v.rhs)) == 0;
        } else if constexpr (std::is_same_v<T, ContextEntailment>) {
          return m.relation(v.context).contains(m.extension(v.lhs), m.extension(v.rhs));
        } else if constexpr (std::is_same_v<T, UpwardMonotone>) {
          return m.relation(v.context) == SubsetRelation::subset(m.size());
        } else {
          return m.relation(v.context) == SubsetRelation::superset(m.size());
        }
      },
      phi);
}

bool satisfies(const FiniteModel& m, const Theory& gamma) {
  return std::all_of(gamma.begin(), gamma.end(), [&](const Sentence& s) { return model_check(m, s); });
}

Theory theory_of_model(const FiniteModel& m, const std::set<ConceptSymbol>& concepts,
                       const std::set<ContextSymbol>& contexts) {
  Theory out;
  for (const auto& s : all_sentences(Inventory{concepts, contexts}))
    if (model_check(m, s)) out.insert(s);
  return out;
}

FiniteModel build_canonical_model(const Theory& gamma, const Inventory& extra) {
  Inventory inv = gamma.inventory();
  inv.merge(extra);
  if (inv.concepts.size() > kUniverseCap)
    throw ModelError(ModelError::Kind::UniverseCapExceeded,
                     "canonical model needs " + std::to_string(inv.concepts.size()) + " elements; cap is " +
                         std::to_string(kUniverseCap));
  const Closure cl(gamma, inv);

  std::vector<std::string> universe;
  for (const auto& c : cl.concepts()) universe.push_back(c.name());
  if (universe.empty()) universe.push_back("*");
  FiniteModel m(universe);

  const std::size_t n = cl.concepts().size();
  for (std::size_t a = 0; a < n; ++a) {
    Subset down_set = 0;
    for (std::size_t b = 0; b < n; ++b)
      if (cl.leq(b, a)) down_set |= Subset{1} << b;
    m.interpret(cl.concepts()[a], down_set);
  }
  for (std::size_t p = 0; p < cl.contexts().size(); ++p) {
    const bool up = cl.upward(p), down = cl.downward(p);
    if (up && !down) {
      m.interpret(cl.contexts()[p], SubsetRelation::subset(m.size()));
    } else if (down && !up) {
      m.interpret(cl.contexts()[p], SubsetRelation::superset(m.size()));
    } else {
      m.interpret(cl.contexts()[p], SubsetRelation::equality(m.size()));
    }
  }
  return m;
}

bool decide_canonical(const Theory& gamma, const Sentence& phi) {
  return model_check(build_canonical_model(gamma, symbols_of(phi)), phi);
}

}  // namespace monolog
