#include "monolog/logic.hpp"

#include <algorithm>

namespace monolog {

void Inventory::merge(const Inventory& other) {
  concepts.insert(other.concepts.begin(), other.concepts.end());
  contexts.insert(other.contexts.begin(), other.contexts.end());
}

Inventory symbols_of(const Sentence& s) {
  Inventory inv;
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Subsumption>) {
          inv.concepts = {v.lhs, v.rhs};
        } else if constexpr (std::is_same_v<T, ContextEntailment>) {
          inv.concepts = {v.lhs, v.rhs};
          inv.contexts = {v.context};
        } else {
          inv.contexts = {v.context};
        }
      },
      s);
  return inv;
}

Inventory Theory::inventory() const {
  Inventory inv;
  for (const auto& s : sentences_) inv.merge(symbols_of(s));
  return inv;
}

// ---------------------------------------------------------------------------

namespace {

template <typename T>
std::optional<std::size_t> index_in(const std::vector<T>& sorted, const T& value) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), value);
  if (it == sorted.end() || !(*it == value)) return std::nullopt;
  return static_cast<std::size_t>(it - sorted.begin());
}

struct Fact {
  enum class Kind { Sub, Ctx, Up, Down } kind;
  std::size_t p = 0, a = 0, b = 0;
};

}  // namespace

std::optional<std::size_t> Closure::concept_index(const ConceptSymbol& c) const { return index_in(concepts_, c); }

std::optional<std::size_t> Closure::context_index(const ContextSymbol& p) const { return index_in(contexts_, p); }

Closure::Closure(const Theory& gamma, const Inventory& extra, const RuleTable& rules) {
  Inventory inv = gamma.inventory();
  inv.merge(extra);
  concepts_.assign(inv.concepts.begin(), inv.concepts.end());
  contexts_.assign(inv.contexts.begin(), inv.contexts.end());
  const std::size_t n = concepts_.size();
  const std::size_t k = contexts_.size();
  sub_.assign(n * n, false);
  ctx_.assign(k, std::vector<bool>(n * n, false));
  up_.assign(k, false);
  down_.assign(k, false);

  std::vector<Fact> worklist;
  auto add = [&](const Fact& f) {
    std::vector<bool>::reference known = [&]() -> std::vector<bool>::reference {
      switch (f.kind) {
        case Fact::Kind::Sub: return sub_[f.a * n + f.b];
        case Fact::Kind::Ctx: return ctx_[f.p][f.a * n + f.b];
        case Fact::Kind::Up: return up_[f.p];
        case Fact::Kind::Down: break;
      }
      return down_[f.p];
    }();
    if (known) return;
    known = true;
    worklist.push_back(f);
  };

  for (const auto& s : gamma) {
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, Subsumption>) {
            add({Fact::Kind::Sub, 0, *concept_index(v.lhs), *concept_index(v.rhs)});
          } else if constexpr (std::is_same_v<T, ContextEntailment>) {
            add({Fact::Kind::Ctx, *context_index(v.context), *concept_index(v.lhs), *concept_index(v.rhs)});
          } else if constexpr (std::is_same_v<T, UpwardMonotone>) {
            add({Fact::Kind::Up, *context_index(v.context)});
          } else {
            add({Fact::Kind::Down, *context_index(v.context)});
          }
        },
        s);
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (rules.axiom_reflexive) add({Fact::Kind::Sub, 0, a, a});
    if (rules.axiom_context)
      for (std::size_t p = 0; p < k; ++p) add({Fact::Kind::Ctx, p, a, a});
  }

  auto down_conclusion = [&](std::size_t p, std::size_t a, std::size_t b) {
    if (rules.downward_unreversed) return Fact{Fact::Kind::Ctx, p, a, b};
    return Fact{Fact::Kind::Ctx, p, b, a};
  };

  while (!worklist.empty()) {
    const Fact f = worklist.back();
    worklist.pop_back();
    switch (f.kind) {
      case Fact::Kind::Sub:
        if (rules.barbara) {
          for (std::size_t c = 0; c < n; ++c) {
            if (sub_[f.b * n + c]) add({Fact::Kind::Sub, 0, f.a, c});
            if (sub_[c * n + f.a]) add({Fact::Kind::Sub, 0, c, f.b});
          }
        }
        for (std::size_t p = 0; p < k; ++p) {
          if (rules.upward && up_[p]) add({Fact::Kind::Ctx, p, f.a, f.b});
          if (rules.downward && down_[p]) add(down_conclusion(p, f.a, f.b));
        }
        break;
      case Fact::Kind::Up:
        if (!rules.upward) break;
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b)
            if (sub_[a * n + b]) add({Fact::Kind::Ctx, f.p, a, b});
        break;
      case Fact::Kind::Down:
        if (!rules.downward) break;
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b)
            if (sub_[a * n + b]) add(down_conclusion(f.p, a, b));
        break;
      case Fact::Kind::Ctx:
        break;
    }
  }
}

bool Closure::contains(const Sentence& s) const {
  const std::size_t n = concepts_.size();
  return std::visit(
      [&](const auto& v) -> bool {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Subsumption>) {
          auto a = concept_index(v.lhs), b = concept_index(v.rhs);
          return a && b && sub_[*a * n + *b];
        } else if constexpr (std::is_same_v<T, ContextEntailment>) {
          auto p = context_index(v.context);
          auto a = concept_index(v.lhs), b = concept_index(v.rhs);
          return p && a && b && ctx_[*p][*a * n + *b];
        } else if constexpr (std::is_same_v<T, UpwardMonotone>) {
          auto p = context_index(v.context);
          return p && up_[*p];
        } else {
          auto p = context_index(v.context);
          return p && down_[*p];
        }
      },
      s);
}

Theory Closure::theory() const {
  Theory out;
  const std::size_t n = concepts_.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (sub_[a * n + b]) out.insert(Subsumption{concepts_[a], concepts_[b]});
  for (std::size_t p = 0; p < contexts_.size(); ++p) {
    if (up_[p]) out.insert(UpwardMonotone{contexts_[p]});
    if (down_[p]) out.insert(DownwardMonotone{contexts_[p]});
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (ctx_[p][a * n + b]) out.insert(ContextEntailment{contexts_[p], concepts_[a], concepts_[b]});
  }
  return out;
}

Theory closure(const Theory& gamma, const Inventory& extra) { return Closure(gamma, extra).theory(); }

bool entails(const Theory& gamma, const Sentence& phi) { return Closure(gamma, symbols_of(phi)).contains(phi); }

MonotonicityStatus classify_context(const Theory& gamma, const ContextSymbol& p) {
  const Closure cl(gamma, Inventory{{}, {p}});
  const bool up = cl.contains(UpwardMonotone{p});
  const bool down = cl.contains(DownwardMonotone{p});
  if (up && down) return MonotonicityStatus::Both;
  if (up) return MonotonicityStatus::UpwardOnly;
  if (down) return MonotonicityStatus::DownwardOnly;
  return MonotonicityStatus::None;
}

std::vector<Sentence> all_sentences(const Inventory& inv) {
  std::vector<Sentence> out;
  for (const auto& a : inv.concepts)
    for (const auto& b : inv.concepts) out.push_back(Subsumption{a, b});
  for (const auto& p : inv.contexts) {
    for (const auto& a : inv.concepts)
      for (const auto& b : inv.concepts) out.push_back(ContextEntailment{p, a, b});
    out.push_back(UpwardMonotone{p});
    out.push_back(DownwardMonotone{p});
  }
  return out;
}

}  // namespace monolog
