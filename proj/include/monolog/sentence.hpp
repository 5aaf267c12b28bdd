#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <variant>

namespace monolog {

// Lowercase, trim, and collapse internal whitespace runs to one space.
std::string normalize_name(std::string_view text);

// A concept (constant symbol). The name is always in normalized form and
// never empty; multi-word names are allowed.
class ConceptSymbol {
 public:
  explicit ConceptSymbol(std::string_view name);

  const std::string& name() const { return name_; }

  friend bool operator==(const ConceptSymbol&, const ConceptSymbol&) = default;
  friend auto operator<=>(const ConceptSymbol&, const ConceptSymbol&) = default;

 private:
  std::string name_;
};

// A context (the index of a relation symbol). Either an abstract identifier
// such as "p1" or the normalized token string of a ContextTemplate.
class ContextSymbol {
 public:
  explicit ContextSymbol(std::string id);

  const std::string& id() const { return id_; }

  friend bool operator==(const ContextSymbol&, const ContextSymbol&) = default;
  friend auto operator<=>(const ContextSymbol&, const ContextSymbol&) = default;

 private:
  std::string id_;
};

// all a are b
struct Subsumption {
  ConceptSymbol lhs;
  ConceptSymbol rhs;
  friend bool operator==(const Subsumption&, const Subsumption&) = default;
  friend auto operator<=>(const Subsumption&, const Subsumption&) = default;
};

// if p(a) then p(b)
struct ContextEntailment {
  ContextSymbol context;
  ConceptSymbol lhs;
  ConceptSymbol rhs;
  friend bool operator==(const ContextEntailment&, const ContextEntailment&) = default;
  friend auto operator<=>(const ContextEntailment&, const ContextEntailment&) = default;
};

// p is upward monotone
struct UpwardMonotone {
  ContextSymbol context;
  friend bool operator==(const UpwardMonotone&, const UpwardMonotone&) = default;
  friend auto operator<=>(const UpwardMonotone&, const UpwardMonotone&) = default;
};

// p is downward monotone
struct DownwardMonotone {
  ContextSymbol context;
  friend bool operator==(const DownwardMonotone&, const DownwardMonotone&) = default;
  friend auto operator<=>(const DownwardMonotone&, const DownwardMonotone&) = default;
};

// The four sentence forms of the language. There are no others.
using Sentence = std::variant<Subsumption, ContextEntailment, UpwardMonotone, DownwardMonotone>;

enum class Style { Natural, Symbolic };

}  // namespace monolog
