#pragma once

#include <string_view>

#include "monolog/logic.hpp"
#include "monolog/surface.hpp"

namespace monolog::test {

inline Sentence S(std::string_view text) { return parse_sentence(text); }

inline ConceptSymbol C(std::string_view name) { return ConceptSymbol(name); }

inline ContextSymbol P(std::string_view id) { return ContextSymbol(std::string(id)); }

inline Theory T(std::initializer_list<std::string_view> lines) {
  Theory t;
  for (auto l : lines) t.insert(S(l));
  return t;
}

}  // namespace monolog::test
