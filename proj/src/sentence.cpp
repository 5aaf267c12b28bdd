#include "monolog/sentence.hpp"

#include <cctype>

#include "monolog/errors.hpp"

namespace monolog {

std::string normalize_name(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (char c : text) {
    const auto uc = static_cast<unsigned char>(c);
    if (std::isspace(uc)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(static_cast<char>(std::tolower(uc)));
  }
  return out;
}

ConceptSymbol::ConceptSymbol(std::string_view name) : name_(normalize_name(name)) {
  if (name_.empty()) throw EmptyConcept("empty concept name");
}

ContextSymbol::ContextSymbol(std::string id) : id_(std::move(id)) {
  if (id_.empty()) throw SyntaxError("empty context id");
}

}  // namespace monolog
