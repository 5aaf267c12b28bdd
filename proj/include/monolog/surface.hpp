#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "monolog/sentence.hpp"

namespace monolog {

// A surface token. `glued` is true when no whitespace separated it from the
// previous token in the source text, so rendering reproduces the original
// spacing ("today." stays "today.", "today ." stays "today .").
struct Token {
  std::string text;
  bool glued = false;
  friend bool operator==(const Token&, const Token&) = default;
};

// Whitespace split, then trailing punctuation ([.,;:!?]) is detached from
// each chunk as its own glued token. A chunk made only of punctuation stays
// whole.
std::vector<Token> tokenize(std::string_view text);

std::string render(std::span<const Token> tokens);

// Lowercased token texts joined by single spaces.
std::string normalized_text(std::span<const Token> tokens);

inline constexpr std::string_view kVariableToken = "x";

bool is_variable_token(std::string_view token);

// A natural-language sentence with exactly one gap marked by the token "x".
class ContextTemplate {
 public:
  static ContextTemplate parse(std::string_view text);

  // Builds a template from tokens, validating the single-slot invariant.
  explicit ContextTemplate(std::vector<Token> tokens);

  const ContextSymbol& context() const { return context_; }
  const std::vector<Token>& tokens() const { return tokens_; }
  std::size_t slot() const { return slot_; }

  // The template rendered with its original spacing, e.g. "There were no x today."
  std::string text() const;

  // p(a): the slot replaced by the concept name, everything else unchanged.
  std::string substitute(const ConceptSymbol& concept_symbol) const;

  friend bool operator==(const ContextTemplate& a, const ContextTemplate& b) { return a.tokens_ == b.tokens_; }

 private:
  std::vector<Token> tokens_;
  std::size_t slot_ = 0;
  ContextSymbol context_;
};

inline ContextTemplate parse_context(std::string_view text) { return ContextTemplate::parse(text); }

inline std::string substitute(const ContextTemplate& t, const ConceptSymbol& a) { return t.substitute(a); }

// Known contexts, keyed by context id. Templates and abstract identifiers
// ("p", "p1") can both be registered.
class ContextRegistry {
 public:
  void add(const ContextTemplate& t);
  void add_abstract(const ContextSymbol& id);

  bool contains(const ContextSymbol& id) const { return known_.count(id) != 0; }
  const ContextTemplate* find_template(const ContextSymbol& id) const;
  std::size_t size() const { return known_.size(); }

  // One template per line; blank lines and '#' comments are skipped.
  static ContextRegistry read(std::istream& in);
  static ContextRegistry load(const std::string& path);

 private:
  std::map<ContextSymbol, std::optional<ContextTemplate>> known_;
};

// Accepts both stylizations:
//   all a are b                  a [= b
//   if p(a) then p(b)            a [=_p b
//   p is upward monotone         forall x,y (x [= y <-> x [=_p y)
//   p is downward monotone       forall x,y (x [= y <-> y [=_p x)
// Contexts are bare identifiers or double-quoted strings; a quoted string
// containing the variable token is read as a context template. Concepts may
// be double-quoted when they contain keywords. With a registry, every
// context must be registered in it.
Sentence parse_sentence(std::string_view text, const ContextRegistry* registry = nullptr);

std::string format_sentence(const Sentence& s, Style style = Style::Natural);

std::string format_context(const ContextSymbol& p);

// Theory file: one sentence per line, '#' comments, blank lines ignored.
// Parse failures are reported as FileFormatError with the line number.
std::vector<Sentence> read_sentences(std::istream& in, const ContextRegistry* registry = nullptr);

}  // namespace monolog
