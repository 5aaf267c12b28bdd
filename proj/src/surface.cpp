#include "monolog/surface.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <istream>
#include <regex>

#include "monolog/errors.hpp"

namespace monolog {

namespace {

bool is_punct(char c) {
  switch (c) {
    case '.': case ',': case ';': case ':': case '!': case '?':
      return true;
    default:
      return false;
  }
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::size_t find_slot(const std::vector<Token>& tokens) {
  if (tokens.empty()) throw TemplateError(TemplateError::Kind::Empty, "empty context template");
  std::size_t slot = tokens.size();
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (!is_variable_token(tokens[i].text)) continue;
    if (slot != tokens.size())
      throw TemplateError(TemplateError::Kind::MultipleVariables,
                          "context has more than one variable: " + render(tokens));
    slot = i;
  }
  if (slot == tokens.size())
    throw TemplateError(TemplateError::Kind::NoVariable, "context has no variable: " + render(tokens));
  return slot;
}

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    bool spaced = false;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      spaced = true;
    }
    if (i == text.size()) break;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    std::string_view chunk = text.substr(i, j - i);
    std::size_t body = chunk.size();
    while (body > 0 && is_punct(chunk[body - 1])) --body;
    const bool glued = !spaced && !out.empty();
    if (body == 0) {
      out.push_back({std::string(chunk), glued});
    } else {
      out.push_back({std::string(chunk.substr(0, body)), glued});
      for (std::size_t k = body; k < chunk.size(); ++k) out.push_back({std::string(1, chunk[k]), true});
    }
    i = j;
  }
  return out;
}

std::string render(std::span<const Token> tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0 && !tokens[i].glued) out.push_back(' ');
    out += tokens[i].text;
  }
  return out;
}

std::string normalized_text(std::span<const Token> tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += lower(tokens[i].text);
  }
  return out;
}

bool is_variable_token(std::string_view token) { return token == "x" || token == "X"; }

// ---------------------------------------------------------------------------
// ContextTemplate

ContextTemplate::ContextTemplate(std::vector<Token> tokens)
    : tokens_(std::move(tokens)), slot_(find_slot(tokens_)), context_(normalized_text(tokens_)) {
  if (!tokens_.empty()) tokens_.front().glued = false;
}

ContextTemplate ContextTemplate::parse(std::string_view text) { return ContextTemplate(tokenize(text)); }

std::string ContextTemplate::text() const { return render(tokens_); }

std::string ContextTemplate::substitute(const ConceptSymbol& concept_symbol) const {
  std::vector<Token> filled = tokens_;
  filled[slot_].text = concept_symbol.name();
  return render(filled);
}

// ---------------------------------------------------------------------------
// ContextRegistry

void ContextRegistry::add(const ContextTemplate& t) { known_.insert_or_assign(t.context(), t); }

void ContextRegistry::add_abstract(const ContextSymbol& id) { known_.try_emplace(id, std::nullopt); }

const ContextTemplate* ContextRegistry::find_template(const ContextSymbol& id) const {
  auto it = known_.find(id);
  if (it == known_.end() || !it->second) return nullptr;
  return &*it->second;
}

ContextRegistry ContextRegistry::read(std::istream& in) {
  ContextRegistry reg;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string trimmed = normalize_name(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    try {
      reg.add(ContextTemplate::parse(line));
    } catch (const TemplateError& e) {
      throw FileFormatError(e.what(), lineno);
    }
  }
  return reg;
}

ContextRegistry ContextRegistry::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  return read(in);
}

// ---------------------------------------------------------------------------
// Sentence syntax

namespace {

struct Item {
  enum class Kind { Word, Quoted, LParen, RParen } kind;
  std::string text;
};

std::vector<Item> lex(std::string_view s) {
  std::vector<Item> items;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '(') {
      items.push_back({Item::Kind::LParen, "("});
      ++i;
    } else if (c == ')') {
      items.push_back({Item::Kind::RParen, ")"});
      ++i;
    } else if (c == '"') {
      std::string text;
      ++i;
      bool closed = false;
      while (i < s.size()) {
        if (s[i] == '\\' && i + 1 < s.size()) {
          text.push_back(s[i + 1]);
          i += 2;
        } else if (s[i] == '"') {
          closed = true;
          ++i;
          break;
        } else {
          text.push_back(s[i++]);
        }
      }
      if (!closed) throw SyntaxError("unterminated quoted string");
      items.push_back({Item::Kind::Quoted, std::move(text)});
    } else {
      std::size_t j = i;
      while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j])) && s[j] != '(' && s[j] != ')' &&
             s[j] != '"')
        ++j;
      items.push_back({Item::Kind::Word, std::string(s.substr(i, j - i))});
      i = j;
    }
  }
  return items;
}

using Items = std::span<const Item>;

constexpr std::array<std::string_view, 8> kKeywords = {"all", "are", "if", "then", "is", "forall", "<->", "monotone"};

bool is_keyword(std::string_view w, std::string_view kw) { return lower(w) == kw; }

bool word_is(const Item& it, std::string_view kw) { return it.kind == Item::Kind::Word && is_keyword(it.text, kw); }

bool is_identifier(std::string_view s) {
  static const std::regex re("[A-Za-z_][A-Za-z0-9_]*");
  return std::regex_match(s.begin(), s.end(), re);
}

class SentenceParser {
 public:
  explicit SentenceParser(const ContextRegistry* registry) : registry_(registry) {}

  Sentence parse(std::string_view text) const {
    const std::vector<Item> all = lex(text);
    const Items items(all);
    if (items.empty()) throw SyntaxError("empty sentence");

    if (auto s = try_monotone_natural(items)) return *s;
    if (word_is(items[0], "forall")) return parse_monotone_symbolic(items);
    if (word_is(items[0], "if")) return parse_conditional(items);
    if (word_is(items[0], "all")) return parse_all(items);
    for (std::size_t i = 0; i < items.size(); ++i)
      if (items[i].kind == Item::Kind::Word && items[i].text.starts_with("[=")) return parse_symbolic(items, i);
    throw SyntaxError("unrecognized sentence: " + std::string(text));
  }

 private:
  ConceptSymbol concept_of(Items items) const {
    if (items.empty()) throw EmptyConcept("empty concept");
    std::string name;
    if (items.size() == 1 && items[0].kind == Item::Kind::Quoted) {
      name = items[0].text;
    } else {
      for (const auto& it : items) {
        if (it.kind != Item::Kind::Word) throw SyntaxError("malformed concept");
        if (!name.empty()) name.push_back(' ');
        name += it.text;
      }
    }
    if (normalize_name(name).empty()) throw EmptyConcept("empty concept");
    ConceptSymbol c(name);
    if (is_variable_token(c.name())) throw SyntaxError("\"x\" is reserved and cannot name a concept");
    return c;
  }

  ContextSymbol context_of(const Item& it) const {
    std::optional<ContextSymbol> sym;
    if (it.kind == Item::Kind::Word && is_identifier(it.text)) {
      sym.emplace(it.text);
    } else if (it.kind == Item::Kind::Quoted) {
      sym.emplace(quoted_context(it.text));
    } else {
      throw SyntaxError("expected a context, got '" + it.text + "'");
    }
    if (registry_ && !registry_->contains(*sym)) throw UnknownContext("unknown context: " + sym->id());
    return *sym;
  }

  static ContextSymbol quoted_context(const std::string& text) {
    const auto tokens = tokenize(text);
    const bool has_var = std::any_of(tokens.begin(), tokens.end(), [](const Token& t) { return is_variable_token(t.text); });
    if (has_var) {
      try {
        return ContextTemplate(tokens).context();
      } catch (const TemplateError& e) {
        throw SyntaxError(e.what());
      }
    }
    return ContextSymbol(text);
  }

  std::optional<Sentence> try_monotone_natural(Items items) const {
    if (items.size() != 4 || !word_is(items[1], "is") || !word_is(items[3], "monotone")) return std::nullopt;
    const bool up = word_is(items[2], "upward");
    if (!up && !word_is(items[2], "downward")) return std::nullopt;
    const ContextSymbol p = context_of(items[0]);
    if (up) return UpwardMonotone{p};
    return DownwardMonotone{p};
  }

  Sentence parse_all(Items items) const {
    std::size_t are = 1;
    while (are < items.size() && !word_is(items[are], "are")) ++are;
    if (are == items.size()) throw SyntaxError("expected 'are' in 'all a are b'");
    return Subsumption{concept_of(items.subspan(1, are - 1)), concept_of(items.subspan(are + 1))};
  }

  // p ( concept ) starting at `at`; returns the index past ')'.
  std::size_t applied(Items items, std::size_t at, std::optional<ContextSymbol>& ctx,
                      std::optional<ConceptSymbol>& arg) const {
    if (at + 1 >= items.size() || items[at + 1].kind != Item::Kind::LParen) throw SyntaxError("expected p(a)");
    ctx = context_of(items[at]);
    std::size_t close = at + 2;
    while (close < items.size() && items[close].kind != Item::Kind::RParen) ++close;
    if (close == items.size()) throw SyntaxError("missing ')'");
    arg = concept_of(items.subspan(at + 2, close - at - 2));
    return close + 1;
  }

  Sentence parse_conditional(Items items) const {
    std::optional<ContextSymbol> p, q;
    std::optional<ConceptSymbol> a, b;
    std::size_t next = applied(items, 1, p, a);
    if (next >= items.size() || !word_is(items[next], "then")) throw SyntaxError("expected 'then'");
    next = applied(items, next + 1, q, b);
    if (next != items.size()) throw SyntaxError("trailing input after conditional");
    if (*p != *q) throw SyntaxError("conditional mixes contexts " + p->id() + " and " + q->id());
    return ContextEntailment{*p, *a, *b};
  }

  // Reads "[=_p" (or "[=_" followed by a quoted context) at items[at].
  // Returns the context and the index of the next item.
  std::pair<ContextSymbol, std::size_t> relation_context(Items items, std::size_t at) const {
    const std::string& w = items[at].text;
    const std::string rest = w.substr(3);
    if (!rest.empty()) return {context_of(Item{Item::Kind::Word, rest}), at + 1};
    if (at + 1 >= items.size()) throw SyntaxError("expected context after '[=_'");
    return {context_of(items[at + 1]), at + 2};
  }

  Sentence parse_symbolic(Items items, std::size_t op) const {
    const std::string& w = items[op].text;
    if (w == "[=") return Subsumption{concept_of(items.first(op)), concept_of(items.subspan(op + 1))};
    if (w.starts_with("[=_")) {
      auto [p, next] = relation_context(items, op);
      return ContextEntailment{p, concept_of(items.first(op)), concept_of(items.subspan(next))};
    }
    throw SyntaxError("unknown relation symbol '" + w + "'");
  }

  Sentence parse_monotone_symbolic(Items items) const {
    // forall x,y ( x [= y <-> x [=_p y )   |   ... <-> y [=_p x )
    std::size_t i = 1;
    std::string vars;
    while (i < items.size() && items[i].kind == Item::Kind::Word) vars += items[i++].text;
    auto expect = [&](bool ok) {
      if (!ok) throw SyntaxError("malformed quantified monotonicity sentence");
    };
    expect(vars == "x,y");
    expect(i < items.size() && items[i].kind == Item::Kind::LParen);
    ++i;
    auto word = [&](std::string_view w) {
      expect(i < items.size() && items[i].kind == Item::Kind::Word && items[i].text == w);
      ++i;
    };
    word("x");
    word("[=");
    word("y");
    word("<->");
    expect(i < items.size() && items[i].kind == Item::Kind::Word);
    const std::string first = items[i++].text;
    expect(first == "x" || first == "y");
    expect(i < items.size() && items[i].kind == Item::Kind::Word && items[i].text.starts_with("[=_"));
    auto [p, next] = relation_context(items, i);
    i = next;
    word(first == "x" ? "y" : "x");
    expect(i + 1 == items.size() && items[i].kind == Item::Kind::RParen);
    if (first == "x") return UpwardMonotone{p};
    return DownwardMonotone{p};
  }

  const ContextRegistry* registry_;
};

std::string quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string format_concept(const ConceptSymbol& c) {
  const std::string& n = c.name();
  bool needs = n.find_first_of("\"()\\") != std::string::npos || n.find("[=") != std::string::npos;
  if (!needs) {
    for (const auto& tok : tokenize(n)) {
      for (auto kw : kKeywords) needs = needs || is_keyword(tok.text, kw);
    }
  }
  return needs ? quote(n) : n;
}

}  // namespace

Sentence parse_sentence(std::string_view text, const ContextRegistry* registry) {
  return SentenceParser(registry).parse(text);
}

std::string format_context(const ContextSymbol& p) { return is_identifier(p.id()) ? p.id() : quote(p.id()); }

std::string format_sentence(const Sentence& s, Style style) {
  struct Visitor {
    Style style;
    std::string operator()(const Subsumption& v) const {
      const auto a = format_concept(v.lhs), b = format_concept(v.rhs);
      return style == Style::Natural ? "all " + a + " are " + b : a + " [= " + b;
    }
    std::string operator()(const ContextEntailment& v) const {
      const auto p = format_context(v.context), a = format_concept(v.lhs), b = format_concept(v.rhs);
      if (style == Style::Natural) return "if " + p + "(" + a + ") then " + p + "(" + b + ")";
      return a + " [=_" + p + " " + b;
    }
    std::string operator()(const UpwardMonotone& v) const {
      const auto p = format_context(v.context);
      return style == Style::Natural ? p + " is upward monotone" : "forall x,y (x [= y <-> x [=_" + p + " y)";
    }
    std::string operator()(const DownwardMonotone& v) const {
      const auto p = format_context(v.context);
      return style == Style::Natural ? p + " is downward monotone" : "forall x,y (x [= y <-> y [=_" + p + " x)";
    }
  };
  return std::visit(Visitor{style}, s);
}

std::vector<Sentence> read_sentences(std::istream& in, const ContextRegistry* registry) {
  std::vector<Sentence> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string trimmed = normalize_name(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    try {
      out.push_back(parse_sentence(line, registry));
    } catch (const SyntaxError& e) {
      throw FileFormatError(e.what(), lineno);
    }
  }
  return out;
}

}  // namespace monolog
