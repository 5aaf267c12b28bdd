#include "monolog/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <set>

#include <json.hpp>

#include "monolog/errors.hpp"
#include "monolog/random.hpp"

namespace monolog {

std::string_view to_string(HelpMonotonicity m) {
  switch (m) {
    case HelpMonotonicity::Upward: return "upward_monotone";
    case HelpMonotonicity::Downward: return "downward_monotone";
    case HelpMonotonicity::NonMonotone: break;
  }
  return "non_monotone";
}

HelpMonotonicity parse_help_monotonicity(std::string_view text) {
  if (text == "upward_monotone") return HelpMonotonicity::Upward;
  if (text == "downward_monotone") return HelpMonotonicity::Downward;
  if (text == "non_monotone") return HelpMonotonicity::NonMonotone;
  throw SyntaxError("unknown monotonicity '" + std::string(text) + "'");
}

std::string_view to_string(Partition p) {
  switch (p) {
    case Partition::Train: return "train";
    case Partition::Dev: return "dev";
    case Partition::Test: break;
  }
  return "test";
}

std::string_view to_string(RelabelStatus s) {
  switch (s) {
    case RelabelStatus::Ok: return "ok";
    case RelabelStatus::UnknownRelation: return "unknown-relation";
    case RelabelStatus::ExtractionFailed: return "extraction-failed";
    case RelabelStatus::NonMonotone: break;
  }
  return "non-monotone";
}

// ---------------------------------------------------------------------------
// Extraction

namespace {

bool same_text(const Token& a, const Token& b) { return a.text == b.text; }

std::string reason_of(const ExtractionError& e) {
  switch (e.kind()) {
    case ExtractionError::Kind::IdenticalSentences: return "identical-sentences";
    case ExtractionError::Kind::EmptySpan: return "empty-span";
    case ExtractionError::Kind::NoContext: return "no-context";
    case ExtractionError::Kind::ReservedToken: break;
  }
  return "reserved-token";
}

ConceptSymbol span_concept(std::span<const Token> span) {
  std::vector<Token> copy(span.begin(), span.end());
  copy.front().glued = false;
  ConceptSymbol c(render(copy));
  if (is_variable_token(c.name()))
    throw ExtractionError(ExtractionError::Kind::ReservedToken, "differing phrase is the reserved token \"x\"");
  return c;
}

}  // namespace

bool same_tokens(std::string_view x, std::string_view y) {
  const auto a = tokenize(x), b = tokenize(y);
  return std::equal(a.begin(), a.end(), b.begin(), b.end(), same_text);
}

Extraction extract_context(std::string_view premise, std::string_view hypothesis) {
  const std::vector<Token> tp = tokenize(premise);
  const std::vector<Token> th = tokenize(hypothesis);
  if (std::equal(tp.begin(), tp.end(), th.begin(), th.end(), same_text))
    throw ExtractionError(ExtractionError::Kind::IdenticalSentences, "premise and hypothesis are identical");

  const std::size_t shorter = std::min(tp.size(), th.size());
  std::size_t prefix = 0;
  while (prefix < shorter && same_text(tp[prefix], th[prefix])) ++prefix;
  std::size_t suffix = 0;
  while (suffix < shorter - prefix && same_text(tp[tp.size() - 1 - suffix], th[th.size() - 1 - suffix])) ++suffix;
  if (prefix + suffix == 0)
    throw ExtractionError(ExtractionError::Kind::NoContext, "premise and hypothesis share no tokens");

  if (prefix + suffix == shorter) {
    // One side is the other with a phrase inserted; its span would be empty.
    if (prefix > 0) {
      --prefix;
    } else {
      --suffix;
    }
  }
  if (prefix + suffix >= shorter)
    throw ExtractionError(ExtractionError::Kind::EmptySpan, "a differing span is empty");

  std::vector<Token> tokens(tp.begin(), tp.begin() + static_cast<std::ptrdiff_t>(prefix));
  tokens.push_back({std::string(kVariableToken), tp[prefix].glued});
  tokens.insert(tokens.end(), tp.end() - static_cast<std::ptrdiff_t>(suffix), tp.end());
  const std::size_t vars =
      std::count_if(tokens.begin(), tokens.end(), [](const Token& t) { return is_variable_token(t.text); });
  if (vars != 1)
    throw ExtractionError(ExtractionError::Kind::ReservedToken, "shared tokens contain the reserved token \"x\"");

  const std::span<const Token> pspan(tp);
  const std::span<const Token> hspan(th);
  return Extraction{ContextTemplate(std::move(tokens)),
                    span_concept(pspan.subspan(prefix, tp.size() - prefix - suffix)),
                    span_concept(hspan.subspan(prefix, th.size() - prefix - suffix))};
}

// ---------------------------------------------------------------------------
// HELP -> HELP-Contexts

Conversion convert_help(std::span<const HelpRecord> records) {
  Conversion out;
  std::map<ContextSymbol, std::size_t> seen;  // id -> index in out.contexts
  for (const auto& r : records) {
    if (r.monotonicity == HelpMonotonicity::NonMonotone) {
      out.rejects.push_back({r.id, "non-monotone", ""});
      continue;
    }
    const Monotonicity mon = r.monotonicity == HelpMonotonicity::Upward ? Monotonicity::Upward : Monotonicity::Downward;
    try {
      const Extraction ex = extract_context(r.premise, r.hypothesis);
      auto [it, inserted] = seen.try_emplace(ex.context.context(), out.contexts.size());
      if (inserted) {
        out.contexts.push_back({ex.context.text(), mon});
      } else if (out.contexts[it->second].monotonicity != mon) {
        out.rejects.push_back({r.id, "conflicting-monotonicity",
                               ex.context.text() + " is already labeled " +
                                   std::string(to_string(out.contexts[it->second].monotonicity))});
      }
    } catch (const ExtractionError& e) {
      out.rejects.push_back({r.id, reason_of(e), e.what()});
    } catch (const EmptyConcept& e) {
      out.rejects.push_back({r.id, "empty-span", e.what()});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Splitting

SplitRatio SplitRatio::parse(std::string_view text) {
  unsigned parts[3];
  std::size_t pos = 0;
  for (int i = 0; i < 3; ++i) {
    const std::size_t end = i < 2 ? text.find(':', pos) : text.size();
    if (end == std::string_view::npos) throw SyntaxError("ratio must look like 50:20:30");
    const auto field = text.substr(pos, end - pos);
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), parts[i]);
    if (ec != std::errc() || ptr != field.data() + field.size()) throw SyntaxError("ratio must look like 50:20:30");
    pos = end + 1;
  }
  if (parts[0] + parts[1] + parts[2] == 0) throw SyntaxError("ratio must not be all zero");
  return {parts[0], parts[1], parts[2]};
}

SplitAssignment::SplitAssignment(std::vector<Entry> entries) : entries_(std::move(entries)) {
  for (const auto& e : entries_) index_.insert_or_assign(e.id, e.partition);
}

std::optional<Partition> SplitAssignment::partition_of(const ContextSymbol& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t SplitAssignment::count(Partition p) const {
  return std::count_if(entries_.begin(), entries_.end(), [&](const Entry& e) { return e.partition == p; });
}

std::array<std::size_t, 3> partition_sizes(std::size_t n, const SplitRatio& ratio) {
  const std::array<std::uint64_t, 3> weight = {ratio.train, ratio.dev, ratio.test};
  const std::uint64_t total = weight[0] + weight[1] + weight[2];
  std::array<std::size_t, 3> size{};
  std::array<std::uint64_t, 3> remainder{};
  std::size_t assigned = 0;
  for (int i = 0; i < 3; ++i) {
    size[i] = static_cast<std::size_t>(n * weight[i] / total);
    remainder[i] = n * weight[i] % total;
    assigned += size[i];
  }
  std::array<int, 3> order = {0, 1, 2};
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (remainder[a] != remainder[b]) return remainder[a] > remainder[b];
    return weight[a] > weight[b];
  });
  for (std::size_t k = 0; assigned < n; ++k, ++assigned) ++size[order[k % 3]];
  return size;
}

SplitAssignment split_contexts(std::span<const ContextRecord> contexts, std::uint64_t seed, const SplitRatio& ratio) {
  std::map<ContextSymbol, std::string> unique;
  for (const auto& c : contexts) unique.try_emplace(ContextTemplate::parse(c.context).context(), c.context);
  std::vector<std::pair<ContextSymbol, std::string>> order(unique.begin(), unique.end());

  Rng rng(seed);
  for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[uniform_below(rng, i)]);

  const auto sizes = partition_sizes(order.size(), ratio);
  std::vector<SplitAssignment::Entry> entries;
  entries.reserve(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Partition p = i < sizes[0] ? Partition::Train : i < sizes[0] + sizes[1] ? Partition::Dev : Partition::Test;
    entries.push_back({order[i].first, order[i].second, p});
  }
  return SplitAssignment(std::move(entries));
}

NliSplit split_nli(std::span<const HelpRecord> records, const SplitAssignment& assignment) {
  NliSplit out;
  for (const auto& r : records) {
    if (r.monotonicity == HelpMonotonicity::NonMonotone) {
      out.rejects.push_back({r.id, "non-monotone", ""});
      continue;
    }
    std::optional<ContextSymbol> id;
    try {
      id = extract_context(r.premise, r.hypothesis).context.context();
    } catch (const ExtractionError& e) {
      out.rejects.push_back({r.id, reason_of(e), e.what()});
      continue;
    } catch (const EmptyConcept& e) {
      out.rejects.push_back({r.id, "empty-span", e.what()});
      continue;
    }
    const auto part = assignment.partition_of(*id);
    if (!part) {
      out.rejects.push_back({r.id, "unassigned-context", id->id()});
      continue;
    }
    switch (*part) {
      case Partition::Train: out.train.push_back(r); break;
      case Partition::Dev: out.dev.push_back(r); break;
      case Partition::Test: out.test.push_back(r); break;
    }
  }
  return out;
}

std::vector<Relabeled> relabel_with_oracle(std::span<const HelpRecord> records, const TaxonomyGraph& g) {
  std::vector<Relabeled> out;
  out.reserve(records.size());
  for (const auto& r : records) {
    Relabeled row{r, EntailmentLabel::Neutral, false, RelabelStatus::Ok};
    if (r.monotonicity == HelpMonotonicity::NonMonotone) {
      row.status = RelabelStatus::NonMonotone;
    } else {
      const Monotonicity mon =
          r.monotonicity == HelpMonotonicity::Upward ? Monotonicity::Upward : Monotonicity::Downward;
      try {
        Annotations annotations;
        if (!same_tokens(r.premise, r.hypothesis))
          annotations.emplace(extract_context(r.premise, r.hypothesis).context.context(), mon);
        const LabeledPair lp = label_pair(r.premise, r.hypothesis, g, annotations);
        row.label = lp.label;
        if (lp.relation == ConceptRelation::Unknown) row.status = RelabelStatus::UnknownRelation;
      } catch (const ExtractionError&) {
        row.status = RelabelStatus::ExtractionFailed;
      } catch (const EmptyConcept&) {
        row.status = RelabelStatus::ExtractionFailed;
      }
    }
    row.agreement = row.label == r.gold_label;
    out.push_back(std::move(row));
  }
  return out;
}

// ---------------------------------------------------------------------------
// JSONL

namespace {

using nlohmann::json;

std::string required_string(const json& j, const char* field, std::size_t lineno) {
  if (!j.contains(field) || !j[field].is_string())
    throw FileFormatError(std::string("missing string field '") + field + "'", lineno);
  return j[field].get<std::string>();
}

template <typename F>
void for_each_json_line(std::istream& in, F&& f) {
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (normalize_name(line).empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw FileFormatError(std::string("invalid JSON: ") + e.what(), lineno);
    }
    if (!j.is_object()) throw FileFormatError("expected a JSON object", lineno);
    try {
      f(j, lineno);
    } catch (const FileFormatError&) {
      throw;
    } catch (const SyntaxError& e) {
      throw FileFormatError(e.what(), lineno);
    } catch (const TemplateError& e) {
      throw FileFormatError(e.what(), lineno);
    }
  }
}

}  // namespace

std::vector<HelpRecord> read_help_records(std::istream& in) {
  std::vector<HelpRecord> out;
  for_each_json_line(in, [&](const json& j, std::size_t lineno) {
    HelpRecord r;
    r.id = required_string(j, "id", lineno);
    r.premise = required_string(j, "premise", lineno);
    r.hypothesis = required_string(j, "hypothesis", lineno);
    if (normalize_name(r.premise).empty() || normalize_name(r.hypothesis).empty())
      throw FileFormatError("premise and hypothesis must be non-empty", lineno);
    r.gold_label = parse_label(required_string(j, "gold_label", lineno));
    r.monotonicity = parse_help_monotonicity(required_string(j, "monotonicity", lineno));
    out.push_back(std::move(r));
  });
  return out;
}

void write_help_records(std::ostream& out, std::span<const HelpRecord> records) {
  for (const auto& r : records) {
    json j = {{"id", r.id},
              {"premise", r.premise},
              {"hypothesis", r.hypothesis},
              {"gold_label", to_string(r.gold_label)},
              {"monotonicity", to_string(r.monotonicity)}};
    out << j.dump() << '\n';
  }
}

std::vector<ContextRecord> read_context_records(std::istream& in) {
  std::vector<ContextRecord> out;
  for_each_json_line(in, [&](const json& j, std::size_t lineno) {
    ContextRecord r;
    r.context = required_string(j, "context", lineno);
    ContextTemplate::parse(r.context);
    const auto mon = parse_help_monotonicity(required_string(j, "monotonicity", lineno));
    if (mon == HelpMonotonicity::NonMonotone) throw FileFormatError("contexts must be upward or downward", lineno);
    r.monotonicity = mon == HelpMonotonicity::Upward ? Monotonicity::Upward : Monotonicity::Downward;
    out.push_back(std::move(r));
  });
  return out;
}

void write_context_records(std::ostream& out, std::span<const ContextRecord> records) {
  for (const auto& r : records) {
    json j = {{"context", r.context},
              {"monotonicity", r.monotonicity == Monotonicity::Upward ? "upward_monotone" : "downward_monotone"}};
    out << j.dump() << '\n';
  }
}

void write_rejects(std::ostream& out, std::span<const Reject> rejects) {
  for (const auto& r : rejects) out << json{{"id", r.id}, {"reason", r.reason}, {"detail", r.detail}}.dump() << '\n';
}

void write_assignment(std::ostream& out, const SplitAssignment& assignment) {
  for (const auto& e : assignment.entries())
    out << json{{"context", e.context}, {"partition", to_string(e.partition)}}.dump() << '\n';
}

void write_relabeled(std::ostream& out, std::span<const Relabeled> rows) {
  for (const auto& r : rows) {
    out << json{{"id", r.record.id},
                {"gold_label", to_string(r.record.gold_label)},
                {"predicted", to_string(r.label)},
                {"agreement", r.agreement},
                {"status", to_string(r.status)}}
               .dump()
        << '\n';
  }
}

}  // namespace monolog
