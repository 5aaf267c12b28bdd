#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "monolog/labeler.hpp"
#include "monolog/surface.hpp"
#include "monolog/taxonomy.hpp"

namespace monolog {

enum class HelpMonotonicity { Upward, Downward, NonMonotone };

std::string_view to_string(HelpMonotonicity m);  // upward_monotone | downward_monotone | non_monotone
HelpMonotonicity parse_help_monotonicity(std::string_view text);

// One NLI example: premise p(a), hypothesis p(b).
struct HelpRecord {
  std::string id;
  std::string premise;
  std::string hypothesis;
  EntailmentLabel gold_label = EntailmentLabel::Neutral;
  HelpMonotonicity monotonicity = HelpMonotonicity::Upward;
  friend bool operator==(const HelpRecord&, const HelpRecord&) = default;
};

// One context-classification example.
struct ContextRecord {
  std::string context;  // template text with the "x" slot
  Monotonicity monotonicity = Monotonicity::Upward;
  friend bool operator==(const ContextRecord&, const ContextRecord&) = default;
};

struct Reject {
  std::string id;
  std::string reason;
  std::string detail;
};

struct Extraction {
  ContextTemplate context;
  ConceptSymbol a;
  ConceptSymbol b;
};

// True when the two strings tokenize to the same token texts.
bool same_tokens(std::string_view x, std::string_view y);

// Token-level diff: the longest common prefix and suffix form the context and
// the differing middle spans become a (premise side) and b (hypothesis side).
// When one sentence is the other with a phrase inserted, the shared boundary
// token is given back to both spans from the prefix side, so
// "Some dogs with hats ran ." / "Some dogs ran ." yields "Some x ran .".
Extraction extract_context(std::string_view premise, std::string_view hypothesis);

struct Conversion {
  std::vector<ContextRecord> contexts;
  std::vector<Reject> rejects;
};

// Drops non-monotone records, extracts contexts, and deduplicates them by
// context id keeping the first monotonicity seen. Output order follows input
// order. Failures and conflicting duplicates go to `rejects`.
Conversion convert_help(std::span<const HelpRecord> records);

enum class Partition { Train, Dev, Test };
std::string_view to_string(Partition p);

struct SplitRatio {
  unsigned train = 50;
  unsigned dev = 20;
  unsigned test = 30;
  static SplitRatio parse(std::string_view text);  // "50:20:30"
};

class SplitAssignment {
 public:
  struct Entry {
    ContextSymbol id;
    std::string context;
    Partition partition;
  };

  SplitAssignment() = default;
  explicit SplitAssignment(std::vector<Entry> entries);

  std::optional<Partition> partition_of(const ContextSymbol& id) const;
  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t count(Partition p) const;

 private:
  std::vector<Entry> entries_;
  std::map<ContextSymbol, Partition> index_;
};

// Sizes for n items under a ratio, by largest remainder; ties go to the
// partition with the larger quota, then to train, dev, test in that order.
std::array<std::size_t, 3> partition_sizes(std::size_t n, const SplitRatio& ratio);

// Sorts contexts by id, shuffles them with a seeded Fisher-Yates pass and
// cuts contiguous train/dev/test blocks.
SplitAssignment split_contexts(std::span<const ContextRecord> contexts, std::uint64_t seed,
                               const SplitRatio& ratio = {});

struct NliSplit {
  std::vector<HelpRecord> train;
  std::vector<HelpRecord> dev;
  std::vector<HelpRecord> test;
  std::vector<Reject> rejects;
};

NliSplit split_nli(std::span<const HelpRecord> records, const SplitAssignment& assignment);

enum class RelabelStatus { Ok, UnknownRelation, ExtractionFailed, NonMonotone };
std::string_view to_string(RelabelStatus s);

struct Relabeled {
  HelpRecord record;
  EntailmentLabel label;
  bool agreement;
  RelabelStatus status;
};

// Labels each record symbolically, using the record's own monotonicity field
// as the context annotation.
std::vector<Relabeled> relabel_with_oracle(std::span<const HelpRecord> records, const TaxonomyGraph& g);

// Line-delimited JSON. Readers report FileFormatError with line numbers.
std::vector<HelpRecord> read_help_records(std::istream& in);
void write_help_records(std::ostream& out, std::span<const HelpRecord> records);
std::vector<ContextRecord> read_context_records(std::istream& in);
void write_context_records(std::ostream& out, std::span<const ContextRecord> records);
void write_rejects(std::ostream& out, std::span<const Reject> rejects);
void write_assignment(std::ostream& out, const SplitAssignment& assignment);
void write_relabeled(std::ostream& out, std::span<const Relabeled> rows);

}  // namespace monolog
