#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "monolog/labeler.hpp"

namespace monolog {

// A percentage with two decimals, held as an integer count of hundredths so
// reports and deltas are exact.
class Percent {
 public:
  constexpr Percent() = default;
  static constexpr Percent from_hundredths(std::int64_t h) {
    Percent p;
    p.hundredths_ = h;
    return p;
  }
  // correct / total * 100, rounded half-up to two decimals. total > 0.
  static Percent of(std::uint64_t correct, std::uint64_t total);
  // "93.14", "-10.8", "100"; extra decimals are rounded half-up.
  static Percent parse(std::string_view text);

  constexpr std::int64_t hundredths() const { return hundredths_; }
  std::string str() const;

  friend constexpr Percent operator-(Percent a, Percent b) { return from_hundredths(a.hundredths_ - b.hundredths_); }
  friend constexpr bool operator==(Percent, Percent) = default;

 private:
  std::int64_t hundredths_ = 0;
};

struct GoldRecord {
  std::string id;
  EntailmentLabel gold_label;
  Monotonicity monotonicity;
};

struct PredictionRecord {
  std::string id;
  EntailmentLabel predicted;
};

struct StratumScore {
  std::uint64_t correct = 0;
  std::uint64_t count = 0;
  std::optional<Percent> accuracy;  // absent for an empty stratum
};

struct StratifiedReport {
  StratumScore upward;
  StratumScore downward;
  StratumScore all;  // micro-average
  std::optional<Percent> baseline;
  std::optional<Percent> delta;  // all - baseline
};

// Throws ScoreError for missing, duplicate or unexpected prediction ids.
StratifiedReport score(std::span<const GoldRecord> gold, std::span<const PredictionRecord> preds,
                       std::optional<Percent> baseline = std::nullopt);

std::string format_table(const StratifiedReport& report);
std::string format_json(const StratifiedReport& report);

// Line-delimited JSON: gold rows carry id, gold_label, monotonicity
// (upward_monotone | downward_monotone); prediction rows carry id, predicted.
std::vector<GoldRecord> read_gold(std::istream& in);
std::vector<PredictionRecord> read_predictions(std::istream& in);

}  // namespace monolog
