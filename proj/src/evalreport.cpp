#include "monolog/evalreport.hpp"

#include <cctype>
#include <iomanip>
#include <istream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "monolog/errors.hpp"

namespace monolog {

Percent Percent::of(std::uint64_t correct, std::uint64_t total) {
  return from_hundredths(static_cast<std::int64_t>((2 * correct * 10000 + total) / (2 * total)));
}

Percent Percent::parse(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::int64_t whole = 0;
  std::size_t i = 0;
  bool digits = false;
  for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i, digits = true) whole = whole * 10 + (s[i] - '0');
  std::int64_t frac = 0;
  int frac_digits = 0;
  bool round_up = false;
  if (i < s.size() && s[i] == '.') {
    for (++i; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i, digits = true) {
      if (frac_digits < 2) {
        frac = frac * 10 + (s[i] - '0');
        ++frac_digits;
      } else if (frac_digits == 2) {
        round_up = s[i] >= '5';
        ++frac_digits;
      }
    }
  }
  if (!digits || i != s.size()) throw SyntaxError("not a percentage: '" + std::string(text) + "'");
  while (frac_digits < 2) frac *= 10, ++frac_digits;
  std::int64_t h = whole * 100 + frac + (round_up ? 1 : 0);
  return from_hundredths(negative ? -h : h);
}

std::string Percent::str() const {
  const std::int64_t mag = hundredths_ < 0 ? -hundredths_ : hundredths_;
  std::ostringstream out;
  if (hundredths_ < 0) out << '-';
  out << mag / 100 << '.' << std::setw(2) << std::setfill('0') << mag % 100;
  return out.str();
}

StratifiedReport score(std::span<const GoldRecord> gold, std::span<const PredictionRecord> preds,
                       std::optional<Percent> baseline) {
  std::map<std::string, EntailmentLabel> predicted;
  for (const auto& p : preds) {
    if (!predicted.emplace(p.id, p.predicted).second)
      throw ScoreError(ScoreError::Kind::DuplicatePrediction, "duplicate prediction for id '" + p.id + "'");
  }
  StratifiedReport report;
  std::set<std::string> seen;
  for (const auto& g : gold) {
    if (!seen.insert(g.id).second) throw ScoreError(ScoreError::Kind::DuplicateGold, "duplicate gold id '" + g.id + "'");
    auto it = predicted.find(g.id);
    if (it == predicted.end())
      throw ScoreError(ScoreError::Kind::MissingPrediction, "no prediction for id '" + g.id + "'");
    StratumScore& stratum = g.monotonicity == Monotonicity::Upward ? report.upward : report.downward;
    const bool hit = it->second == g.gold_label;
    ++stratum.count;
    ++report.all.count;
    stratum.correct += hit;
    report.all.correct += hit;
  }
  if (seen.size() != predicted.size()) {
    for (const auto& [id, _] : predicted)
      if (!seen.count(id))
        throw ScoreError(ScoreError::Kind::UnexpectedPrediction, "prediction for unknown id '" + id + "'");
  }
  for (StratumScore* s : {&report.upward, &report.downward, &report.all})
    if (s->count) s->accuracy = Percent::of(s->correct, s->count);
  report.baseline = baseline;
  if (baseline && report.all.accuracy) report.delta = *report.all.accuracy - *baseline;
  return report;
}

namespace {

std::string accuracy_text(const StratumScore& s) { return s.accuracy ? s.accuracy->str() : "-"; }

}  // namespace

std::string format_table(const StratifiedReport& r) {
  std::ostringstream out;
  auto row = [&](std::string_view name, const StratumScore& s) {
    out << std::left << std::setw(10) << name << std::right << std::setw(9) << s.correct << std::setw(9) << s.count
        << std::setw(10) << accuracy_text(s) << '\n';
  };
  out << std::left << std::setw(10) << "stratum" << std::right << std::setw(9) << "correct" << std::setw(9) << "count"
      << std::setw(10) << "accuracy" << '\n';
  row("upward", r.upward);
  row("downward", r.downward);
  row("all", r.all);
  if (r.baseline) out << std::left << std::setw(28) << "baseline" << std::right << std::setw(10) << r.baseline->str() << '\n';
  if (r.delta) out << std::left << std::setw(28) << "delta" << std::right << std::setw(10) << r.delta->str() << '\n';
  return out.str();
}

std::string format_json(const StratifiedReport& r) {
  auto stratum = [](const StratumScore& s) {
    return "{\"accuracy\":" + (s.accuracy ? s.accuracy->str() : std::string("null")) +
           ",\"correct\":" + std::to_string(s.correct) + ",\"count\":" + std::to_string(s.count) + "}";
  };
  std::string out = "{\"upward\":" + stratum(r.upward) + ",\"downward\":" + stratum(r.downward) +
                    ",\"all\":" + stratum(r.all);
  if (r.baseline) out += ",\"baseline\":" + r.baseline->str();
  if (r.delta) out += ",\"delta\":" + r.delta->str();
  return out + "}";
}

namespace {

using nlohmann::json;

template <typename F>
void for_each_row(std::istream& in, F&& f) {
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
    auto field = [&](const char* name) {
      if (!j.is_object() || !j.contains(name) || !j[name].is_string())
        throw FileFormatError(std::string("missing string field '") + name + "'", lineno);
      return j[name].get<std::string>();
    };
    try {
      f(field);
    } catch (const SyntaxError& e) {
      throw ScoreError(ScoreError::Kind::UnknownLabel, "line " + std::to_string(lineno) + ": " + e.what());
    }
  }
}

}  // namespace

std::vector<GoldRecord> read_gold(std::istream& in) {
  std::vector<GoldRecord> out;
  for_each_row(in, [&](auto field) {
    const std::string mon = field("monotonicity");
    if (mon != "upward_monotone" && mon != "downward_monotone")
      throw SyntaxError("gold monotonicity must be upward_monotone or downward_monotone, got '" + mon + "'");
    out.push_back({field("id"), parse_label(field("gold_label")), parse_monotonicity(mon)});
  });
  return out;
}

std::vector<PredictionRecord> read_predictions(std::istream& in) {
  std::vector<PredictionRecord> out;
  for_each_row(in, [&](auto field) { out.push_back({field("id"), parse_label(field("predicted"))}); });
  return out;
}

}  // namespace monolog
