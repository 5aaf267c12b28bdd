// Command-line driver: one subcommand per pipeline stage.
//
// Exit codes: 0 success, 1 a boolean query answered false, 2 usage or I/O
// error, 3 malformed input data.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "monolog/dataset.hpp"
#include "monolog/errors.hpp"
#include "monolog/evalreport.hpp"
#include "monolog/labeler.hpp"
#include "monolog/logic.hpp"
#include "monolog/model.hpp"
#include "monolog/selfcheck.hpp"
#include "monolog/surface.hpp"
#include "monolog/taxonomy.hpp"

namespace {

using namespace monolog;

enum Exit { kOk = 0, kFalse = 1, kUsage = 2, kData = 3 };

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::ios_base::failure("cannot write " + path);
  return out;
}

std::optional<ContextRegistry> registry_from(const std::string& path) {
  if (path.empty()) return std::nullopt;
  return ContextRegistry::load(path);
}

Theory read_theory(const std::string& path, const std::optional<ContextRegistry>& registry) {
  auto in = open_in(path);
  return Theory(read_sentences(in, registry ? &*registry : nullptr));
}

// A context given on the command line: a template when it contains the
// variable token, otherwise an abstract identifier.
ContextSymbol context_arg(const std::string& text) {
  const auto tokens = tokenize(text);
  for (const auto& t : tokens)
    if (is_variable_token(t.text)) return ContextTemplate(tokens).context();
  return ContextSymbol(text);
}

std::string_view status_name(MonotonicityStatus s) {
  switch (s) {
    case MonotonicityStatus::UpwardOnly: return "upward_only";
    case MonotonicityStatus::DownwardOnly: return "downward_only";
    case MonotonicityStatus::Both: return "both";
    case MonotonicityStatus::None: break;
  }
  return "none";
}

int verdict(bool value) {
  std::cout << (value ? "true" : "false") << '\n';
  return value ? kOk : kFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"monolog: context monotonicity logic and NLI dataset tools"};
  app.require_subcommand(1);

  std::string theory_path, registry_path, query, out_path, model_path, context_text;
  auto* entail = app.add_subcommand("entail", "Decide whether a theory derives a sentence");
  entail->add_option("theory", theory_path, "Theory file")->required();
  entail->add_option("query", query, "Sentence in either stylization")->required();
  entail->add_option("--registry", registry_path, "Context registry file");

  std::string style = "symbolic";
  auto* closure_cmd = app.add_subcommand("closure", "Print the deductive closure, sorted");
  closure_cmd->add_option("theory", theory_path, "Theory file")->required();
  closure_cmd->add_option("--registry", registry_path, "Context registry file");
  closure_cmd->add_option("--style", style, "natural or symbolic")->check(CLI::IsMember({"natural", "symbolic"}));

  auto* canonical = app.add_subcommand("canonical", "Write the canonical model of a theory");
  canonical->add_option("theory", theory_path, "Theory file")->required();
  canonical->add_option("out", out_path, "Model file to write ('-' for stdout)")->required();
  canonical->add_option("--registry", registry_path, "Context registry file");

  auto* modelcheck = app.add_subcommand("modelcheck", "Evaluate a sentence in a finite model");
  modelcheck->add_option("model", model_path, "Model file")->required();
  modelcheck->add_option("sentence", query, "Sentence")->required();

  auto* classify = app.add_subcommand("classify", "Monotonicity status of a context under a theory");
  classify->add_option("theory", theory_path, "Theory file")->required();
  classify->add_option("context", context_text, "Context identifier or template")->required();
  classify->add_option("--registry", registry_path, "Context registry file");

  std::string mon_text, rel_text;
  auto* label_cmd = app.add_subcommand("label", "Entailment label from monotonicity and concept relation");
  label_cmd->add_option("--mon", mon_text, "up or down")->required();
  label_cmd->add_option("--rel", rel_text, "equivalent, forward, reverse or unknown")->required();

  std::string premise, hypothesis, taxonomy_path, annotations_path;
  auto* label_pair_cmd = app.add_subcommand("label-pair", "Label a premise/hypothesis pair symbolically");
  label_pair_cmd->add_option("--premise", premise)->required();
  label_pair_cmd->add_option("--hypothesis", hypothesis)->required();
  label_pair_cmd->add_option("--taxonomy", taxonomy_path)->required();
  label_pair_cmd->add_option("--annotations", annotations_path)->required();

  std::string in_path, rejects_path;
  auto* convert = app.add_subcommand("convert-help", "Extract HELP-Contexts from HELP records");
  convert->add_option("--in", in_path, "HELP records (JSONL)")->required();
  convert->add_option("--out", out_path, "Context records to write (JSONL)")->required();
  convert->add_option("--rejects", rejects_path, "Rejected records to write (JSONL)")->required();

  std::string contexts_path, ratio_text = "50:20:30", records_path, out_dir;
  std::uint64_t seed = 0;
  auto* split = app.add_subcommand("split", "Split contexts, and optionally NLI records, by context");
  split->add_option("--contexts", contexts_path, "Context records (JSONL)")->required();
  split->add_option("--ratio", ratio_text, "train:dev:test weights");
  split->add_option("--seed", seed, "Shuffle seed")->required();
  split->add_option("--out", out_path, "Assignment to write (JSONL); stdout if omitted");
  split->add_option("--records", records_path, "HELP records to route into the splits");
  split->add_option("--out-dir", out_dir, "Directory for train/dev/test/rejects JSONL");

  std::string gold_path, pred_path, baseline_text, json_path;
  auto* eval = app.add_subcommand("eval", "Monotonicity-stratified accuracy report");
  eval->add_option("--gold", gold_path, "Gold records (JSONL)")->required();
  eval->add_option("--pred", pred_path, "Predictions (JSONL)")->required();
  eval->add_option("--baseline", baseline_text, "Baseline accuracy, e.g. 93.14");
  eval->add_option("--json", json_path, "Also write the report as JSON to this file");

  auto* relabel = app.add_subcommand("relabel", "Label HELP records symbolically and compare with gold");
  relabel->add_option("--in", in_path, "HELP records (JSONL)")->required();
  relabel->add_option("--taxonomy", taxonomy_path)->required();
  relabel->add_option("--out", out_path, "Rows to write (JSONL)")->required();

  std::size_t trials = 0;
  bool reflexive = false;
  auto* selfcheck = app.add_subcommand("selfcheck", "Randomized soundness and canonical-model agreement checks");
  selfcheck->add_option("--trials", trials, "Models and theories to generate")->required();
  selfcheck->add_option("--seed", seed, "Generator seed")->required();
  selfcheck->add_flag("--reflexive-arbitrary", reflexive,
                      "Draw only reflexive relations for arbitrary contexts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const auto registry = registry_from(registry_path);
    const ContextRegistry* reg = registry ? &*registry : nullptr;

    if (*entail) {
      const Theory gamma = read_theory(theory_path, registry);
      return verdict(entails(gamma, parse_sentence(query, reg)));
    }
    if (*closure_cmd) {
      const Theory closed = closure(read_theory(theory_path, registry));
      std::vector<std::string> lines;
      for (const auto& s : closed) lines.push_back(format_sentence(s, Style::Symbolic));
      std::sort(lines.begin(), lines.end());
      for (const auto& l : lines)
        std::cout << (style == "symbolic" ? l : format_sentence(parse_sentence(l), Style::Natural)) << '\n';
      return kOk;
    }
    if (*canonical) {
      const FiniteModel m = build_canonical_model(read_theory(theory_path, registry));
      if (out_path == "-") {
        write_model(std::cout, m);
      } else {
        auto out = open_out(out_path);
        write_model(out, m);
      }
      return kOk;
    }
    if (*modelcheck) {
      const FiniteModel m = load_model(model_path);
      return verdict(model_check(m, parse_sentence(query)));
    }
    if (*classify) {
      const Theory gamma = read_theory(theory_path, registry);
      std::cout << status_name(classify_context(gamma, context_arg(context_text))) << '\n';
      return kOk;
    }
    if (*label_cmd) {
      std::cout << to_string(label(parse_monotonicity(mon_text), parse_relation(rel_text))) << '\n';
      return kOk;
    }
    if (*label_pair_cmd) {
      const TaxonomyGraph g = load_taxonomy(taxonomy_path);
      const Annotations ann = load_annotations(annotations_path);
      const LabeledPair lp = label_pair(premise, hypothesis, g, ann);
      nlohmann::json j = {{"label", to_string(lp.label)}, {"relation", to_string(lp.relation)}};
      j["context"] = lp.context ? nlohmann::json(lp.context->text()) : nlohmann::json(nullptr);
      j["a"] = lp.a ? nlohmann::json(lp.a->name()) : nlohmann::json(nullptr);
      j["b"] = lp.b ? nlohmann::json(lp.b->name()) : nlohmann::json(nullptr);
      std::cout << j.dump() << '\n';
      return kOk;
    }
    if (*convert) {
      auto in = open_in(in_path);
      const auto records = read_help_records(in);
      const Conversion conv = convert_help(records);
      auto out = open_out(out_path);
      write_context_records(out, conv.contexts);
      auto rej = open_out(rejects_path);
      write_rejects(rej, conv.rejects);
      std::cerr << records.size() << " records, " << conv.contexts.size() << " contexts, " << conv.rejects.size()
                << " rejects\n";
      return kOk;
    }
    if (*split) {
      auto in = open_in(contexts_path);
      const auto contexts = read_context_records(in);
      const SplitAssignment assignment = split_contexts(contexts, seed, SplitRatio::parse(ratio_text));
      if (out_path.empty()) {
        write_assignment(std::cout, assignment);
      } else {
        auto out = open_out(out_path);
        write_assignment(out, assignment);
      }
      if (!records_path.empty()) {
        if (out_dir.empty()) throw CLI::RequiresError("--records", "--out-dir");
        auto rin = open_in(records_path);
        const auto records = read_help_records(rin);
        const NliSplit nli = split_nli(records, assignment);
        const std::filesystem::path dir(out_dir);
        std::filesystem::create_directories(dir);
        auto emit = [&](const char* name, const std::vector<HelpRecord>& rows) {
          auto out = open_out((dir / name).string());
          write_help_records(out, rows);
        };
        emit("train.jsonl", nli.train);
        emit("dev.jsonl", nli.dev);
        emit("test.jsonl", nli.test);
        auto rej = open_out((dir / "rejects.jsonl").string());
        write_rejects(rej, nli.rejects);
      }
      return kOk;
    }
    if (*eval) {
      auto gin = open_in(gold_path);
      auto pin = open_in(pred_path);
      const auto gold = read_gold(gin);
      const auto preds = read_predictions(pin);
      std::optional<Percent> baseline;
      if (!baseline_text.empty()) baseline = Percent::parse(baseline_text);
      const StratifiedReport report = score(gold, preds, baseline);
      std::cout << format_table(report);
      if (!json_path.empty()) {
        auto out = open_out(json_path);
        out << format_json(report) << '\n';
      }
      return kOk;
    }
    if (*relabel) {
      auto in = open_in(in_path);
      const auto records = read_help_records(in);
      const auto rows = relabel_with_oracle(records, load_taxonomy(taxonomy_path));
      auto out = open_out(out_path);
      write_relabeled(out, rows);
      std::size_t agree = 0, unknown = 0;
      for (const auto& r : rows) {
        agree += r.agreement;
        unknown += r.status == RelabelStatus::UnknownRelation;
      }
      std::cout << "records " << rows.size() << "\nagreement " << agree << "\nunknown-relation " << unknown << '\n';
      return kOk;
    }
    if (*selfcheck) {
      if (trials == 0) {
        std::cerr << "--trials must be at least 1\n";
        return kUsage;
      }
      SelfCheckOptions options;
      options.trials = trials;
      options.seed = seed;
      options.models.reflexive_arbitrary = reflexive;
      const SelfCheckReport report = run_selfcheck(options);
      std::cout << describe(report);
      return report.ok() ? kOk : kFalse;
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const monolog::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kData;
  }
  return kUsage;
}
