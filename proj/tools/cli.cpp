#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "ngstem/checks/acceptance.hpp"
#include "ngstem/corpus_index.hpp"
#include "ngstem/errors.hpp"
#include "ngstem/fixtures.hpp"
#include "ngstem/report.hpp"
#include "ngstem/stemmer.hpp"

namespace ngstem::cli {
namespace {

struct RunConfig {
  std::string corpus;
  bool raw_text = false;
  std::size_t top = 10;

  std::vector<std::string> words;
  std::string input;
  std::uint64_t gamma = 0;
  std::uint64_t floor = 0;
  bool no_oov_passthrough = false;
  bool trace = false;
  unsigned workers = 1;

  std::string pairs;
  double alpha = 0.05;
  bool records = false;
  bool continuity_correction = false;
  bool tie_correction = false;

  std::string data_dir;

  OutputFormat format = OutputFormat::tsv;
  std::string out;
};

// Writes to --out when given, otherwise to the caller's stream.
bool emit(const RunConfig& config, const std::string& text, std::ostream& out, std::ostream& err) {
  if (config.out.empty()) {
    out << text;
    return true;
  }
  std::ofstream file(config.out, std::ios::binary);
  if (!file || !(file << text)) {
    err << "error: cannot write '" << config.out << "'\n";
    return false;
  }
  return true;
}

PrefixFrequencyIndex load_index(const RunConfig& config) {
  const auto entries = load_corpus(config.corpus, config.raw_text);
  return PrefixFrequencyIndex::build(entries);
}

int index_stats(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const PrefixFrequencyIndex index = load_index(config);
  std::ostringstream text;
  text << "entries=" << index.entry_count() << " tokens=" << index.total_tokens() << '\n';
  for (const auto& [prefix, count] : index.top_prefixes(StemmerConfig::min_word_len, config.top)) {
    text << encode_utf8(prefix) << '\t' << count << '\n';
  }
  return emit(config, text.str(), out, err) ? kExitOk : kExitInputError;
}

std::vector<Token> split_words(std::string_view utf8, std::size_t line_no) {
  Token text;
  try {
    text = decode_utf8(utf8);
  } catch (const std::invalid_argument& e) {
    throw InputError(line_no, e.what());
  }
  std::vector<Token> words;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !is_space(text[j])) ++j;
    if (j > i) words.push_back(text.substr(i, j - i));
    i = j;
  }
  return words;
}

int stem_words(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::vector<Token> words;
  for (const std::string& arg : config.words) {
    for (Token& w : split_words(arg, 0)) words.push_back(std::move(w));
  }
  if (!config.input.empty()) {
    std::ifstream in(config.input, std::ios::binary);
    if (!in) throw InputError(0, "cannot open input '" + config.input + "'");
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      for (Token& w : split_words(line, ++line_no)) words.push_back(std::move(w));
    }
  }
  if (words.empty()) {
    err << "error: no words to stem\n";
    return kExitInputError;
  }

  const PrefixFrequencyIndex index = load_index(config);
  StemmerConfig stemmer;
  stemmer.gamma = config.gamma;
  stemmer.frequency_floor = config.floor;
  stemmer.oov_passthrough = !config.no_oov_passthrough;

  const auto batch = stem_batch(index, words, stemmer, config.workers);
  std::vector<StemResult> results;
  results.reserve(batch.size());
  for (std::size_t k = 0; k < batch.size(); ++k) {
    if (!batch[k].result) {
      err << "error: word " << (k + 1) << ": " << batch[k].error << '\n';
      return kExitInputError;
    }
    results.push_back(*batch[k].result);
  }
  return emit(config, format_stems(results, config.format, config.trace), out, err)
             ? kExitOk
             : kExitInputError;
}

int evaluate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::ifstream in(config.pairs, std::ios::binary);
  if (!in) throw InputError(0, "cannot open pairs file '" + config.pairs + "'");
  const WilcoxonOptions options{.continuity_correction = config.continuity_correction,
                                .tie_correction = config.tie_correction};
  const EvaluationRun run = run_evaluation(in, config.alpha, options);
  if (!emit(config, format_report(run.report, config.format, config.records), out, err)) {
    return kExitInputError;
  }
  if (!run.mismatches.empty()) {
    err << "distance mismatches (" << run.mismatches.size() << "):\n"
        << format_mismatches(run.mismatches);
    return kExitValidationMismatch;
  }
  return kExitOk;
}

int selftest(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const FixtureSet fixtures =
      config.data_dir.empty() ? bundled_fixtures() : load_fixtures(config.data_dir);
  const auto checks = checks::run_acceptance(fixtures);
  if (!emit(config, checks::format_checks(checks), out, err)) return kExitInputError;
  return checks::all_passed(checks) ? kExitOk : kExitCheckFailed;
}

void add_output_options(CLI::App* cmd, RunConfig& config) {
  const std::map<std::string, OutputFormat> formats{{"tsv", OutputFormat::tsv},
                                                    {"json", OutputFormat::json}};
  cmd->add_option("--format", config.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  cmd->add_option("--out", config.out, "Write output to PATH instead of stdout");
}

void add_corpus_options(CLI::App* cmd, RunConfig& config) {
  cmd->add_option("--corpus", config.corpus, "Corpus file (word<TAB>count, or text with --raw-text)")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_flag("--raw-text", config.raw_text, "Treat the corpus as running text");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"N-gram prefix-frequency stemmer and stemmer comparison"};
  app.name("ngstem");
  app.require_subcommand(1);

  CLI::App* index_cmd = app.add_subcommand("index", "Corpus index commands");
  index_cmd->require_subcommand(1);
  CLI::App* stats_cmd = index_cmd->add_subcommand("stats", "Entry count, token total, top 4-grams");
  add_corpus_options(stats_cmd, config);
  stats_cmd->add_option("--top", config.top, "Number of 4-character prefixes to list");
  stats_cmd->add_option("--out", config.out, "Write output to PATH instead of stdout");

  CLI::App* stem_cmd = app.add_subcommand("stem", "Stem words against a corpus");
  add_corpus_options(stem_cmd, config);
  stem_cmd->add_option("words", config.words, "Words to stem");
  stem_cmd->add_option("--input", config.input, "File of whitespace-separated words")
      ->check(CLI::ExistingFile);
  stem_cmd->add_option("--gamma", config.gamma, "Frequency drop treated as no drop")
      ->check(CLI::NonNegativeNumber);
  stem_cmd->add_option("--floor", config.floor, "Prefix counts below this read as 0")
      ->check(CLI::NonNegativeNumber);
  stem_cmd->add_flag("--no-oov-passthrough", config.no_oov_passthrough,
                     "Stem words whose 4-gram is absent from the corpus");
  stem_cmd->add_flag("--trace", config.trace, "Include the per-step trace");
  stem_cmd->add_option("--workers", config.workers, "Stemming threads")
      ->check(CLI::Range(1u, 256u));
  add_output_options(stem_cmd, config);

  CLI::App* eval_cmd = app.add_subcommand("eval", "Compare two stemmers on a pairs file");
  eval_cmd->add_option("pairs", config.pairs, "word<TAB>stem_a<TAB>stem_b[<TAB>ld_a<TAB>ld_b]")
      ->required()
      ->check(CLI::ExistingFile);
  eval_cmd->add_option("--alpha", config.alpha, "Significance level, in (0, 1)");
  eval_cmd->add_flag("--records", config.records, "Include per-row distances");
  eval_cmd->add_flag("--continuity-correction", config.continuity_correction,
                     "Apply a continuity correction to z");
  eval_cmd->add_flag("--tie-correction", config.tie_correction,
                     "Use the variance of the tied ranks");
  add_output_options(eval_cmd, config);

  CLI::App* selftest_cmd = app.add_subcommand("selftest", "Run the bundled reproduction checks");
  selftest_cmd->add_option("--data-dir", config.data_dir, "Load fixtures from DIR")
      ->check(CLI::ExistingDirectory);
  selftest_cmd->add_option("--out", config.out, "Write output to PATH instead of stdout");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    CLI::App* target = &app;
    while (!target->get_subcommands().empty()) target = target->get_subcommands().front();
    out << target->help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  if (!(config.alpha > 0.0 && config.alpha < 1.0)) {
    err << "error: --alpha must lie strictly between 0 and 1\n";
    return kExitInputError;
  }

  try {
    if (*stats_cmd) return index_stats(config, out, err);
    if (*stem_cmd) return stem_words(config, out, err);
    if (*eval_cmd) return evaluate(config, out, err);
    if (*selftest_cmd) return selftest(config, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace ngstem::cli
